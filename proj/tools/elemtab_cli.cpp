// elemtab: command-line analysis of tableau spec files.
//
// Exit codes: 0 success, 1 analysis error, 2 input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "elemtab/fixtures.hpp"
#include "elemtab/report.hpp"
#include "elemtab/specio.hpp"

namespace {

using namespace elemtab;

constexpr int kOk = 0, kAnalysisError = 1, kInputError = 2;

struct Options {
    std::string path;
    std::string fixture;
    std::uint64_t seed = 0;
    bool seed_given = false;
    bool json = false;
    std::size_t max_minors = 0, rounds = 0;
};

/// Raised for input problems that are not library errors (I/O).
struct InputFailure {
    std::string kind, message;
};

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputFailure{"IOError", "cannot read '" + path + "'"};
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int report_error(const Options& opt, const std::string& kind, const std::string& message, int code,
                 const ParseError* parse = nullptr) {
    if (opt.json) {
        Json err{{"kind", kind}, {"message", message}, {"exit_code", code}};
        if (parse) {
            err["line"] = parse->line();
            err["column"] = parse->column();
        }
        std::cout << Json{{"error", err}}.dump(2) << "\n";
    } else {
        std::cerr << "error (" << kind << "): " << message;
        if (parse) std::cerr << " at line " << parse->line() << ", column " << parse->column();
        std::cerr << "\n";
    }
    return code;
}

/// Runs body, mapping exceptions from the input phase to exit 2 and
/// from the analysis phase to exit 1.
template <class Body>
int guarded(const Options& opt, Body body) {
    bool analysing = false;
    try {
        return body(analysing);
    } catch (const InputFailure& e) {
        return report_error(opt, e.kind, e.message, kInputError);
    } catch (const ParseError& e) {
        return report_error(opt, e.kind(), e.what(), kInputError, &e);
    } catch (const Error& e) {
        return report_error(opt, e.kind(), e.what(), analysing ? kAnalysisError : kInputError);
    } catch (const std::exception& e) {
        return report_error(opt, "InternalError", e.what(), kAnalysisError);
    }
}

struct Loaded {
    Tableau tableau;
    std::uint64_t seed;
    CharConfig cfg;
};

Loaded load(const Options& opt) {
    const TableauSpec spec = parse_spec(read_input(opt.path));
    const std::uint64_t seed = opt.seed_given ? opt.seed : spec.seed.value_or(0);
    CharConfig cfg = spec.caps.apply({});
    if (opt.max_minors) cfg.max_minors = opt.max_minors;
    if (opt.rounds) cfg.stable_rounds = opt.rounds;
    return {spec.build(seed), seed, cfg};
}

void emit(const Options& opt, const Json& json, const std::string& text) {
    if (opt.json)
        std::cout << json.dump(2) << "\n";
    else
        std::cout << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact analysis of involutive tableaux"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    auto* seed = app.add_option("--seed", opt.seed, "Seed for all randomized steps (default 0, or the file's seed)");
    app.add_flag("--json", opt.json, "Emit JSON instead of text");
    app.add_option("--max-minors", opt.max_minors, "Cap on r x r minors")->check(CLI::PositiveNumber);
    app.add_option("--rounds", opt.rounds, "Stable slicing rounds needed to fix the span")->check(CLI::PositiveNumber);

    auto file_command = [&](const char* name, const char* help) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("file", opt.path, "Tableau spec file, or - for stdin")->required();
        return sub;
    };
    auto* analyze_cmd = file_command("analyze", "Full report: invariants, verdicts and the elementary flag");
    auto* involutive_cmd = file_command("involutive", "Three-way involutivity verdict");
    auto* charideal_cmd = file_command("charideal", "Reduced Groebner basis of the characteristic ideal");
    auto* flag_cmd = file_command("flag", "The elementary flag X^0 > X^1 > ...");
    auto* fixtures_cmd = app.add_subcommand("fixtures", "Built-in example tableaux");
    fixtures_cmd->require_subcommand(1);
    auto* list_cmd = fixtures_cmd->add_subcommand("list", "Print fixture names");
    auto* emit_cmd = fixtures_cmd->add_subcommand("emit", "Print a fixture as a spec file");
    emit_cmd->add_option("name", opt.fixture, "Fixture name")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        if (opt.json) return report_error(opt, "UsageError", e.what(), kInputError);
        app.exit(e);
        return kInputError;
    }
    opt.seed_given = seed->count() > 0;

    if (*analyze_cmd)
        return guarded(opt, [&](bool& analysing) {
            const Loaded in = load(opt);
            analysing = true;
            const Analysis a = analyze(in.tableau, in.seed, in.cfg);
            emit(opt, to_json(a), to_text(a));
            return kOk;
        });
    if (*involutive_cmd)
        return guarded(opt, [&](bool& analysing) {
            const Loaded in = load(opt);
            analysing = true;
            const InvolutivityVerdict v = involutivity(in.tableau);
            emit(opt, to_json(v), to_text(v));
            return v.consistent() ? kOk : kAnalysisError;
        });
    if (*charideal_cmd)
        return guarded(opt, [&](bool& analysing) {
            const Loaded in = load(opt);
            analysing = true;
            const Ideal ideal = char_ideal(in.tableau, in.cfg);
            emit(opt, ideal_json(ideal), ideal_text(ideal));
            return kOk;
        });
    if (*flag_cmd)
        return guarded(opt, [&](bool& analysing) {
            const Loaded in = load(opt);
            analysing = true;
            const ReductionFlag f = elem_flag(in.tableau, in.seed, in.cfg);
            Json j{{"flag", to_json(f)},
                   {"depth", f.depth},
                   {"terminal", to_string(f.terminal)},
                   {"terminal_is_cauchy", f.terminal_is_cauchy}};
            emit(opt, j, to_text(f));
            return kOk;
        });
    if (*list_cmd) {
        const auto names = fixtures::names();
        emit(opt, Json{{"fixtures", names}}, [&] {
            std::string out;
            for (const auto& n : names) out += n + "\n";
            return out;
        }());
        return kOk;
    }
    if (*emit_cmd)
        return guarded(opt, [&](bool&) {
            std::cout << emit_spec(spec_of(fixtures::by_name(opt.fixture)));
            return kOk;
        });
    return kInputError;
}
