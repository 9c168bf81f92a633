#include "elemtab/report.hpp"

#include <iomanip>
#include <sstream>

namespace elemtab {

namespace {

Json vec_json(const Vec& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

Json basis_json(const std::vector<Vec>& basis) {
    Json out = Json::array();
    for (const auto& v : basis) out.push_back(vec_json(v));
    return out;
}

template <class T>
std::string tuple_text(const std::vector<T>& xs) {
    std::string out = "(";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ", ";
        if constexpr (std::is_same_v<T, Scalar>)
            out += to_string(xs[i]);
        else
            out += std::to_string(xs[i]);
    }
    return out + ")";
}

std::string vec_text(const Vec& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + to_string(v[i]);
    return out + "]";
}

std::string basis_text(const std::vector<Vec>& basis) {
    if (basis.empty()) return "(none)";
    std::string out;
    for (std::size_t i = 0; i < basis.size(); ++i) out += (i ? " " : "") + vec_text(basis[i]);
    return out;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

/// Two-column table with a fixed key width.
class Table {
public:
    void row(const std::string& key, const std::string& value) { out_ << std::left << std::setw(24) << key << value << "\n"; }
    std::string str() const { return out_.str(); }

private:
    std::ostringstream out_;
};

struct StepSummary {
    std::vector<std::size_t> characters;
    std::size_t ell = 0, L = 0;
};

StepSummary summarize(const ReductionStep& s) {
    StepSummary out;
    if (s.tableau) out.characters = s.tableau->characters();
    // Zero or empty tableaux have an empty variety: ℓ = L = 0.
    if (s.data) {
        out.ell = s.data->ell;
        out.L = s.data->L;
    }
    return out;
}

const char* mark(bool b) { return b ? "✓" : "✗"; }

}  // namespace

Analysis analyze(const Tableau& t, std::uint64_t seed, const CharConfig& cfg) {
    return {classify(t, seed, cfg), elem_flag(t, seed, cfg)};
}

bool InvolutivityVerdict::consistent() const {
    return gnf.involutive == cartan.involutive && cartan.involutive == spencer.involutive;
}

InvolutivityVerdict involutivity(const Tableau& t) { return {is_involutive_gnf(t), cartan_test(t), spencer_h_dims(t)}; }

Json to_json(const Report& r) {
    Json j;
    j["n"] = r.n;
    j["r"] = r.r;
    j["characters"] = r.characters;
    j["ell"] = r.ell;
    j["L"] = r.L;
    j["nu"] = r.nu;
    j["frobenius"] = r.frobenius;
    j["elementary"] = r.elementary;
    j["cauchy_free"] = r.cauchy_free;
    j["involutive"] = r.involutive;
    j["x1_basis"] = basis_json(r.x1_basis);
    j["S_basis"] = basis_json(r.s_basis);
    j["char_ideal_generators"] = r.char_ideal_generators;
    j["observed_degree"] = r.observed_degree ? Json(*r.observed_degree) : Json(nullptr);
    return j;
}

Json to_json(const ReductionFlag& f) {
    Json steps = Json::array();
    for (const auto& s : f.steps) {
        const StepSummary sum = summarize(s);
        Json j;
        j["level"] = s.level;
        j["dim"] = s.x.dim();
        j["basis"] = basis_json(s.x.basis_vectors());
        j["characters"] = sum.characters;
        j["ell"] = sum.ell;
        j["L"] = sum.L;
        steps.push_back(std::move(j));
    }
    return steps;
}

Json to_json(const Analysis& a) {
    Json j = to_json(a.report);
    j["flag"] = to_json(a.flag);
    j["depth"] = a.flag.depth;
    j["terminal"] = to_string(a.flag.terminal);
    j["terminal_is_cauchy"] = a.flag.terminal_is_cauchy;
    return j;
}

Json to_json(const InvolutivityVerdict& v) {
    Json j;
    j["consistent"] = v.consistent();
    j["involutive"] = v.consistent() ? Json(v.involutive()) : Json(nullptr);
    Json gnf;
    gnf["involutive"] = v.gnf.involutive;
    Json cert = Json::array();
    for (const auto& c : v.gnf.certificate) cert.push_back(c.describe());
    gnf["certificate"] = std::move(cert);
    j["gnf"] = std::move(gnf);
    j["cartan"] = {{"involutive", v.cartan.involutive}, {"dim_a1", v.cartan.dim_a1}, {"bound", v.cartan.bound}};
    j["spencer"] = {{"involutive", v.spencer.involutive}, {"dims_a", v.spencer.dims_a}, {"rows", v.spencer.rows}};
    return j;
}

Json ideal_json(const Ideal& i) {
    Json gens = Json::array();
    for (const auto& g : i.gb()) gens.push_back(to_string(g));
    return {{"nvars", i.nvars()}, {"generators", std::move(gens)}};
}

std::string to_text(const Report& r) {
    Table t;
    t.row("n", std::to_string(r.n));
    t.row("r", std::to_string(r.r));
    t.row("characters", tuple_text(r.characters));
    t.row("ell", std::to_string(r.ell));
    t.row("L", std::to_string(r.L));
    t.row("nu", std::to_string(r.nu));
    t.row("frobenius", yes_no(r.frobenius));
    t.row("elementary", yes_no(r.elementary));
    t.row("cauchy_free", yes_no(r.cauchy_free));
    t.row("involutive", yes_no(r.involutive));
    t.row("observed_degree", r.observed_degree ? std::to_string(*r.observed_degree) : "-");
    t.row("x1_basis", basis_text(r.x1_basis));
    t.row("S_basis", basis_text(r.s_basis));
    if (r.char_ideal_generators.empty()) t.row("char_ideal_generators", "(zero ideal)");
    for (std::size_t i = 0; i < r.char_ideal_generators.size(); ++i)
        t.row(i == 0 ? "char_ideal_generators" : "", r.char_ideal_generators[i]);
    return t.str();
}

std::string to_text(const ReductionFlag& f) {
    std::ostringstream out;
    out << std::left << std::setw(7) << "level" << std::setw(5) << "dim" << std::setw(16) << "characters"
        << std::setw(5) << "ell" << std::setw(5) << "L"
        << "basis\n";
    for (const auto& s : f.steps) {
        const StepSummary sum = summarize(s);
        out << std::setw(7) << s.level << std::setw(5) << s.x.dim() << std::setw(16) << tuple_text(sum.characters)
            << std::setw(5) << sum.ell << std::setw(5) << sum.L << basis_text(s.x.basis_vectors()) << "\n";
    }
    out << "terminal: " << to_string(f.terminal) << ", depth " << f.depth << ", Cauchy space "
        << (f.terminal_is_cauchy ? "reached" : "not reached") << "\n";
    return out.str();
}

std::string to_text(const Analysis& a) { return to_text(a.report) + "flag\n" + to_text(a.flag); }

std::string to_text(const InvolutivityVerdict& v) {
    std::ostringstream out;
    out << "involutive: " << (v.consistent() ? yes_no(v.involutive()) : "inconsistent") << " (gnf+ "
        << mark(v.gnf.involutive) << " cartan " << mark(v.cartan.involutive) << " spencer "
        << mark(v.spencer.involutive) << ")\n";
    out << "cartan: dim A(1) = " << v.cartan.dim_a1 << ", bound = " << v.cartan.bound << "\n";
    for (std::size_t p = 0; p < v.spencer.rows.size(); ++p)
        out << "spencer row " << p << ": H = " << tuple_text(v.spencer.rows[p]) << "\n";
    for (const auto& c : v.gnf.certificate) out << "gnf+ violation: " << c.describe() << "\n";
    return out.str();
}

std::string ideal_text(const Ideal& i) {
    if (i.gb().empty()) return "(zero ideal)\n";
    std::string out;
    for (const auto& g : i.gb()) out += to_string(g) + "\n";
    return out;
}

}  // namespace elemtab
