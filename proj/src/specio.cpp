#include "elemtab/specio.hpp"

#include <json.hpp>

namespace elemtab {

using Json = nlohmann::ordered_json;

namespace {

void require_keys(const Json& obj, const std::string& where, std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional) {
    if (!obj.is_object()) throw SchemaError(where + " must be an object");
    for (const char* k : required)
        if (!obj.contains(k)) throw SchemaError(where + " is missing \"" + k + "\"");
    for (const auto& [key, value] : obj.items()) {
        bool known = false;
        for (const char* k : required) known = known || key == k;
        for (const char* k : optional) known = known || key == k;
        if (!known) throw SchemaError(where + " has unknown field \"" + key + "\"");
    }
}

std::size_t count(const Json& v, const std::string& where) {
    if (!v.is_number_unsigned()) throw SchemaError(where + " must be a non-negative integer");
    return v.get<std::size_t>();
}

Scalar rational(const Json& v, const std::string& where) {
    if (!v.is_string()) throw SchemaError(where + " must be a rational string such as \"-3/4\"");
    return parse_scalar(v.get<std::string>());
}

const Json& array(const Json& v, const std::string& where, std::optional<std::size_t> size = std::nullopt) {
    if (!v.is_array()) throw SchemaError(where + " must be an array");
    if (size && v.size() != *size)
        throw SchemaError(where + " must have " + std::to_string(*size) + " entries, found " + std::to_string(v.size()));
    return v;
}

Mat matrix(const Json& v, std::size_t r, std::size_t n, const std::string& where) {
    array(v, where, r);
    Mat m(r, n);
    for (std::size_t a = 0; a < r; ++a) {
        const std::string row = where + "[" + std::to_string(a) + "]";
        array(v[a], row, n);
        for (std::size_t k = 0; k < n; ++k) m(a, k) = rational(v[a][k], row + "[" + std::to_string(k) + "]");
    }
    return m;
}

Json rational_json(const Scalar& x) { return to_string(x); }

}  // namespace

CharConfig SpecCaps::apply(CharConfig cfg) const {
    if (max_minors) cfg.max_minors = *max_minors;
    if (rounds) cfg.stable_rounds = *rounds;
    if (max_trials) cfg.max_trials = *max_trials;
    if (max_generators) cfg.groebner.max_generators = *max_generators;
    return cfg;
}

Tableau TableauSpec::build(std::uint64_t s) const {
    if (generators) return Tableau::from_generators(n, r, *generators, s);
    return Tableau::from_reduced(n, r, reduced->characters, reduced->b, s);
}

TextPosition position_of(std::string_view text, std::size_t byte_offset) {
    TextPosition pos;
    for (std::size_t i = 0; i < byte_offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++pos.line;
            pos.column = 1;
        } else if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) {
            ++pos.column;  // count code points, not continuation bytes
        }
    }
    return pos;
}

TableauSpec parse_spec(std::string_view text) {
    Json root;
    try {
        root = Json::parse(text);
    } catch (const Json::parse_error& e) {
        // byte is one past the offending character.
        const TextPosition pos = position_of(text, e.byte > 0 ? e.byte - 1 : 0);
        std::string msg = e.what();
        if (auto colon = msg.find(": "); colon != std::string::npos) msg = msg.substr(colon + 2);
        throw ParseError(msg, pos.line, pos.column);
    }
    require_keys(root, "spec", {"format_version", "n", "r"}, {"generators", "reduced", "seed", "caps"});
    if (!root["format_version"].is_string() || root["format_version"].get<std::string>() != "1")
        throw SchemaError("format_version must be the string \"1\"");

    TableauSpec spec;
    spec.n = count(root["n"], "n");
    spec.r = count(root["r"], "r");
    const bool has_gens = root.contains("generators"), has_reduced = root.contains("reduced");
    if (has_gens == has_reduced) throw SchemaError("exactly one of \"generators\" and \"reduced\" must be present");

    if (has_gens) {
        const Json& gens = array(root["generators"], "generators");
        std::vector<Mat> out;
        for (std::size_t i = 0; i < gens.size(); ++i)
            out.push_back(matrix(gens[i], spec.r, spec.n, "generators[" + std::to_string(i) + "]"));
        spec.generators = std::move(out);
    } else {
        const Json& red = root["reduced"];
        require_keys(red, "reduced", {"characters", "B"}, {});
        ReducedSpec rs;
        const Json& chars = array(red["characters"], "reduced.characters", spec.n);
        for (std::size_t k = 0; k < chars.size(); ++k)
            rs.characters.push_back(count(chars[k], "reduced.characters[" + std::to_string(k) + "]"));
        const Json& entries = array(red["B"], "reduced.B");
        for (std::size_t i = 0; i < entries.size(); ++i) {
            const std::string where = "reduced.B[" + std::to_string(i) + "]";
            array(entries[i], where, 5);
            std::size_t idx[4];
            const std::size_t bound[4] = {spec.r, spec.n, spec.n, spec.r};
            for (std::size_t j = 0; j < 4; ++j) {
                idx[j] = count(entries[i][j], where + "[" + std::to_string(j) + "]");
                if (idx[j] < 1 || idx[j] > bound[j])
                    throw SchemaError(where + "[" + std::to_string(j) + "] is out of range 1.." +
                                      std::to_string(bound[j]));
            }
            const BKey key{idx[0] - 1, idx[1] - 1, idx[2] - 1, idx[3] - 1};
            if (rs.b.count(key)) throw SchemaError(where + " repeats an earlier index");
            rs.b[key] = rational(entries[i][4], where + "[4]");
        }
        spec.reduced = std::move(rs);
    }
    if (root.contains("seed")) {
        if (!root["seed"].is_number_unsigned()) throw SchemaError("seed must be a non-negative integer");
        spec.seed = root["seed"].get<std::uint64_t>();
    }
    if (root.contains("caps")) {
        const Json& caps = root["caps"];
        require_keys(caps, "caps", {}, {"max_minors", "rounds", "max_trials", "max_generators"});
        auto cap = [&](const char* key, std::optional<std::size_t>& slot) {
            if (!caps.contains(key)) return;
            slot = count(caps[key], std::string("caps.") + key);
            if (*slot == 0) throw SchemaError(std::string("caps.") + key + " must be positive");
        };
        cap("max_minors", spec.caps.max_minors);
        cap("rounds", spec.caps.rounds);
        cap("max_trials", spec.caps.max_trials);
        cap("max_generators", spec.caps.max_generators);
    }
    return spec;
}

std::string emit_spec(const TableauSpec& spec) {
    Json root;
    root["format_version"] = "1";
    root["n"] = spec.n;
    root["r"] = spec.r;
    if (spec.generators) {
        Json gens = Json::array();
        for (const auto& g : *spec.generators) {
            Json m = Json::array();
            for (std::size_t a = 0; a < g.rows(); ++a) {
                Json row = Json::array();
                for (std::size_t k = 0; k < g.cols(); ++k) row.push_back(rational_json(g(a, k)));
                m.push_back(std::move(row));
            }
            gens.push_back(std::move(m));
        }
        root["generators"] = std::move(gens);
    }
    if (spec.reduced) {
        Json b = Json::array();
        for (const auto& [key, value] : spec.reduced->b)
            b.push_back(Json::array({key.a + 1, key.lambda + 1, key.k + 1, key.b + 1, rational_json(value)}));
        root["reduced"] = {{"characters", spec.reduced->characters}, {"B", std::move(b)}};
    }
    if (spec.seed) root["seed"] = *spec.seed;
    Json caps = Json::object();
    if (spec.caps.max_minors) caps["max_minors"] = *spec.caps.max_minors;
    if (spec.caps.rounds) caps["rounds"] = *spec.caps.rounds;
    if (spec.caps.max_trials) caps["max_trials"] = *spec.caps.max_trials;
    if (spec.caps.max_generators) caps["max_generators"] = *spec.caps.max_generators;
    if (!caps.empty()) root["caps"] = std::move(caps);
    return root.dump(2) + "\n";
}

TableauSpec spec_of(const Tableau& t) {
    TableauSpec spec;
    spec.n = t.n();
    spec.r = t.r();
    spec.generators = t.generators();
    return spec;
}

}  // namespace elemtab
