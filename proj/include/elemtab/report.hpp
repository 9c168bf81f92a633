#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "elemtab/charvar.hpp"
#include "elemtab/elemred.hpp"
#include "elemtab/spencer.hpp"
#include "elemtab/tableau.hpp"

namespace elemtab {

using Json = nlohmann::ordered_json;

/// classify plus the elementary flag, both from one seed.
struct Analysis {
    Report report;
    ReductionFlag flag;
};
Analysis analyze(const Tableau& t, std::uint64_t seed, const CharConfig& cfg = {});

/// The three involutivity oracles side by side.
struct InvolutivityVerdict {
    GnfResult gnf;
    CartanResult cartan;
    SpencerReport spencer;
    bool consistent() const;
    /// The common verdict; meaningful only when consistent().
    bool involutive() const { return gnf.involutive; }
};
InvolutivityVerdict involutivity(const Tableau& t);

// Stable JSON objects (fixed key order, rationals as strings).
Json to_json(const Report& r);
Json to_json(const ReductionFlag& f);
/// Report keys followed by "flag", "depth", "terminal", "terminal_is_cauchy".
Json to_json(const Analysis& a);
Json to_json(const InvolutivityVerdict& v);
/// {"nvars", "generators"} with the reduced Groebner basis as strings.
Json ideal_json(const Ideal& i);

// Plain-text tables, one field per line in a fixed order.
std::string to_text(const Report& r);
std::string to_text(const ReductionFlag& f);
std::string to_text(const Analysis& a);
/// "involutive: yes (gnf+ ✓ cartan ✓ spencer ✓)" plus detail lines.
std::string to_text(const InvolutivityVerdict& v);
std::string ideal_text(const Ideal& i);

}  // namespace elemtab
