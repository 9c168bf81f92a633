#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "elemtab/charvar.hpp"
#include "elemtab/tableau.hpp"

namespace elemtab {

/// Optional analysis caps carried by a spec file.
struct SpecCaps {
    std::optional<std::size_t> max_minors;
    std::optional<std::size_t> rounds;
    std::optional<std::size_t> max_trials;
    std::optional<std::size_t> max_generators;

    /// cfg with every present cap applied.
    CharConfig apply(CharConfig cfg) const;
};

struct ReducedSpec {
    std::vector<std::size_t> characters;
    /// Zero-based keys; the file uses one-based indices.
    BMap b;
};

/// A tableau file: JSON with format_version "1", n, r and exactly one of
/// generators (r x n matrices of rational strings) or reduced.
struct TableauSpec {
    std::size_t n = 0, r = 0;
    std::optional<std::vector<Mat>> generators;
    std::optional<ReducedSpec> reduced;
    std::optional<std::uint64_t> seed;
    SpecCaps caps;

    Tableau build(std::uint64_t seed = 0) const;
};

/// ParseError (with line and column) for malformed JSON, SchemaError for
/// missing, extra or mistyped fields, ValueError for malformed rationals.
TableauSpec parse_spec(std::string_view text);
/// Pretty-printed JSON, stable key order, trailing newline.
std::string emit_spec(const TableauSpec& spec);
/// The generator form of t in original coordinates.
TableauSpec spec_of(const Tableau& t);

/// Position of a ParseError, one-based.
struct TextPosition {
    std::size_t line = 1, column = 1;
};
TextPosition position_of(std::string_view text, std::size_t byte_offset);

}  // namespace elemtab
