#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "elemtab/multipoly.hpp"
#include "elemtab/tableau.hpp"

namespace elemtab {

struct CharConfig {
    /// Maximum number of r x r minors before MinorExplosion.
    std::size_t max_minors = 20000;
    /// Slicing trials before giving up (Unstable if the span still grows).
    std::size_t max_trials = 40;
    /// Consecutive successful slices without growth needed to stop.
    std::size_t stable_rounds = 3;
    /// Entries of random slice data come from [-box, box].
    long box = 1L << 16;
    /// Check that the linear forms of the saturated ideal vanish on the span.
    bool check_linear_part = true;
    GroebnerConfig groebner{};
};

/// Ideal of r x r minors of the symbol relations, variables ξ_1..ξ_n in the
/// original coordinates. The zero ideal when there are fewer than r relations.
Ideal char_ideal(const Tableau& t, const CharConfig& cfg = {});
/// Ideal of the maximal (cols x cols) minors of a matrix of linear forms,
/// one inner vector per row. Zero with fewer rows than cols, unit when cols = 0.
Ideal minors_ideal(const std::vector<std::vector<Poly>>& m, std::size_t nvars, std::size_t cols,
                   const CharConfig& cfg = {});
/// The same ideal computed from the annihilator of A: rows are the linear
/// functionals vanishing on A, evaluated on w ⊗ ξ.
Ideal char_ideal_annihilator(const LinearTableau& t, const CharConfig& cfg = {});
/// Affine dimension of the characteristic cone; 0 for an empty variety.
std::size_t char_dimension(const Tableau& t, const CharConfig& cfg = {});
std::size_t char_dimension(const Ideal& ideal);

struct SliceRecord {
    std::size_t trial = 0;
    std::size_t codimension = 0;
    /// "used", "grew", "not-zero-dimensional" or "skipped".
    std::string outcome;
    std::size_t points = 0;  // degree of the reduced slice when used
    std::size_t span_dim = 0;
};

struct CharData {
    Ideal ideal;
    std::size_t ell = 0;
    /// ⟨Ξ⟩ ⊂ V*, original coordinates.
    Subspace span;
    /// The annihilator of span in V.
    Subspace x_one;
    std::size_t L = 0;
    std::vector<SliceRecord> slice_log;
    /// Point count of the first zero-dimensional slice.
    std::optional<std::size_t> observed_degree;
};

/// ⟨Ξ⟩ from zero-dimensional slices of the reduced variety.
CharData variety_span(const Tableau& t, std::uint64_t seed, const CharConfig& cfg = {});
/// Same, from a precomputed characteristic ideal in n variables.
CharData variety_span(const Ideal& ideal, std::uint64_t seed, const CharConfig& cfg = {});

/// For random φ ∈ U* and each basis vector v of x1 (original coordinates),
/// B(φ)(v) preserves W¹(φ) and is nilpotent there.
bool nilpotency_certificate(const Tableau& t, const Subspace& x1, std::size_t samples, std::uint64_t seed);

struct Report {
    std::size_t n = 0, r = 0;
    std::vector<std::size_t> characters;
    std::size_t ell = 0, L = 0, nu = 0;
    bool frobenius = false, elementary = false, cauchy_free = false, involutive = false;
    std::vector<Vec> x1_basis;
    std::vector<Vec> s_basis;
    std::vector<std::string> char_ideal_generators;
    std::optional<std::size_t> observed_degree;
};

/// (ℓ, L, ν, n) and the derived verdicts; InternalInvariant if the chain
/// ℓ <= L <= ν <= n fails.
Report classify(const Tableau& t, std::uint64_t seed, const CharConfig& cfg = {});
Report classify(const Tableau& t, const CharData& data);

}  // namespace elemtab
