#pragma once

#include <vector>

#include "elemtab/tableau.hpp"

namespace elemtab {

/// A^{(ρ)} ⊂ W ⊗ (⊗^{ρ+1} V*), full tensor coordinates, original frame.
/// Index of Q^a_{k_0 ... k_ρ} is ((a n + k_0) n + k_1) ... n + k_ρ.
struct ProlongedTableau {
    Tableau base;
    std::size_t rho = 0;
    Subspace space;

    static ProlongedTableau of(const Tableau& t);
};

/// {Q ∈ A^{(ρ)} ⊗ V* : symmetric in the last two slots}. Full symmetry of the
/// result is asserted (InternalInvariant).
ProlongedTableau prolong(const ProlongedTableau& p);
/// A^{(rho)} by repeated prolongation.
ProlongedTableau prolong(const Tableau& t, std::size_t rho);

struct CartanResult {
    bool involutive = false;
    std::size_t dim_a1 = 0;
    std::size_t bound = 0;
};
/// dim A^{(1)} against Σ k s_k; InternalInvariant if the inequality fails.
CartanResult cartan_test(const Tableau& t);

struct SpencerReport {
    /// dim A^{(p)} for p = 0 .. levels.
    std::vector<std::size_t> dims_a;
    /// rows[p][i] = dim H^{p, i+2}: cohomology at A^{(p)} ⊗ ∧^{i+2} V* of
    /// A^{(p+1)} ⊗ ∧^{ρ-1} → A^{(p)} ⊗ ∧^ρ → A^{(p-1)} ⊗ ∧^{ρ+1}, with
    /// A^{(-1)} = W. The entry for ρ = n + 1 is 0.
    std::vector<std::vector<std::size_t>> rows;
    /// rows[0], the cohomology at A itself.
    const std::vector<std::size_t>& dims_h() const { return rows.front(); }
    bool involutive = false;
};
/// Cohomology dimensions for ρ = 2 .. rho_max (rho_max <= n + 1) on the
/// rows p = 0 .. levels - 1.
SpencerReport spencer_h_dims(const Tableau& t, std::size_t rho_max, std::size_t levels);
/// All ρ on the default number of rows, spencer_levels(t).
SpencerReport spencer_h_dims(const Tableau& t);
/// Rows checked by default: n, at least 2.
std::size_t spencer_levels(const Tableau& t);

/// E = {Q ∈ A ⊗ X* : the restriction of Q to X ⊗ X is symmetric}.
/// Coordinates (a n + k) m + j with j indexing x's canonical basis.
Subspace delta_x_kernel(const Tableau& t, const Subspace& x);

}  // namespace elemtab
