#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "elemtab/charvar.hpp"
#include "elemtab/tableau.hpp"

namespace elemtab {

struct ElemStep {
    /// X¹ in the coordinates of t's V.
    Subspace x1;
    /// restrict(t, x1); empty when x1 = 0.
    std::optional<Tableau> reduced;
    CharData data;
};

/// One elementary reduction: X¹ from variety_span, then restriction to it.
ElemStep elem_step(const Tableau& t, std::uint64_t seed, const CharConfig& cfg = {});

struct ReductionStep {
    std::size_t level = 0;
    /// X^level in the original V.
    Subspace x;
    /// The restriction of the original tableau to x (canonical basis of x);
    /// empty when x = 0.
    std::optional<Tableau> tableau;
    /// Characteristic data of tableau; absent for an empty or zero tableau.
    std::optional<CharData> data;
};

enum class Terminal { TableauZero, SpanFullFrobenius, Stabilized };
std::string to_string(Terminal t);

struct ReductionFlag {
    /// X⁰ = V ⊃ X¹ ⊃ … ⊃ X^ε, one step per space.
    std::vector<ReductionStep> steps;
    std::size_t depth = 0;
    Terminal terminal = Terminal::TableauZero;
    /// Whether X^ε equals the Cauchy space of the original tableau.
    bool terminal_is_cauchy = false;

    std::vector<std::size_t> dims() const;
};

/// The elementary flag. Sub-seeds per level derive from seed. Raises
/// NonmonotoneFlag if a space fails to shrink strictly, and InternalInvariant
/// if the depth exceeds n or, for an involutive tableau, the terminal space
/// differs from the Cauchy space.
ReductionFlag elem_flag(const Tableau& t, std::uint64_t seed, const CharConfig& cfg = {});

/// A^{(ρ+1)}|_X ⊂ E^{(ρ)} ⊂ ker δ_X for ρ = 0..rho_max, with X = X¹.
/// E^{(ρ)} ⊂ W ⊗ V* ⊗ (X*)^{⊗(ρ+1)}: E^{(0)} = delta_x_kernel, then
/// repeated prolongation symmetric in the last two X slots.
bool check_dxe(const Tableau& t, std::size_t rho_max, std::uint64_t seed = 0, const CharConfig& cfg = {});
/// The same check against an explicit X ⊂ V.
bool check_dxe(const Tableau& t, const Subspace& x, std::size_t rho_max);

/// Characteristic varieties in P(X*) compared by radical membership.
struct ElemCharReport {
    std::size_t m = 0;  // dim X¹
    /// Ideals in ξ_1..ξ_m (coordinates of X's canonical basis):
    /// E^{(1)}, E, Ȧ^{(1)}, Ȧ. E is taken through its image in Ȧ ⊗ X*, and
    /// Ξ̇^{(1)} is the set of ξ with δ_X(π ⊗ ξ) = 0 for some π ∈ A with
    /// π|_X ≠ 0. Rank one is thus measured after restriction, which keeps the
    /// chain meaningful when π ↦ π|_X has a kernel.
    Ideal e1, e, a_dot1, a_dot;
    /// Ξ^{(1)}_E ⊂ Ξ_E, Ξ_E ⊂ Ξ̇^{(1)}, Ξ̇^{(1)} ⊂ Ξ̇.
    std::vector<bool> links;
    /// ⟨Ξ̇⟩ = ⟨Ξ_E⟩ (evidence only).
    std::optional<bool> spans_agree;
    bool holds() const;
};

ElemCharReport elemchar_report(const Tableau& t, std::uint64_t seed = 0, const CharConfig& cfg = {});
bool check_elemchar(const Tableau& t, std::uint64_t seed = 0, const CharConfig& cfg = {});

/// Ȧ = A|_X as a linear tableau in W ⊗ X*.
LinearTableau restricted_linear(const Tableau& t, const Subspace& x);
/// E ⊂ A ⊗ X* as a linear tableau whose W is A (coordinates in the RREF
/// basis of t.flattened()).
LinearTableau elem_linear(const Tableau& t, const Subspace& x);

}  // namespace elemtab
