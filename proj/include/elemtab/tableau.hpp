#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "elemtab/exactalg.hpp"
#include "elemtab/multipoly.hpp"

namespace elemtab {

struct TableauConfig {
    /// Random frames tried when maximizing the characters (trial 0 is the identity).
    std::size_t trials = 32;
    /// Entries of random frames are drawn from [-box, box].
    long box = 3;
    std::size_t max_n = 8;
    std::size_t max_r = 8;
};

/// Index of a reduced symbol coefficient B^{a,lambda}_{k,b}, all zero-based.
struct BKey {
    std::size_t a, lambda, k, b;
    auto operator<=>(const BKey&) const = default;
};
using BMap = std::map<BKey, Scalar>;

/// A matrix whose entries are polynomials.
struct PolyMat {
    std::size_t rows = 0, cols = 0;
    std::vector<Poly> entries;
    const Poly& operator()(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
    /// Entry-wise evaluation at a point.
    Mat evaluate(const Vec& point) const;
};

/// A tableau A ⊂ W ⊗ V* with dim V = n and dim W = r.
///
/// Generators are r x n matrices acting on V (column k is π u_k). The
/// analysis happens in an adapted frame: the columns of frame_v() are the new
/// basis u_1..u_n of V, the columns of frame_w() the new basis w_1..w_r of W,
/// and an element π reads Q^{-1} π P there. Characters, the reduced
/// coefficients B and everything built from them (symbol endomorphisms, the
/// W filtration) live in the adapted frame; cauchy_space and restrict take
/// and return subspaces in the original coordinates.
class Tableau {
public:
    Tableau() = default;

    static Tableau from_generators(std::size_t n, std::size_t r, const std::vector<Mat>& generators,
                                   std::uint64_t seed = 0, const TableauConfig& cfg = {});
    /// Builds the generators from characters and coefficients, then analyzes
    /// them like from_generators (the identity frame is tried first).
    static Tableau from_reduced(std::size_t n, std::size_t r, const std::vector<std::size_t>& characters,
                                const BMap& b, std::uint64_t seed = 0, const TableauConfig& cfg = {});
    static Tableau zero(std::size_t n, std::size_t r);
    static Tableau full(std::size_t n, std::size_t r);

    std::size_t n() const { return n_; }
    std::size_t r() const { return r_; }
    std::size_t dim() const { return generators_.size(); }
    std::size_t ell() const { return ell_; }
    const std::vector<std::size_t>& characters() const { return s_; }
    const std::vector<Mat>& generators() const { return generators_; }
    const BMap& b() const { return b_; }
    Scalar b(std::size_t a, std::size_t lambda, std::size_t k, std::size_t bb) const;
    const Mat& frame_v() const { return p_; }
    const Mat& frame_w() const { return q_; }
    /// Generators in the adapted frame.
    const std::vector<Mat>& adapted_generators() const { return adapted_; }
    /// The reduced basis π_{λ,b} in the adapted frame, ordered by (λ, b).
    const std::vector<Mat>& reduced_generators() const { return reduced_; }
    /// A as a subspace of Q^{r n}, index a * n + k, original coordinates.
    Subspace flattened() const;

    /// Covector given in original coordinates, expressed in the adapted frame.
    Vec to_adapted_covector(const Vec& xi) const;
    Vec to_adapted_vector(const Vec& v) const;
    Vec from_adapted_vector(const Vec& v) const;
    Vec from_adapted_covector(const Vec& xi) const;

private:
    std::size_t n_ = 0, r_ = 0, ell_ = 0;
    std::vector<std::size_t> s_;
    std::vector<Mat> generators_;
    BMap b_;
    Mat p_, q_, p_inv_, q_inv_;
    std::vector<Mat> adapted_;
    std::vector<Mat> reduced_;
};

/// Sum of the adapted-frame characters weighted by column, Σ k s_k.
std::size_t cartan_bound(const Tableau& t);

/// One row per relation (k, a) with a >= s_k; the entry in column b is
/// δ^a_b ξ_k - Σ_λ B^{a,λ}_{k,b} ξ_λ. Variables are adapted covector
/// coordinates.
PolyMat symbol_matrix(const Tableau& t);
/// The same relations with ξ in original coordinates (z still adapted).
PolyMat symbol_matrix_original(const Tableau& t);

/// B(φ)(v) for φ ∈ U* and v ∈ V, both in adapted coordinates.
/// SupportViolation if φ has a component beyond the first ell.
Mat symbol_endo(const Tableau& t, const Vec& phi, const Vec& v);

/// {z : z^a = 0 for a < s_k} and {z : z^a = 0 for a >= s_k}, zero-based k.
Subspace w_minus(const Tableau& t, std::size_t k);
Subspace w_plus(const Tableau& t, std::size_t k);

/// {z : z ⊗ φ + Σ_ϱ J_ϱ ⊗ u^ϱ ∈ A for some J}, solved from the generators.
Subspace w_one(const Tableau& t, const Vec& phi);
/// The same space from the reduced coefficients: z in the block of the
/// first nonzero φ_λ with (B(φ)(u_μ) z)^a = φ_μ z^a for a >= s_μ.
Subspace w_one_from_coefficients(const Tableau& t, const Vec& phi);

struct GnfViolation {
    int condition;  // 1 or 2
    /// Condition 1: (a, λ, k, b) of a coefficient B^{a,λ}_{k,b} with a >= s_λ.
    /// Condition 2: (ν, μ, k, j, a, d), the coefficient of the free entry
    /// z^d_{νμ} in the residual of relation row a of column k on slice j.
    std::vector<std::size_t> indices;
    std::string describe() const;
};
struct GnfResult {
    bool involutive = false;
    std::vector<GnfViolation> certificate;
};
/// Coefficient criteria, checked in the flag-adapted frame: the linear
/// condition B^{a,λ}_{k,b} = 0 for a >= s_λ, and the quadratic conditions in B
/// that make the relations of A ⊗ V* compatible with symmetry.
GnfResult is_involutive_gnf(const Tableau& t);

/// {v ∈ V : π v = 0 for every π ∈ A}, original coordinates.
Subspace cauchy_space(const Tableau& t);

/// Generators restricted to x (original coordinates), re-analyzed on the
/// coordinates of x's canonical basis.
Tableau restrict(const Tableau& t, const Subspace& x, std::uint64_t seed = 0, const TableauConfig& cfg = {});
/// Matrix whose columns are the canonical basis vectors of x.
Mat basis_columns(const Subspace& x);

/// A tableau given only as a subspace T ⊂ Q^{w_dim} ⊗ Q^{v_dim}
/// (index w * v_dim + k). Used for auxiliary tableaux whose W is itself a
/// tableau or a prolongation.
struct LinearTableau {
    std::size_t w_dim = 0, v_dim = 0;
    Subspace space;

    static LinearTableau of(const Tableau& t);
    /// The prolongation {Q ∈ T ⊗ V* : symmetric in the two V* slots},
    /// written as a tableau whose W is T (coordinates in T's canonical basis).
    LinearTableau prolongation() const;
};

}  // namespace elemtab
