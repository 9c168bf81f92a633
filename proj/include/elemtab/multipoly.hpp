#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "elemtab/exactalg.hpp"

namespace elemtab {

inline constexpr std::size_t kMaxVars = 16;

/// Exponent vector of a monomial in at most kMaxVars variables.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars);
    Monomial(std::size_t nvars, std::initializer_list<unsigned> exps);
    static Monomial variable(std::size_t nvars, std::size_t k, unsigned power = 1);

    std::size_t nvars() const { return n_; }
    unsigned degree() const { return deg_; }
    unsigned operator[](std::size_t k) const { return e_[k]; }
    void set(std::size_t k, unsigned power);

    bool divides(const Monomial& o) const;
    bool coprime(const Monomial& o) const;
    bool is_one() const { return deg_ == 0; }
    Monomial operator*(const Monomial& o) const;
    /// Requires divides(o); returns o / *this.
    Monomial quotient_of(const Monomial& o) const;
    Monomial lcm(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return n_ == o.n_ && e_ == o.e_; }

private:
    std::array<std::uint16_t, kMaxVars> e_{};
    std::uint8_t n_ = 0;
    unsigned deg_ = 0;
};

/// grevlex, lex, or a two-block order: grevlex on variables [0, split)
/// then grevlex on the rest. The first block is eliminated first.
class MonomialOrder {
public:
    enum class Kind { Grevlex, Lex, Block };

    static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, 0); }
    static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
    static MonomialOrder block(std::size_t split) { return MonomialOrder(Kind::Block, split); }

    Kind kind() const { return kind_; }
    std::size_t split() const { return split_; }
    /// Negative, zero or positive as a < b, a == b, a > b.
    int compare(const Monomial& a, const Monomial& b) const;

    bool operator==(const MonomialOrder& o) const { return kind_ == o.kind_ && split_ == o.split_; }

private:
    MonomialOrder(Kind k, std::size_t s) : kind_(k), split_(s) {}
    Kind kind_;
    std::size_t split_;
};

struct Term {
    Monomial mono;
    Scalar coeff;
};

/// Sparse polynomial over Q. Terms are kept sorted in decreasing order
/// under the polynomial's monomial order; no zero coefficients are stored.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::size_t nvars, MonomialOrder order = MonomialOrder::grevlex())
        : nvars_(nvars), order_(order) {}

    static Poly constant(std::size_t nvars, const Scalar& c, MonomialOrder order = MonomialOrder::grevlex());
    static Poly variable(std::size_t nvars, std::size_t k, MonomialOrder order = MonomialOrder::grevlex());
    static Poly monomial(const Monomial& m, const Scalar& c, MonomialOrder order = MonomialOrder::grevlex());
    /// Linear form sum_k c[k] x_k.
    static Poly linear(const Vec& c, MonomialOrder order = MonomialOrder::grevlex());
    /// Sums like terms and sorts; zero coefficients are dropped.
    static Poly from_terms(std::size_t nvars, std::vector<Term> terms,
                           MonomialOrder order = MonomialOrder::grevlex());
    /// Parses the report syntax, e.g. "3/2*x1^2*x3 - x2" (variables 1-based).
    static Poly parse(std::string_view text, std::size_t nvars, MonomialOrder order = MonomialOrder::grevlex());

    std::size_t nvars() const { return nvars_; }
    const MonomialOrder& order() const { return order_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    const Term& leading() const { return terms_.front(); }
    unsigned degree() const;
    bool is_homogeneous() const;
    /// Variables 0..nvars-1 that occur with nonzero exponent.
    std::vector<bool> support() const;

    Poly with_order(const MonomialOrder& order) const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const Scalar& c) const;
    Poly mul_term(const Monomial& m, const Scalar& c) const;
    Poly monic() const;
    /// this - c * m * g, computed by a single merge.
    Poly sub_mul(const Scalar& c, const Monomial& m, const Poly& g) const;

    Scalar evaluate(const Vec& point) const;
    /// Re-embeds into `nvars` variables; variable k goes to map[k].
    Poly remap(std::size_t nvars, const std::vector<std::size_t>& map) const;
    /// Substitutes x_k := images[k] (all images share nvars and order).
    Poly substitute(const std::vector<Poly>& images) const;

    bool operator==(const Poly& o) const;

private:
    void normalize();
    std::size_t nvars_ = 0;
    MonomialOrder order_ = MonomialOrder::grevlex();
    std::vector<Term> terms_;
};

/// "x1".."xn" rendering with terms in decreasing grevlex order.
std::string to_string(const Poly& p);

struct GroebnerConfig {
    /// Hard cap on intermediate basis size.
    std::size_t max_generators = 512;
};

/// An ideal of Q[x1..xn] together with its reduced Groebner basis for a
/// fixed order. Immutable once constructed.
class Ideal {
public:
    Ideal() = default;
    /// Computes the reduced Groebner basis of the generators.
    Ideal(std::size_t nvars, std::vector<Poly> generators,
          MonomialOrder order = MonomialOrder::grevlex(), const GroebnerConfig& cfg = {});

    static Ideal zero(std::size_t nvars) { return Ideal(nvars, {}); }
    static Ideal unit(std::size_t nvars);

    std::size_t nvars() const { return nvars_; }
    const std::vector<Poly>& generators() const { return generators_; }
    const std::vector<Poly>& gb() const { return gb_; }
    const MonomialOrder& order() const { return order_; }

    bool is_unit() const { return gb_.size() == 1 && gb_[0].is_constant(); }
    bool is_zero() const { return gb_.empty(); }
    bool contains(const Poly& f) const;
    bool is_homogeneous() const;
    /// Same ideal, basis recomputed in another order.
    Ideal with_order(const MonomialOrder& order, const GroebnerConfig& cfg = {}) const;

    /// Two ideals are equal iff their reduced grevlex bases coincide.
    bool same_ideal(const Ideal& o) const;

private:
    std::size_t nvars_ = 0;
    std::vector<Poly> generators_;
    std::vector<Poly> gb_;
    MonomialOrder order_ = MonomialOrder::grevlex();
};

/// Reduced Groebner basis by Buchberger's algorithm with the coprime and
/// chain criteria. Output is monic and sorted by increasing leading term.
std::vector<Poly> buchberger(std::vector<Poly> gens, const MonomialOrder& order,
                             const GroebnerConfig& cfg = {});
Ideal buchberger_ideal(std::size_t nvars, std::vector<Poly> gens, const MonomialOrder& order,
                       const GroebnerConfig& cfg = {});

/// Remainder of f on division by the ideal's basis; zero iff f lies in it.
Poly normal_form(const Poly& f, const Ideal& gb);

/// The elimination ideal I ∩ Q[keep], as an ideal of the same ring.
Ideal eliminate(const Ideal& i, const std::vector<bool>& keep, const GroebnerConfig& cfg = {});
/// I : f^∞ via an auxiliary variable t, 1 - t f, and elimination of t.
Ideal saturate(const Ideal& i, const Poly& f, const GroebnerConfig& cfg = {});
/// I : x_k^∞ for homogeneous I, by dividing a grevlex basis with x_k last
/// by the largest power of x_k.
Ideal saturate_by_variable(const Ideal& i, std::size_t k, const GroebnerConfig& cfg = {});
/// I ∩ J via eliminating t from t I + (1 - t) J.
Ideal intersect(const Ideal& i, const Ideal& j, const GroebnerConfig& cfg = {});
/// Saturation by the irrelevant ideal: ∩_k I : x_k^∞. Requires homogeneous I.
Ideal saturate_irrelevant(const Ideal& i, const GroebnerConfig& cfg = {});

/// Degree-one forms in the ideal, as coefficient vectors in Q^nvars.
Subspace linear_part(const Ideal& i);
/// Affine forms c0 + sum c_k x_k in the ideal, as vectors (c0, c1..cn).
Subspace affine_linear_part(const Ideal& i);

/// Krull dimension of Q[x]/I from the leading-term ideal; -1 for the unit ideal.
int ideal_dimension(const Ideal& i);
/// f ∈ √I, tested as 1 ∈ I + (1 - t f).
bool radical_membership(const Poly& f, const Ideal& i, const GroebnerConfig& cfg = {});

/// Dimension of Q[x]/I as a vector space; nullopt if infinite.
std::optional<std::size_t> quotient_dimension(const Ideal& i);
/// Monic minimal polynomial of x_k modulo a zero-dimensional ideal,
/// coefficients in increasing degree.
Vec minimal_polynomial(const Ideal& i, std::size_t k);
/// √I for zero-dimensional I (Seidenberg). NotZeroDimensional otherwise.
Ideal zero_dim_radical(const Ideal& i, const GroebnerConfig& cfg = {});

namespace univariate {
Vec trim(Vec p);
Vec derivative(const Vec& p);
/// Quotient and remainder of a by nonzero b.
std::pair<Vec, Vec> divmod(const Vec& a, const Vec& b);
Vec gcd(Vec a, Vec b);
Vec squarefree_part(const Vec& p);
}  // namespace univariate

}  // namespace elemtab
