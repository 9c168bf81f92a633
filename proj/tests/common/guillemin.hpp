#pragma once

// Property checks for the Guillemin normal form, shared by the unit tests
// and the acceptance runner. Each returns the number of violations found.

#include <string>

#include "elemtab/charvar.hpp"
#include "elemtab/fixtures.hpp"
#include "elemtab/rng.hpp"
#include "elemtab/tableau.hpp"

namespace elemtab::testing {

inline Vec nonzero_phi(const Tableau& t, Rng& rng) {
    Vec phi(t.n());
    bool zero = true;
    while (zero)
        for (std::size_t k = 0; k < t.ell(); ++k) {
            phi[k] = rng.small_int(3);
            zero = zero && phi[k] == 0;
        }
    return phi;
}

/// B(ξ)(v) z = ξ(v) z for z in the kernel of the symbol at a characteristic
/// covector ξ (original coordinates), over a panel of random v.
inline std::size_t eigen_violations(const Tableau& t, const std::vector<Vec>& points, std::size_t panel,
                                    std::uint64_t seed) {
    std::size_t bad = 0;
    Rng rng(seed);
    for (const auto& xi : points) {
        const Vec xa = t.to_adapted_covector(xi);
        Vec phi(t.n());
        for (std::size_t k = 0; k < t.ell(); ++k) phi[k] = xa[k];
        const Subspace kernel = kernel_basis(symbol_matrix(t).evaluate(xa));
        if (kernel.dim() == 0) ++bad;  // not characteristic after all
        for (std::size_t i = 0; i < panel; ++i) {
            const Vec v = rng.vec(t.n(), 4);
            Scalar pairing = 0;
            for (std::size_t k = 0; k < t.n(); ++k) pairing += xa[k] * v[k];
            const Mat b = symbol_endo(t, phi, v);
            for (const auto& z : kernel.basis_vectors()) {
                const Vec bz = b * z;
                for (std::size_t a = 0; a < z.size(); ++a)
                    if (bz[a] != pairing * z[a]) {
                        ++bad;
                        break;
                    }
            }
        }
    }
    return bad;
}

/// B(φ)(v) and B(φ)(ṽ) leave W¹(φ) invariant and commute there.
inline std::size_t commutation_violations(const Tableau& t, std::size_t triples, std::uint64_t seed) {
    if (t.ell() == 0) return 0;
    std::size_t bad = 0;
    Rng rng(seed);
    for (std::size_t i = 0; i < triples; ++i) {
        const Vec phi = nonzero_phi(t, rng);
        const Vec v = rng.vec(t.n(), 4), w = rng.vec(t.n(), 4);
        const Subspace w1 = w_one(t, phi);
        try {
            const Mat b1 = restrict_endo(symbol_endo(t, phi, v), w1);
            const Mat b2 = restrict_endo(symbol_endo(t, phi, w), w1);
            if (!(b1 * b2 == b2 * b1)) ++bad;
        } catch (const InvarianceViolated&) {
            ++bad;
        }
    }
    return bad;
}

/// B(φ)(v) = 0 for every v in the Cauchy space.
inline std::size_t cauchy_violations(const Tableau& t, std::size_t samples, std::uint64_t seed) {
    if (t.ell() == 0) return 0;
    std::size_t bad = 0;
    Rng rng(seed);
    const auto basis = cauchy_space(t).basis_vectors();
    for (std::size_t i = 0; i < samples; ++i) {
        const Vec phi = nonzero_phi(t, rng);
        for (const auto& v : basis)
            if (!(symbol_endo(t, phi, t.to_adapted_vector(v)) == Mat(t.r(), t.r()))) ++bad;
    }
    return bad;
}

}  // namespace elemtab::testing
