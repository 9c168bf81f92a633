#include <doctest.h>

#include "elemtab/fixtures.hpp"
#include "elemtab/rng.hpp"
#include "elemtab/spencer.hpp"

using namespace elemtab;
namespace fx = elemtab::fixtures;

namespace {

/// dim A^{(1)} by a separate route: unknown symmetric tensors in
/// W ⊗ S²V* (monomial coordinates), constrained so each slice lies in A.
std::size_t oracle_dim_a1(const Tableau& t) {
    const std::size_t n = t.n(), r = t.r();
    std::vector<std::pair<std::size_t, std::size_t>> mons;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) mons.emplace_back(i, j);
    auto mon = [&](std::size_t i, std::size_t j) {
        if (i > j) std::swap(i, j);
        for (std::size_t m = 0; m < mons.size(); ++m)
            if (mons[m] == std::make_pair(i, j)) return m;
        return mons.size();
    };
    const std::size_t unknowns = r * mons.size();
    const Subspace ann = t.flattened().annihilator();
    std::vector<Vec> rows;
    for (const auto& f : ann.basis_vectors())
        for (std::size_t m = 0; m < n; ++m) {
            Vec row(unknowns);
            for (std::size_t a = 0; a < r; ++a)
                for (std::size_t k = 0; k < n; ++k) row[a * mons.size() + mon(k, m)] += f[a * n + k];
            rows.push_back(row);
        }
    if (rows.empty()) return unknowns;
    return unknowns - rank(Mat::from_rows(rows, unknowns));
}

}  // namespace

TEST_CASE("prolongation examples") {
    CHECK(prolong(Tableau::full(3, 2), 1).space.dim() == 2 * 6);
    CHECK(prolong(fx::heat_1d(), 1).space.dim() == 2);
    CHECK(prolong(Tableau::zero(3, 2), 2).space.dim() == 0);
    const ProlongedTableau p0 = ProlongedTableau::of(fx::heat_2d());
    CHECK(p0.space == fx::heat_2d().flattened());
    CHECK(prolong(Tableau::full(2, 1), 2).space.dim() == 4);  // S³ of a plane
}

TEST_CASE("cartan test examples") {
    auto c = cartan_test(fx::heat_1d());
    CHECK(c.involutive);
    CHECK(c.dim_a1 == 2);
    CHECK(c.bound == 2);
    c = cartan_test(fx::heat_2d());
    CHECK(c.involutive);
    CHECK(c.dim_a1 == 7);
    CHECK(c.bound == 7);
    c = cartan_test(Tableau::full(2, 1));
    CHECK(c.involutive);
    CHECK(c.dim_a1 == 3);
    CHECK(c.bound == 3);
    c = cartan_test(fx::crossed());
    CHECK_FALSE(c.involutive);
}

TEST_CASE("dim A1 agrees with a symmetric-coordinate oracle") {
    for (const auto& name : fx::names()) CHECK(prolong(fx::by_name(name), 1).space.dim() == oracle_dim_a1(fx::by_name(name)));
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        const Tableau t = fx::random_involutive(seed);
        CHECK(prolong(t, 1).space.dim() == oracle_dim_a1(t));
        const Tableau q = fx::perturb(t, seed);
        CHECK(prolong(q, 1).space.dim() == oracle_dim_a1(q));
    }
}

TEST_CASE("spencer cohomology examples") {
    auto rep = spencer_h_dims(fx::heat_1d());
    CHECK(rep.dims_h() == std::vector<std::size_t>{0, 0});
    CHECK(rep.involutive);
    rep = spencer_h_dims(Tableau::zero(3, 2));
    CHECK(rep.involutive);
    rep = spencer_h_dims(fx::crossed());
    REQUIRE_FALSE(rep.dims_h().empty());
    CHECK(rep.dims_h()[0] == 1);
    CHECK_FALSE(rep.involutive);
    CHECK_THROWS_AS(spencer_h_dims(fx::heat_1d(), 4, 1), ValueError);
}

TEST_CASE("three-way involutivity agreement") {
    auto agree = [](const Tableau& t) {
        const bool g = is_involutive_gnf(t).involutive;
        const bool c = cartan_test(t).involutive;
        const bool s = spencer_h_dims(t).involutive;
        CHECK(g == c);
        CHECK(c == s);
        return c;
    };
    for (const auto& name : fx::names()) {
        INFO(name);
        agree(fx::by_name(name));
    }
    std::size_t non_involutive = 0;
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        INFO(seed);
        const Tableau t = fx::random_involutive(seed);
        CHECK(agree(t));
        if (!agree(fx::perturb(t, seed))) ++non_involutive;
    }
    CHECK(non_involutive > 0);
}

TEST_CASE("delta_x_kernel") {
    const Tableau heat = fx::heat_1d();
    // One X direction: no skew condition, E = A ⊗ X*.
    CHECK(delta_x_kernel(heat, Subspace::span({Vec{0, 1}}, 2)).dim() == heat.dim());
    // X = V on the full tableau: the symmetric square.
    const Tableau full = Tableau::full(3, 2);
    CHECK(delta_x_kernel(full, Subspace::full(3)).dim() == 2 * 6);
    // X = V in general: E is A^{(1)}.
    const Tableau t = fx::heat_2d();
    CHECK(delta_x_kernel(t, Subspace::full(3)) == prolong(t, 1).space);
}

TEST_CASE("Cauchy directions tensor the complex with an exterior factor") {
    // crossed has H = (1, 0) at A; one extra Cauchy direction c gives
    // H^ρ = H_U^ρ + H_U^{ρ-1}, i.e. (1, 1, 0).
    const SpencerReport padded = spencer_h_dims(fx::pad_columns(fx::crossed(), 1));
    CHECK(padded.rows.front() == std::vector<std::size_t>{1, 1, 0});
    CHECK_FALSE(padded.involutive);
    const SpencerReport heat = spencer_h_dims(fx::pad_columns(fx::heat_1d(), 2));
    CHECK(heat.involutive);
    CHECK(heat.dims_a.front() == 2);
}
