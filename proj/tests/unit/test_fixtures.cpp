#include <doctest.h>

#include "elemtab/charvar.hpp"
#include "elemtab/fixtures.hpp"
#include "elemtab/rng.hpp"
#include "elemtab/spencer.hpp"

using namespace elemtab;
namespace fx = elemtab::fixtures;

namespace {

bool three_way(const Tableau& t, bool& verdict) {
    const bool g = is_involutive_gnf(t).involutive;
    const bool c = cartan_test(t).involutive;
    const bool s = spencer_h_dims(t).involutive;
    verdict = g;
    return g == c && c == s;
}

/// dim {v : π v = 0 for all π} by stacking generators.
std::size_t cauchy_dim_oracle(const Tableau& t) {
    std::vector<Vec> rows;
    for (const auto& g : t.generators())
        for (std::size_t a = 0; a < t.r(); ++a) {
            Vec row(t.n());
            for (std::size_t k = 0; k < t.n(); ++k) row[k] = g(a, k);
            rows.push_back(row);
        }
    return rows.empty() ? t.n() : t.n() - rank(Mat::from_rows(rows, t.n()));
}

}  // namespace

TEST_CASE("named fixtures") {
    for (const auto& name : fx::names()) {
        INFO(name);
        const Tableau t = fx::by_name(name);
        bool verdict = false;
        CHECK(three_way(t, verdict));
        CHECK(cauchy_space(t).dim() == cauchy_dim_oracle(t));
    }
    CHECK_THROWS_AS(fx::by_name("nope"), ValueError);

    const Tableau heat = fx::heat_1d();
    CHECK(heat.n() == 2);
    CHECK(heat.r() == 2);
    CHECK(heat.flattened() == Subspace::span({Vec{1, 0, 0, 0}, Vec{0, 1, 1, 0}}, 4));
    // Rows (π¹₁, π¹₂, -π²₂), (π²₁, π²₂, π¹₂), (π³₁, π²₁, π¹₁): five free entries.
    CHECK(fx::heat_2d().dim() == 5);
    CHECK_FALSE(is_involutive_gnf(fx::crossed()).involutive);
}

TEST_CASE("rational characteristic points lie on the variety") {
    for (const auto& name : {"heat1d", "heat2d", "art355"}) {
        INFO(name);
        const Tableau t = fx::by_name(name);
        const Ideal ideal = char_ideal(t);
        for (const auto& xi : fx::rational_char_points(name))
            for (const auto& g : ideal.gb()) CHECK(sgn(g.evaluate(xi)) == 0);
    }
}

TEST_CASE("random_involutive passes both oracles and is deterministic") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        INFO(seed);
        const Tableau t = fx::random_involutive(seed, {5, 4, 16});
        CHECK(is_involutive_gnf(t).involutive);
        CHECK(cartan_test(t).involutive);
        CHECK(t.n() <= 5);
        CHECK(t.r() <= 4);
        const Tableau again = fx::random_involutive(seed, {5, 4, 16});
        CHECK(again.flattened() == t.flattened());
    }
    // The smallest shape: n = 2, r = 1.
    const Tableau tiny = fx::random_involutive(3, {2, 1, 16});
    CHECK(tiny.r() == 1);
    CHECK(cartan_test(tiny).involutive);
}

TEST_CASE("perturbations are deterministic and change the tableau") {
    std::size_t changed = 0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const Tableau t = fx::random_involutive(seed, {4, 3, 16});
        const Tableau p = fx::perturb(t, seed);
        CHECK(fx::perturb(t, seed).flattened() == p.flattened());
        if (!(p.flattened() == t.flattened())) ++changed;
        bool verdict = false;
        CHECK(three_way(p, verdict));
    }
    CHECK(changed >= 8);
}

TEST_CASE("constructions") {
    const Tableau heat = fx::heat_1d();
    const Tableau padded = fx::pad_columns(heat, 2);
    CHECK(padded.n() == 4);
    CHECK(cauchy_space(padded).dim() == 2);
    CHECK(padded.characters() == std::vector<std::size_t>{2, 0, 0, 0});

    const Tableau sum = fx::direct_sum(heat, fx::heat_1d());
    CHECK(sum.r() == 4);
    CHECK(sum.dim() == 2 * heat.dim());
    CHECK(cartan_test(sum).involutive);

    Rng rng(9);
    Mat p, h;
    do p = rng.mat(2, 2, 2);
    while (rank(p) < 2);
    do h = rng.mat(2, 2, 2);
    while (rank(h) < 2);
    const Tableau moved = fx::change_frames(heat, p, h);
    CHECK(moved.characters() == heat.characters());
    CHECK(is_involutive_gnf(moved).involutive);
    CHECK(cartan_test(moved).bound == cartan_test(heat).bound);
}
