#include <doctest.h>

#include "guillemin.hpp"

using namespace elemtab;
using namespace elemtab::testing;
namespace fx = elemtab::fixtures;

TEST_CASE("eigenvalue identity at rational characteristic points") {
    for (const auto& name : fx::names()) {
        INFO(name);
        const Tableau t = fx::by_name(name);
        if (t.ell() == 0 || !is_involutive_gnf(t).involutive) continue;
        CHECK(eigen_violations(t, fx::rational_char_points(name), 8, 3) == 0);
    }
    // heat1d at ξ = (1, 0): the kernel is e_1 and B(u¹)(v) e_1 = v_1 e_1.
    const Tableau heat = fx::heat_1d();
    CHECK(eigen_violations(heat, {Vec{1, 0}}, 4, 1) == 0);
    // A non-characteristic covector counts as a violation.
    CHECK(eigen_violations(heat, {Vec{0, 1}}, 1, 1) > 0);
}

TEST_CASE("restricted endomorphisms commute on involutive tableaux") {
    for (const auto& name : fx::names()) {
        INFO(name);
        const Tableau t = fx::by_name(name);
        if (!is_involutive_gnf(t).involutive) continue;
        CHECK(commutation_violations(t, 16, 5) == 0);
        CHECK(cauchy_violations(t, 4, 5) == 0);
        // art355 is the exception below.
        if (name != "art355") CHECK(nilpotency_certificate(t, variety_span(t, 1).x_one, 16, 7));
    }
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        INFO(seed);
        const Tableau t = fx::random_involutive(seed);
        CHECK(commutation_violations(t, 16, seed) == 0);
        CHECK(cauchy_violations(t, 4, seed) == 0);
    }
    const Tableau padded = fx::pad_columns(fx::heat_2d(), 1);
    CHECK(cauchy_violations(padded, 4, 2) == 0);
}

TEST_CASE("the isolated characteristic point of art355 breaks nilpotency on X1") {
    // X¹ = span{u₄ - 2u₅} comes from the top-dimensional part of Ξ. The
    // isolated point ξ = [1:1:1:1:0] pairs to ξ(v) = 1 with v = u₄ - 2u₅, so
    // over φ = (1, 1, 1) the restricted endomorphism has eigenvalue 1.
    const Tableau t = fx::artificial_355();
    const Vec v{0, 0, 0, 1, -2};
    CHECK(variety_span(t, 1).x_one == Subspace::span({v}, 5));
    const Vec phi{1, 1, 1, 0, 0};
    const Mat b = restrict_endo(symbol_endo(t, phi, t.to_adapted_vector(v)), w_one(t, phi));
    CHECK_FALSE(is_nilpotent(b));
    CHECK(eigen_violations(t, {Vec{1, 1, 1, 1, 0}}, 4, 2) == 0);
    // With z₄ = 0 the point pairs to zero and the certificate holds.
    const Tableau z = fx::by_name("art355-z4zero");
    CHECK(nilpotency_certificate(z, variety_span(z, 1).x_one, 32, 7));
}
