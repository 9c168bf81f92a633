#include <doctest.h>

#include "elemtab/elemred.hpp"
#include "elemtab/fixtures.hpp"

using namespace elemtab;
namespace fx = elemtab::fixtures;

TEST_CASE("elem_step examples") {
    const ElemStep heat = elem_step(fx::heat_1d(), 1);
    CHECK(heat.x1 == Subspace::span({Vec{0, 1}}, 2));
    REQUIRE(heat.reduced);
    CHECK(heat.reduced->n() == 1);
    CHECK(heat.reduced->characters() == std::vector<std::size_t>{1});

    const ElemStep heat2 = elem_step(fx::heat_2d(), 1);
    CHECK(heat2.x1.dim() == 0);
    CHECK_FALSE(heat2.reduced);

    // Frobenius fixed point: X¹ = V and the restriction is the same zero tableau.
    const Tableau zero = Tableau::zero(3, 2);
    const ElemStep z = elem_step(zero, 1);
    CHECK(z.x1 == Subspace::full(3));
    REQUIRE(z.reduced);
    CHECK(z.reduced->dim() == 0);
    CHECK(z.reduced->n() == 3);
}

TEST_CASE("elem_flag examples") {
    const ReductionFlag heat = elem_flag(fx::heat_1d(), 1);
    CHECK(heat.dims() == std::vector<std::size_t>{2, 1, 0});
    CHECK(heat.depth == 2);
    CHECK(heat.terminal == Terminal::SpanFullFrobenius);
    CHECK(heat.terminal_is_cauchy);
    REQUIRE(heat.steps[1].tableau);
    CHECK(heat.steps[1].tableau->characters() == std::vector<std::size_t>{1});

    const ReductionFlag zero = elem_flag(Tableau::zero(2, 2), 1);
    CHECK(zero.depth == 0);
    CHECK(zero.terminal == Terminal::TableauZero);
    CHECK(zero.dims() == std::vector<std::size_t>{2});

    const ReductionFlag art = elem_flag(fx::artificial_355(), 1);
    CHECK(art.dims() == std::vector<std::size_t>{5, 1, 0});
    CHECK(art.depth == 2);

    const ReductionFlag heat2 = elem_flag(fx::heat_2d(), 1);
    CHECK(heat2.dims() == std::vector<std::size_t>{3, 0});
    CHECK(heat2.depth == 1);

    // A Cauchy direction survives to the end and the flag stops on it.
    const Tableau padded = fx::pad_columns(fx::heat_1d(), 1);
    const ReductionFlag p = elem_flag(padded, 1);
    CHECK(p.dims() == std::vector<std::size_t>{3, 2, 1});
    CHECK(p.terminal == Terminal::TableauZero);
    CHECK(p.steps.back().x == cauchy_space(padded));

    // Empty characteristic variety on a nonzero tableau.
    const ReductionFlag crossed = elem_flag(fx::crossed(), 1);
    CHECK(crossed.terminal == Terminal::Stabilized);
    CHECK(crossed.depth == 0);
    CHECK_FALSE(crossed.terminal_is_cauchy);
}

TEST_CASE("flag properties on random samples") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        INFO(seed);
        const Tableau t = fx::random_involutive(seed);
        const ReductionFlag f = elem_flag(t, seed);
        CHECK(f.depth <= t.n());
        for (std::size_t k = 1; k < f.steps.size(); ++k) {
            CHECK(f.steps[k - 1].x.contains(f.steps[k].x));
            CHECK(f.steps[k].x.dim() < f.steps[k - 1].x.dim());
        }
        CHECK(f.steps.back().x == cauchy_space(t));
        // Seed independence of the subspaces.
        const ReductionFlag g = elem_flag(t, seed + 1000);
        CHECK(f.dims() == g.dims());
        CHECK(f.steps.back().x == g.steps.back().x);
    }
}

TEST_CASE("check_dxe") {
    CHECK(check_dxe(fx::heat_1d(), 1));
    CHECK(check_dxe(Tableau::full(2, 2), Subspace::full(2), 1));
    CHECK(check_dxe(fx::artificial_355(), 0));
    // An arbitrary X works too, the lemma does not need X = X¹.
    CHECK(check_dxe(fx::heat_2d(), Subspace::span({Vec{1, 0, 0}, Vec{0, 1, 1}}, 3), 1));
    for (std::uint64_t seed = 1; seed <= 4; ++seed) CHECK(check_dxe(fx::random_involutive(seed), 1, seed));
}

TEST_CASE("restricted and elementary linear tableaux") {
    const Tableau heat = fx::heat_1d();
    const Subspace x = Subspace::span({Vec{0, 1}}, 2);
    // π u_2 = (π_2, 0): Ȧ is one-dimensional.
    const LinearTableau a_dot = restricted_linear(heat, x);
    CHECK(a_dot.space == Subspace::span({Vec{1, 0}}, 2));
    // One X direction: E = A ⊗ X*.
    const LinearTableau e = elem_linear(heat, x);
    CHECK(e.w_dim == heat.dim());
    CHECK(e.space.dim() == heat.dim());
}

TEST_CASE("check_elemchar") {
    for (const auto& name : fx::names()) {
        const Tableau t = fx::by_name(name);
        if (!is_involutive_gnf(t).involutive) continue;
        INFO(name);
        const ElemCharReport rep = elemchar_report(t, 1);
        CHECK(rep.holds());
    }
    CHECK(check_elemchar(Tableau::full(2, 2)));
    const ElemCharReport heat = elemchar_report(fx::heat_1d(), 1);
    CHECK(heat.m == 1);
    CHECK(heat.links == std::vector<bool>{true, true, true});

    // X¹ = S here, so A|_X = 0 and every variety in the chain is empty.
    const ElemCharReport degenerate = elemchar_report(fx::by_name("art355-z4zero"), 1);
    CHECK(degenerate.m == 1);
    CHECK(degenerate.a_dot1.is_unit());
    CHECK(degenerate.e.is_unit());
    CHECK(degenerate.holds());
    const ReductionFlag f = elem_flag(fx::by_name("art355-z4zero"), 1);
    CHECK(f.terminal == Terminal::TableauZero);
    CHECK(f.terminal_is_cauchy);
}
