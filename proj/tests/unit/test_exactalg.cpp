#include "doctest.h"

#include "elemtab/exactalg.hpp"
#include "elemtab/rng.hpp"

using namespace elemtab;

namespace {

// Faddeev-LeVerrier: coefficients of det(x I - m), highest degree first.
// Independent of rref, used as an oracle for nilpotency.
Vec char_poly(const Mat& m) {
    const std::size_t d = m.rows();
    Vec c(d + 1);
    c[0] = 1;
    Mat mk(d, d);
    for (std::size_t k = 1; k <= d; ++k) {
        Mat a = m * mk;
        for (std::size_t i = 0; i < d; ++i) a(i, i) += c[k - 1];
        mk = a;
        Mat am = m * mk;
        Scalar tr = 0;
        for (std::size_t i = 0; i < d; ++i) tr += am(i, i);
        c[k] = -tr / Scalar(static_cast<long>(k));
    }
    return c;
}

}  // namespace

TEST_CASE("scalars parse canonically") {
    CHECK(parse_scalar("6/4") == Scalar(3, 2));
    CHECK(to_string(parse_scalar("-6/4")) == "-3/2");
    CHECK(to_string(parse_scalar("7")) == "7");
    CHECK_THROWS_AS(parse_scalar("1/0"), ValueError);
    CHECK_THROWS_AS(parse_scalar("1.5"), ValueError);
    CHECK_THROWS_AS(parse_scalar(""), ValueError);
}

TEST_CASE("rref examples") {
    auto id = rref(Mat::identity(2));
    CHECK(id.reduced == Mat::identity(2));
    CHECK(id.pivots == std::vector<std::size_t>{0, 1});
    CHECK(id.rank == 2);

    auto nil = rref(Mat{{0, 1}, {0, 0}});
    CHECK(nil.reduced == Mat{{0, 1}, {0, 0}});
    CHECK(nil.pivots == std::vector<std::size_t>{1});

    auto dep = rref(Mat{{1, 2}, {2, 4}});
    CHECK(dep.reduced == Mat{{1, 2}, {0, 0}});
    CHECK(dep.rank == 1);
}

TEST_CASE("kernel examples") {
    CHECK(kernel_basis(Mat::identity(3)).dim() == 0);
    CHECK(kernel_basis(Mat(2, 2)) == Subspace::full(2));
    auto k = kernel_basis(Mat{{1, 2}, {2, 4}});
    CHECK(k == Subspace::span({Vec{-2, 1}}, 2));
}

TEST_CASE("nilpotency examples") {
    CHECK(is_nilpotent(Mat{{0, 1}, {0, 0}}));
    CHECK_FALSE(is_nilpotent(Mat::identity(2)));
    CHECK(is_nilpotent(Mat{{1, 1}, {-1, -1}}));
    CHECK_THROWS_AS(is_nilpotent(Mat(2, 3)), DimensionMismatch);
}

TEST_CASE("restrict_endo examples") {
    Mat m{{0, 1}, {0, 0}};
    CHECK(restrict_endo(m, Subspace::full(2)) == m);
    CHECK(restrict_endo(m, Subspace::span({Vec{1, 0}}, 2)) == Mat{{0}});
    CHECK(restrict_endo(Mat::identity(3), Subspace::span({Vec{1, 2, 3}}, 3)) == Mat{{1}});
    CHECK_THROWS_AS(restrict_endo(m, Subspace::span({Vec{0, 1}}, 2)), InvarianceViolated);
}

TEST_CASE("inverse round trip") {
    Rng rng(3);
    for (int t = 0; t < 20; ++t) {
        Mat m = rng.mat(4, 4);
        if (rank(m) < 4) continue;
        CHECK(m * inverse(m) == Mat::identity(4));
    }
    CHECK_THROWS_AS(inverse(Mat{{1, 2}, {2, 4}}), DimensionMismatch);
}

TEST_CASE("property: rref idempotent and rank preserving") {
    Rng rng(11);
    for (int t = 0; t < 40; ++t) {
        const std::size_t r = 1 + rng.uniform(0, 4), c = 1 + rng.uniform(0, 5);
        Mat m = rng.mat(r, c, 2);
        auto once = rref(m);
        auto twice = rref(once.reduced);
        CHECK(twice.reduced == once.reduced);
        CHECK(twice.rank == once.rank);
        auto k = kernel_basis(m);
        CHECK(k.dim() == c - once.rank);
        for (const auto& v : k.basis_vectors())
            for (const auto& x : m * v) CHECK(x == 0);
    }
}

TEST_CASE("property: nilpotency agrees with the characteristic polynomial") {
    Rng rng(5);
    int nilpotent_seen = 0;
    for (int t = 0; t < 60; ++t) {
        const std::size_t d = 2 + rng.uniform(0, 2);
        Mat m(d, d);
        if (t % 2 == 0) {
            // Conjugate of a strictly upper triangular matrix: nilpotent.
            Mat u = rng.mat(d, d);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j <= i; ++j) u(i, j) = 0;
            Mat p = rng.mat(d, d);
            if (rank(p) < d) continue;
            m = p * u * inverse(p);
        } else {
            m = rng.mat(d, d, 1);
        }
        const Vec c = char_poly(m);
        bool pure_power = true;
        for (std::size_t k = 1; k < c.size(); ++k) pure_power = pure_power && c[k] == 0;
        CHECK(is_nilpotent(m) == pure_power);
        nilpotent_seen += pure_power;
    }
    CHECK(nilpotent_seen > 10);
}

TEST_CASE("property: subspace canonical form is generator-order independent") {
    Rng rng(17);
    for (int t = 0; t < 30; ++t) {
        std::vector<Vec> gens;
        for (int i = 0; i < 3; ++i) gens.push_back(rng.vec(5, 3));
        std::vector<Vec> shuffled{gens[2], gens[0], gens[1]};
        shuffled[0] = shuffled[0];
        for (auto& x : shuffled[1]) x *= 3;
        CHECK(Subspace::span(gens, 5) == Subspace::span(shuffled, 5));
        auto s = Subspace::span(gens, 5);
        auto a = s.annihilator();
        CHECK(a.dim() + s.dim() == 5);
        CHECK(a.annihilator() == s);
        auto other = Subspace::span({rng.vec(5), rng.vec(5)}, 5);
        auto meet = s.intersect(other);
        CHECK(s.contains(meet));
        CHECK(other.contains(meet));
        CHECK(meet.dim() + s.join(other).dim() == s.dim() + other.dim());
    }
}
