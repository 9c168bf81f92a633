#include "elemtab/fixtures.hpp"

#include "elemtab/rng.hpp"
#include "elemtab/spencer.hpp"

namespace elemtab::fixtures {

Tableau heat_1d() {
    return Tableau::from_generators(2, 2, {Mat{{1, 0}, {0, 0}}, Mat{{0, 1}, {1, 0}}});
}

Tableau heat_2d() {
    return Tableau::from_generators(3, 3,
                                    {
                                        Mat{{1, 0, 0}, {0, 0, 0}, {0, 0, 1}},   // π¹₁
                                        Mat{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}},   // π²₁
                                        Mat{{0, 0, 0}, {0, 0, 0}, {1, 0, 0}},   // π³₁
                                        Mat{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}},   // π¹₂
                                        Mat{{0, 0, -1}, {0, 1, 0}, {0, 0, 0}},  // π²₂
                                    });
}

BMap artificial_355_coefficients(const Params355& x) {
    if (x.q == 0 || x.h == 0) throw ParameterDomain("artificial_355 needs q != 0 and h != 0");
    BMap b;
    auto set = [&](std::size_t a, std::size_t lambda, std::size_t k, std::size_t bb, const Scalar& v) {
        if (v != 0) b[{a - 1, lambda - 1, k - 1, bb - 1}] = v;
    };
    // Column 5: rows 1-2 from B^1_5, B^2_5, B^3_5; row 3 vanishes (z5 = 0).
    const Scalar g = x.g, h = x.h, q = x.q, p = x.p;
    const Scalar c5[2][3][3] = {
        // row 1: coefficients of (λ, b)
        {{g, g / h, 0}, {0, 1, 0}, {1, 1 / q, 0}},
        // row 2
        {{-g * h, -g, 0}, {0, 0, 0}, {-q, -1, 0}},
    };
    for (std::size_t a = 1; a <= 2; ++a)
        for (std::size_t lambda = 1; lambda <= 3; ++lambda)
            for (std::size_t bb = 1; bb <= 3; ++bb) {
                set(a, lambda, 5, bb, c5[a - 1][lambda - 1][bb - 1]);
                set(a, lambda, 4, bb, p * c5[a - 1][lambda - 1][bb - 1]);
            }
    set(3, 1, 2, 3, x.z2);
    set(3, 1, 3, 3, x.z3);
    set(3, 1, 4, 3, x.z4);
    return b;
}

Tableau artificial_355(const Params355& params) {
    return Tableau::from_reduced(5, 3, {3, 2, 2, 0, 0}, artificial_355_coefficients(params));
}

Tableau crossed() { return Tableau::from_generators(2, 2, {Mat::identity(2)}); }

std::vector<Vec> rational_char_points(const std::string& name, const Params355& x) {
    if (name == "heat1d") return {Vec{1, 0}};
    if (name == "heat2d") return {Vec{1, 0, 0}};
    if (name == "art355") return {Vec{1, x.z2, x.z3, x.z4, 0}};
    if (name == "art355-z4zero") return {Vec{1, x.z2, x.z3, 0, 0}};
    if (name == "full22") return {Vec{1, 0}, Vec{0, 1}, Vec{1, 1}};
    return {};
}

Tableau direct_sum(const Tableau& a, const Tableau& b, std::uint64_t seed) {
    if (a.n() != b.n()) throw DimensionMismatch("direct_sum needs a common V");
    const std::size_t n = a.n(), r = a.r() + b.r();
    std::vector<Mat> gens;
    for (const auto& g : a.generators()) {
        Mat m(r, n);
        for (std::size_t i = 0; i < a.r(); ++i)
            for (std::size_t k = 0; k < n; ++k) m(i, k) = g(i, k);
        gens.push_back(m);
    }
    for (const auto& g : b.generators()) {
        Mat m(r, n);
        for (std::size_t i = 0; i < b.r(); ++i)
            for (std::size_t k = 0; k < n; ++k) m(a.r() + i, k) = g(i, k);
        gens.push_back(m);
    }
    return Tableau::from_generators(n, r, gens, seed);
}

Tableau pad_columns(const Tableau& t, std::size_t extra, std::uint64_t seed) {
    const std::size_t n = t.n() + extra;
    std::vector<Mat> gens;
    for (const auto& g : t.generators()) {
        Mat m(t.r(), n);
        for (std::size_t i = 0; i < t.r(); ++i)
            for (std::size_t k = 0; k < t.n(); ++k) m(i, k) = g(i, k);
        gens.push_back(m);
    }
    return Tableau::from_generators(n, t.r(), gens, seed);
}

Tableau change_frames(const Tableau& t, const Mat& p, const Mat& h, std::uint64_t seed) {
    std::vector<Mat> gens;
    for (const auto& g : t.generators()) gens.push_back(h * g * p);
    return Tableau::from_generators(t.n(), t.r(), gens, seed);
}

namespace {

Mat random_invertible(Rng& rng, std::size_t d) {
    Mat m;
    do m = rng.mat(d, d, 2);
    while (rank(m) < d);
    return m;
}

Params355 random_params(Rng& rng) {
    Params355 x;
    x.p = rng.nonzero_int(3);
    x.q = rng.nonzero_int(3);
    x.g = rng.nonzero_int(3);
    x.h = rng.nonzero_int(3);
    x.z2 = rng.small_int(3);
    x.z3 = rng.small_int(3);
    x.z4 = rng.small_int(3);
    return x;
}

/// Small involutive building block on n columns with at most r_max rows.
Tableau random_block(Rng& rng, std::size_t n, std::size_t r_max) {
    switch (rng.uniform(0, 3)) {
        case 0:
            if (n >= 2 && r_max >= 2) return pad_columns(heat_1d(), n - 2);
            [[fallthrough]];
        case 1:
            if (n >= 3 && r_max >= 3) return pad_columns(heat_2d(), n - 3);
            [[fallthrough]];
        case 2: {
            // Rank-one generator z ⊗ ξ.
            Mat m(1, n);
            for (std::size_t k = 0; k < n; ++k) m(0, k) = rng.small_int(2);
            m(0, static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1))) = 1;
            return Tableau::from_generators(n, 1, {m});
        }
        default: {
            // Full tableau on a random number of leading columns.
            const auto used = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(std::min<std::size_t>(n, 2))));
            return pad_columns(Tableau::full(used, 1), n - used);
        }
    }
}

}  // namespace

Tableau random_involutive(std::uint64_t seed, const RandomSpec& spec) {
    Rng rng(derive_seed(seed, 0xf1a7));
    for (std::size_t attempt = 0; attempt < spec.retries; ++attempt) {
        try {
            Tableau t;
            const long family = rng.uniform(0, 2);
            if (family == 0 && spec.max_n >= 5 && spec.max_r >= 3) {
                t = artificial_355(random_params(rng));
                if (spec.max_n > 5 && rng.uniform(0, 1) == 1) t = pad_columns(t, 1);
            } else {
                const auto n = static_cast<std::size_t>(rng.uniform(2, static_cast<long>(std::min<std::size_t>(spec.max_n, 4))));
                t = random_block(rng, n, spec.max_r);
                while (t.r() < spec.max_r && rng.uniform(0, 2) > 0) {
                    Tableau extra = random_block(rng, n, spec.max_r - t.r());
                    if (t.r() + extra.r() > spec.max_r) break;
                    t = direct_sum(t, extra);
                }
                if (t.n() < spec.max_n && rng.uniform(0, 2) == 0) t = pad_columns(t, 1);
            }
            t = change_frames(t, random_invertible(rng, t.n()), random_invertible(rng, t.r()), rng.next());
            if (is_involutive_gnf(t).involutive && cartan_test(t).involutive) return t;
        } catch (const GenericityFailure&) {
            // Unlucky frame; draw again.
        }
    }
    throw GenerationFailed("random_involutive: no verified sample within the retry bound");
}

Tableau perturb(const Tableau& t, std::uint64_t seed) {
    Rng rng(derive_seed(seed, 0x9e77));
    const auto& s = t.characters();
    std::vector<BKey> slots;
    for (std::size_t k = 0; k < t.n(); ++k)
        for (std::size_t lambda = 0; lambda < k; ++lambda)
            for (std::size_t a = s[k]; a < t.r(); ++a)
                for (std::size_t bb = 0; bb < s[lambda]; ++bb) slots.push_back({a, lambda, k, bb});
    if (!slots.empty()) {
        BMap b = t.b();
        const BKey key = slots[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(slots.size()) - 1))];
        b[key] = b[key] + rng.nonzero_int(3);
        return Tableau::from_reduced(t.n(), t.r(), s, b, rng.next());
    }
    // No coefficient slots: add a random generator instead.
    std::vector<Mat> gens = t.generators();
    for (int tries = 0; tries < 16; ++tries) {
        gens.push_back(rng.mat(t.r(), t.n(), 2));
        std::vector<Vec> flat;
        for (const auto& g : gens) flat.push_back(g.entries());
        if (rank(Mat::from_rows(flat, t.r() * t.n())) == gens.size())
            return Tableau::from_generators(t.n(), t.r(), gens, rng.next());
        gens.pop_back();
    }
    return t;
}

std::vector<std::string> names() {
    return {"heat1d", "heat2d", "art355", "art355-z4zero", "zero22", "full22", "crossed"};
}

Tableau by_name(const std::string& name) {
    if (name == "heat1d") return heat_1d();
    if (name == "heat2d") return heat_2d();
    if (name == "art355") return artificial_355();
    if (name == "art355-z4zero") {
        Params355 x;
        x.z4 = 0;
        return artificial_355(x);
    }
    if (name == "zero22") return Tableau::zero(2, 2);
    if (name == "full22") return Tableau::full(2, 2);
    if (name == "crossed") return crossed();
    throw ValueError("unknown fixture '" + name + "'");
}

}  // namespace elemtab::fixtures
