#pragma once

#include <cstdint>
#include <random>

#include "elemtab/exactalg.hpp"

namespace elemtab {

/// Deterministic PRNG. Draws are defined here rather than through the
/// standard distributions so that streams agree across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }
    /// Uniform integer in [lo, hi].
    long uniform(long lo, long hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t x;
        do x = eng_();
        while (x >= limit);
        return lo + static_cast<long>(x % span);
    }
    Scalar small_int(long box = 5) { return Scalar(uniform(-box, box)); }
    Scalar nonzero_int(long box = 5) {
        long v;
        do v = uniform(-box, box);
        while (v == 0);
        return Scalar(v);
    }
    Vec vec(std::size_t n, long box = 5) {
        Vec v(n);
        for (auto& x : v) x = small_int(box);
        return v;
    }
    Mat mat(std::size_t rows, std::size_t cols, long box = 5) {
        Mat m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = small_int(box);
        return m;
    }

private:
    std::mt19937_64 eng_;
};

/// splitmix64 mixing of (seed, stream): independent sub-seeds per purpose.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace elemtab
