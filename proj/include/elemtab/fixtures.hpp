#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "elemtab/tableau.hpp"

namespace elemtab::fixtures {

/// Parameters of the (n, r) = (5, 3) artificial family.
struct Params355 {
    Scalar p = 2, q = 3, g = 1, h = 1, z2 = 1, z3 = 1, z4 = 1;
};

/// [[π1, π2], [π2, 0]].
Tableau heat_1d();
/// Rows (π¹₁, π¹₂, -π²₂), (π²₁, π²₂, π¹₂), (π³₁, π²₁, π¹₁).
Tableau heat_2d();
/// The artificial non-elementary tableau with characters (3, 2, 2, 0, 0).
/// ParameterDomain if q = 0 or h = 0.
Tableau artificial_355(const Params355& params = {});
/// Reduced coefficients of artificial_355, zero-based keys.
BMap artificial_355_coefficients(const Params355& params);
/// span{I} in W ⊗ V* with n = r = 2: fails Cartan's test.
Tableau crossed();

/// Covectors (original coordinates) known to lie on the characteristic variety.
std::vector<Vec> rational_char_points(const std::string& name, const Params355& params = {});

struct RandomSpec {
    std::size_t max_n = 6;
    std::size_t max_r = 5;
    std::size_t retries = 16;
};

/// An involutive tableau from the artificial family, direct sums of small
/// involutive blocks, zero-column padding, and random frame changes of V and
/// W. Verified by the coefficient criteria and Cartan's test before return;
/// GenerationFailed after the retry bound.
Tableau random_involutive(std::uint64_t seed, const RandomSpec& spec = {});

/// One random change of a reduced coefficient (or of a generator, for
/// tableaux without coefficients). The result need not be involutive.
Tableau perturb(const Tableau& t, std::uint64_t seed);

/// Direct sum over a common V.
Tableau direct_sum(const Tableau& a, const Tableau& b, std::uint64_t seed = 0);
/// Appends `extra` coordinates of V on which every element vanishes.
Tableau pad_columns(const Tableau& t, std::size_t extra, std::uint64_t seed = 0);
/// Generators g -> h g p for invertible p (on V) and h (on W).
Tableau change_frames(const Tableau& t, const Mat& p, const Mat& h, std::uint64_t seed = 0);

/// Names accepted by by_name: heat1d, heat2d, art355, art355-z4zero, zero22, full22, crossed.
std::vector<std::string> names();
Tableau by_name(const std::string& name);

}  // namespace elemtab::fixtures
