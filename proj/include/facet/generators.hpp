#pragma once

#include <cstddef>
#include <cstdint>

#include "facet/canonical.hpp"

namespace facet {

/// Name written into instance metadata. Doubles are drawn as
/// (next() >> 11) * 2^-53, so streams are identical on every platform.
inline constexpr const char* kGeneratorName = "mt19937_64";

/// min -x_dim over the Klee-Minty cube:
///   x_1 >= 0, x_1 <= 1,
///   x_j - eps x_{j-1} >= 0, x_j + eps x_{j-1} <= 1   (j = 2..dim),
/// with box [0,1]^dim. Optimum (0,...,0,1), objective -1.
/// Throws RangeError unless 2 <= dim <= 12 and 0 < eps < 1/2.
StandardLP gen_klee_minty(std::size_t dim, double eps = 1.0 / 3.0);

/// Random rows with entries in [-1,1] passing strictly above an interior
/// point z of [0,1]^d, objective entries in [-1,1], box [-1,2]^d.
/// Throws RangeError if d == 0.
StandardLP gen_random_feasible(std::size_t d, std::size_t m, std::uint64_t seed);

/// gen_random_feasible with rows 1 and 2 replaced by a x >= 1 and -a x >= 0
/// for a random unit vector a. Throws RangeError if m < 2.
StandardLP gen_infeasible(std::size_t d, std::size_t m, std::uint64_t seed);

}  // namespace facet
