#pragma once

#include <vector>

#include "traag/integers.hpp"

namespace traag {

using IntMatrix = std::vector<std::vector<Int>>;

/// Nonzero diagonal of the Smith normal form of a rectangular integer
/// matrix: positive entries d_1 | d_2 | ... in exact arithmetic.
std::vector<Int> smith_normal_form(IntMatrix m);

}  // namespace traag
