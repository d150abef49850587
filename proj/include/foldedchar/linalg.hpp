#pragma once

#include <stdexcept>
#include <vector>

#include "foldedchar/rootdata.hpp"

namespace foldedchar {

using RatMatrix = std::vector<std::vector<Rat>>;
using IntMatrix = std::vector<std::vector<Int>>;

/// Rank of an integer matrix by exact Gaussian elimination over the rationals.
int exact_rank(IntMatrix m);

/// Solves the square system a * x = b exactly. Throws std::invalid_argument on
/// a singular matrix.
std::vector<Rat> solve_exact(RatMatrix a, std::vector<Rat> b);

}  // namespace foldedchar
