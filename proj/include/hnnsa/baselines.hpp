#pragma once

#include <cstddef>

#include "hnnsa/instance.hpp"
#include "hnnsa/tour.hpp"

namespace hnnsa {

// Moves must gain more than this to be applied.
inline constexpr double kImprovementEpsilon = 1e-12;

/// Nearest unvisited city next, ties to the lowest index.
Tour greedy_nearest_neighbor(const DistanceMatrix& m, std::size_t start);

/// Best-improvement segment reversal until 2-opt local optimum.
Tour two_opt(const DistanceMatrix& m, const Tour& t);

/// Best-improvement over every edge triple and all 7 reconnections.
/// Falls back to two_opt for n < 5.
Tour three_opt(const DistanceMatrix& m, const Tour& t);

}  // namespace hnnsa
