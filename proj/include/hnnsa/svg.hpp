#pragma once

#include <optional>
#include <string>

#include "hnnsa/hopfield.hpp"
#include "hnnsa/instance.hpp"

namespace hnnsa {

/// City markers with labels, plus one line per tour edge when given.
std::string plot_tour_svg(const Instance& inst, const std::optional<Tour>& tour);

/// n x n cells, filled where the unit is active.
std::string plot_grid_svg(const Instance& inst, const ActivationGrid& grid);

}  // namespace hnnsa
