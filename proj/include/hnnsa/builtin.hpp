#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "hnnsa/instance.hpp"

namespace hnnsa {

/// "cityset1" (10 cities), "paper8" (8 cities), "matrix4" (4 cities with an
/// explicit distance matrix).
std::optional<Instance> builtin_instance(std::string_view name);
std::vector<std::string_view> builtin_names();

}  // namespace hnnsa
