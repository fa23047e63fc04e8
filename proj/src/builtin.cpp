#include "hnnsa/builtin.hpp"

namespace hnnsa {

namespace {

Instance cityset1() {
    return Instance("cityset1", {{"A", 0.25, 0.16},
                                 {"B", 0.85, 0.35},
                                 {"C", 0.65, 0.24},
                                 {"D", 0.70, 0.50},
                                 {"E", 0.15, 0.22},
                                 {"F", 0.25, 0.78},
                                 {"G", 0.40, 0.45},
                                 {"H", 0.90, 0.65},
                                 {"I", 0.55, 0.90},
                                 {"J", 0.60, 0.28}});
}

Instance paper8() {
    return Instance("paper8", {{"1", 2, 3},
                               {"2", 5, 6},
                               {"3", 8, 5},
                               {"4", 4, 7},
                               {"5", 6, 4},
                               {"6", 2, 1},
                               {"7", 6, 7},
                               {"8", 5, 2}});
}

// Distances are given, not measured; the coordinates only place the markers
// when plotting.
Instance matrix4() {
    DistanceMatrix m(4, {0, 15, 13, 17,
                         15, 0, 14, 27,
                         13, 14, 0, 25,
                         17, 27, 25, 0});
    return Instance("matrix4", {{"A", 0, 0}, {"B", 1, 0}, {"C", 1, 1}, {"D", 0, 1}}, std::nullopt, std::move(m));
}

}  // namespace

std::optional<Instance> builtin_instance(std::string_view name) {
    if (name == "cityset1") return cityset1();
    if (name == "paper8") return paper8();
    if (name == "matrix4") return matrix4();
    return std::nullopt;
}

std::vector<std::string_view> builtin_names() { return {"cityset1", "paper8", "matrix4"}; }

}  // namespace hnnsa
