#include <doctest.h>

#include <string>

#include "hnnsa/builtin.hpp"
#include "hnnsa/svg.hpp"

using namespace hnnsa;

namespace {

std::size_t count(const std::string& haystack, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) ++n;
    return n;
}

}  // namespace

TEST_CASE("tour plot") {
    const auto inst = *builtin_instance("matrix4");
    const auto svg = plot_tour_svg(inst, Tour({1, 0, 3, 2}));
    CHECK(count(svg, "<circle") == 4);
    CHECK(count(svg, "<line") == 4);
    CHECK(svg == plot_tour_svg(inst, Tour({1, 0, 3, 2})));
    CHECK(count(plot_tour_svg(inst, std::nullopt), "<line") == 0);
    CHECK_THROWS_AS(plot_tour_svg(inst, Tour::identity(5)), Error);
}

TEST_CASE("grid plot") {
    const auto inst = *builtin_instance("paper8");
    auto grid = tour_to_matrix(Tour({6, 3, 2, 4, 5, 7, 0, 1}));
    grid.set(0, 0, 1);
    const auto svg = plot_grid_svg(inst, grid);
    CHECK(count(svg, "class=\"filled\"") + count(svg, "class=\"empty\"") == 64);
    CHECK(count(svg, "class=\"filled\"") == grid.ones());
    CHECK_THROWS_AS(plot_grid_svg(inst, ActivationGrid(4)), Error);
}
