#include "hnnsa/svg.hpp"

#include <algorithm>
#include <cstdio>

namespace hnnsa {

namespace {

constexpr double kCanvas = 480.0;
constexpr double kMargin = 40.0;

std::string escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '&': out += "&amp;"; break;
        case '"': out += "&quot;"; break;
        default: out += ch;
        }
    }
    return out;
}

std::string header(double width, double height) {
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" "
                  "viewBox=\"0 0 %.0f %.0f\">\n",
                  width, height, width, height);
    return std::string("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n") + buf +
           "<rect x=\"0\" y=\"0\" width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

// Maps plane coordinates onto the canvas, y axis pointing up.
struct Projection {
    double min_x, min_y, scale;

    double px(double x) const { return kMargin + (x - min_x) * scale; }
    double py(double y) const { return kCanvas - kMargin - (y - min_y) * scale; }
};

Projection fit(std::span<const City> cities) {
    auto [lx, hx] = std::minmax_element(cities.begin(), cities.end(), [](auto& a, auto& b) { return a.x < b.x; });
    auto [ly, hy] = std::minmax_element(cities.begin(), cities.end(), [](auto& a, auto& b) { return a.y < b.y; });
    const double span = std::max(hx->x - lx->x, hy->y - ly->y);
    const double scale = span > 0.0 ? (kCanvas - 2 * kMargin) / span : 1.0;
    return {lx->x, ly->y, scale};
}

}  // namespace

std::string plot_tour_svg(const Instance& inst, const std::optional<Tour>& tour) {
    if (tour && tour->size() != inst.size()) {
        throw Error(ErrorCode::invalid_tour, "tour visits " + std::to_string(tour->size()) +
                                                 " cities, instance has " + std::to_string(inst.size()));
    }
    const auto cities = inst.cities();
    const auto proj = fit(cities);
    std::string out = header(kCanvas, kCanvas);
    char buf[256];
    if (tour) {
        out += "<g class=\"tour\" stroke=\"#1f77b4\" stroke-width=\"2\">\n";
        const auto n = tour->size();
        for (std::size_t k = 0; k < n; ++k) {
            const auto& a = cities[(*tour)[k]];
            const auto& b = cities[(*tour)[(k + 1) % n]];
            std::snprintf(buf, sizeof buf, "<line x1=\"%.3f\" y1=\"%.3f\" x2=\"%.3f\" y2=\"%.3f\"/>\n",
                          proj.px(a.x), proj.py(a.y), proj.px(b.x), proj.py(b.y));
            out += buf;
        }
        out += "</g>\n";
    }
    out += "<g class=\"cities\">\n";
    for (const auto& c : cities) {
        std::snprintf(buf, sizeof buf, "<circle cx=\"%.3f\" cy=\"%.3f\" r=\"5\" fill=\"#d62728\"/>\n",
                      proj.px(c.x), proj.py(c.y));
        out += buf;
        std::snprintf(buf, sizeof buf, "<text x=\"%.3f\" y=\"%.3f\" font-size=\"14\">", proj.px(c.x) + 7,
                      proj.py(c.y) - 7);
        out += buf + escape(c.label) + "</text>\n";
    }
    out += "</g>\n</svg>\n";
    return out;
}

std::string plot_grid_svg(const Instance& inst, const ActivationGrid& grid) {
    const auto n = grid.size();
    if (n != inst.size()) {
        throw Error(ErrorCode::invalid_size, "grid is " + std::to_string(n) + "x" + std::to_string(n) +
                                                 ", instance has " + std::to_string(inst.size()) + " cities");
    }
    constexpr double cell = 32.0;
    constexpr double label = 40.0;
    const double size = label + cell * static_cast<double>(n) + 8.0;
    std::string out = header(size, size);
    char buf[256];
    for (std::size_t i = 0; i < n; ++i) {
        std::snprintf(buf, sizeof buf, "<text x=\"%.1f\" y=\"24\" font-size=\"12\" text-anchor=\"middle\">%zu</text>\n",
                      label + cell * (static_cast<double>(i) + 0.5), i + 1);
        out += buf;
    }
    for (std::size_t x = 0; x < n; ++x) {
        std::snprintf(buf, sizeof buf, "<text x=\"4\" y=\"%.1f\" font-size=\"12\">",
                      label + cell * (static_cast<double>(x) + 0.5) + 4);
        out += buf + escape(inst.cities()[x].label) + "</text>\n";
        for (std::size_t i = 0; i < n; ++i) {
            const bool on = grid(x, i) != 0;
            std::snprintf(buf, sizeof buf,
                          "<rect class=\"%s\" x=\"%.1f\" y=\"%.1f\" width=\"%.1f\" height=\"%.1f\" "
                          "fill=\"%s\" stroke=\"#444\"/>\n",
                          on ? "filled" : "empty", label + cell * static_cast<double>(i),
                          label + cell * static_cast<double>(x), cell, cell, on ? "#222" : "#fff");
            out += buf;
        }
    }
    out += "</svg>\n";
    return out;
}

}  // namespace hnnsa
