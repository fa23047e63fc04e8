#pragma once

// Test-only reference computations, written independently of the library
// code paths they check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <utility>
#include <vector>

#include "hnnsa/hopfield.hpp"
#include "hnnsa/instance.hpp"

namespace oracle {

using Points = std::vector<std::pair<double, double>>;

inline double closed_length(const Points& pts) {
    double total = 0.0;
    for (std::size_t k = 0; k < pts.size(); ++k) {
        const auto& a = pts[k];
        const auto& b = pts[(k + 1) % pts.size()];
        total += std::sqrt((a.first - b.first) * (a.first - b.first) + (a.second - b.second) * (a.second - b.second));
    }
    return total;
}

inline double length(const hnnsa::DistanceMatrix& m, const std::vector<std::size_t>& order) {
    double total = 0.0;
    for (std::size_t k = 0; k < order.size(); ++k) total += m(order[k], order[(k + 1) % order.size()]);
    return total;
}

// Minimum over all n! orderings, no symmetry reduction.
inline double optimum_all_permutations(const hnnsa::DistanceMatrix& m) {
    std::vector<std::size_t> order(m.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    double best = std::numeric_limits<double>::infinity();
    do {
        best = std::min(best, length(m, order));
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

// The energy written out term by term as four literal nested sums.
inline double energy(const hnnsa::ActivationGrid& g, const hnnsa::DistanceMatrix& m, double A, double B, double C,
                     double D) {
    const auto n = g.size();
    auto v = [&](std::size_t x, std::size_t i) { return static_cast<double>(g(x, i)); };
    double row = 0, col = 0, total = 0, dist = 0;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) row += v(x, i) * v(x, j);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                if (y != x) col += v(x, i) * v(y, i);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t i = 0; i < n; ++i) total += v(x, i);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            if (y == x) continue;
            for (std::size_t i = 0; i < n; ++i)
                dist += m(x, y) * v(x, i) * (v(y, (i + 1) % n) + v(y, (i + n - 1) % n));
        }
    const double dn = static_cast<double>(n);
    return A / 2 * row + B / 2 * col + C / 2 * (total - dn) * (total - dn) + D / 2 * dist;
}

inline bool is_permutation_matrix(const hnnsa::TourMatrix& g) {
    const auto n = g.size();
    for (std::size_t x = 0; x < n; ++x) {
        int r = 0, c = 0;
        for (std::size_t i = 0; i < n; ++i) {
            r += g(x, i);
            c += g(i, x);
        }
        if (r != 1 || c != 1) return false;
    }
    return true;
}

}  // namespace oracle
