#include "hnnsa/baselines.hpp"

#include <algorithm>
#include <array>
#include <limits>

namespace hnnsa {

Tour greedy_nearest_neighbor(const DistanceMatrix& m, std::size_t start) {
    const auto n = m.size();
    if (start >= n) {
        throw Error(ErrorCode::invalid_argument,
                    "start city " + std::to_string(start) + " out of range for " + std::to_string(n));
    }
    std::vector<bool> visited(n, false);
    std::vector<std::size_t> order{start};
    visited[start] = true;
    for (std::size_t step = 1; step < n; ++step) {
        const auto from = order.back();
        std::size_t next = n;
        double nearest = std::numeric_limits<double>::infinity();
        for (std::size_t y = 0; y < n; ++y) {
            if (!visited[y] && m(from, y) < nearest) {
                nearest = m(from, y);
                next = y;
            }
        }
        visited[next] = true;
        order.push_back(next);
    }
    return Tour(std::move(order));
}

Tour two_opt(const DistanceMatrix& m, const Tour& t) {
    const auto n = t.size();
    if (n != m.size()) throw Error(ErrorCode::invalid_tour, "tour and matrix sizes differ");
    std::vector<std::size_t> order(t.begin(), t.end());
    if (n < 4) return t;

    for (;;) {
        double best_delta = -kImprovementEpsilon;
        std::size_t best_i = 0, best_j = 0;
        for (std::size_t i = 0; i + 2 < n; ++i) {
            for (std::size_t j = i + 2; j < n; ++j) {
                if (i == 0 && j == n - 1) continue;  // edges share city order[0]
                const auto a = order[i], b = order[i + 1];
                const auto c = order[j], e = order[(j + 1) % n];
                const double delta = m(a, c) + m(b, e) - m(a, b) - m(c, e);
                if (delta < best_delta) {
                    best_delta = delta;
                    best_i = i;
                    best_j = j;
                }
            }
        }
        if (best_j == 0) break;
        std::reverse(order.begin() + static_cast<std::ptrdiff_t>(best_i + 1),
                     order.begin() + static_cast<std::ptrdiff_t>(best_j + 1));
    }
    return Tour(std::move(order));
}

namespace {

// A 3-opt reconnection: the two inner segments, in which order, and whether
// each is reversed.
struct Reconnection {
    bool swap_segments;
    bool reverse_first;
    bool reverse_second;
};

constexpr std::array<Reconnection, 7> kReconnections{{
    {false, true, false},
    {false, false, true},
    {false, true, true},
    {true, false, false},
    {true, true, false},
    {true, false, true},
    {true, true, true},
}};

struct Segment {
    std::size_t first;  // position of the first element in the old order
    std::size_t last;
    bool reversed;

    std::size_t head(std::span<const std::size_t> order) const { return order[reversed ? last : first]; }
    std::size_t tail(std::span<const std::size_t> order) const { return order[reversed ? first : last]; }
};

}  // namespace

Tour three_opt(const DistanceMatrix& m, const Tour& t) {
    const auto n = t.size();
    if (n != m.size()) throw Error(ErrorCode::invalid_tour, "tour and matrix sizes differ");
    if (n < 5) return two_opt(m, t);
    std::vector<std::size_t> order(t.begin(), t.end());

    for (;;) {
        double best_delta = -kImprovementEpsilon;
        std::size_t bi = 0, bj = 0, bk = 0;
        const Reconnection* best_move = nullptr;

        // Removed edges: (i, i+1), (j, j+1), (k, k+1 mod n).
        for (std::size_t i = 0; i + 2 < n; ++i) {
            for (std::size_t j = i + 1; j + 1 < n; ++j) {
                for (std::size_t k = j + 1; k < n; ++k) {
                    const auto a = order[i];
                    const auto f = order[(k + 1) % n];
                    const double removed = m(a, order[i + 1]) + m(order[j], order[j + 1]) + m(order[k], f);
                    for (const auto& r : kReconnections) {
                        Segment s1{i + 1, j, r.reverse_first};
                        Segment s2{j + 1, k, r.reverse_second};
                        if (r.swap_segments) std::swap(s1, s2);
                        const double added = m(a, s1.head(order)) + m(s1.tail(order), s2.head(order)) +
                                             m(s2.tail(order), f);
                        const double delta = added - removed;
                        if (delta < best_delta) {
                            best_delta = delta;
                            bi = i;
                            bj = j;
                            bk = k;
                            best_move = &r;
                        }
                    }
                }
            }
        }
        if (!best_move) break;

        std::vector<std::size_t> first(order.begin() + static_cast<std::ptrdiff_t>(bi + 1),
                                       order.begin() + static_cast<std::ptrdiff_t>(bj + 1));
        std::vector<std::size_t> second(order.begin() + static_cast<std::ptrdiff_t>(bj + 1),
                                        order.begin() + static_cast<std::ptrdiff_t>(bk + 1));
        if (best_move->reverse_first) std::reverse(first.begin(), first.end());
        if (best_move->reverse_second) std::reverse(second.begin(), second.end());
        if (best_move->swap_segments) std::swap(first, second);
        auto out = order.begin() + static_cast<std::ptrdiff_t>(bi + 1);
        out = std::copy(first.begin(), first.end(), out);
        std::copy(second.begin(), second.end(), out);
    }
    return Tour(std::move(order));
}

}  // namespace hnnsa
