#include "hnnsa/tour.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "hnnsa/instance.hpp"

namespace hnnsa {

bool is_permutation(std::span<const std::size_t> order) noexcept {
    std::vector<bool> seen(order.size(), false);
    for (auto city : order) {
        if (city >= order.size() || seen[city]) return false;
        seen[city] = true;
    }
    return true;
}

Tour::Tour(std::vector<std::size_t> order) : order_(std::move(order)) {
    if (!is_permutation(order_)) {
        throw Error(ErrorCode::invalid_tour,
                    "tour of length " + std::to_string(order_.size()) + " is not a permutation");
    }
}

Tour Tour::identity(std::size_t n) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    return Tour(std::move(order));
}

TourMatrix::TourMatrix(std::size_t n, std::vector<std::uint8_t> cells)
    : n_(n), cells_(std::move(cells)) {
    if (cells_.size() != n_ * n_) {
        throw Error(ErrorCode::invalid_size, "tour matrix needs " + std::to_string(n_ * n_) +
                                                 " cells, got " + std::to_string(cells_.size()));
    }
    if (std::any_of(cells_.begin(), cells_.end(), [](auto c) { return c > 1; })) {
        throw InvalidTourMatrix(MatrixViolation::non_binary, "tour matrix entries must be 0 or 1");
    }
}

std::size_t TourMatrix::ones() const noexcept {
    return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), std::uint8_t{1}));
}

std::optional<MatrixViolation> find_violation(const TourMatrix& tm) noexcept {
    const auto n = tm.size();
    if (tm.ones() != n) return MatrixViolation::count;
    for (std::size_t x = 0; x < n; ++x) {
        std::size_t sum = 0;
        for (std::size_t i = 0; i < n; ++i) sum += tm(x, i);
        if (sum != 1) return MatrixViolation::row;
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t sum = 0;
        for (std::size_t x = 0; x < n; ++x) sum += tm(x, i);
        if (sum != 1) return MatrixViolation::column;
    }
    return std::nullopt;
}

bool is_valid_permutation_matrix(const TourMatrix& tm) noexcept {
    return tm.size() > 0 && !find_violation(tm);
}

TourMatrix tour_to_matrix(const Tour& t) {
    TourMatrix tm(t.size());
    for (std::size_t position = 0; position < t.size(); ++position) tm.set(t[position], position, 1);
    return tm;
}

Tour matrix_to_tour(const TourMatrix& tm) {
    if (auto violation = find_violation(tm)) {
        throw InvalidTourMatrix(*violation, std::string("not a permutation matrix: ") +
                                                to_string(*violation) + " condition fails");
    }
    if (tm.size() == 0) throw InvalidTourMatrix(MatrixViolation::count, "empty tour matrix");
    const auto n = tm.size();
    std::vector<std::size_t> order(n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t i = 0; i < n; ++i)
            if (tm(x, i)) order[i] = x;
    return Tour(std::move(order));
}

Tour canonicalize(const Tour& t) {
    const auto n = t.size();
    if (n == 0) return t;
    const auto start = static_cast<std::size_t>(std::find(t.begin(), t.end(), 0) - t.begin());
    std::vector<std::size_t> order(n);
    for (std::size_t k = 0; k < n; ++k) order[k] = t[(start + k) % n];
    if (n > 2 && order[1] > order[n - 1]) std::reverse(order.begin() + 1, order.end());
    return Tour(std::move(order));
}

ExactSolution brute_force_optimum(const DistanceMatrix& m) {
    const auto n = m.size();
    if (n < 3) throw Error(ErrorCode::invalid_size, "exact search needs at least 3 cities");
    if (n > kMaxEnumerationSize) {
        throw Error(ErrorCode::enumeration_too_large,
                    std::to_string(n) + " cities exceeds the enumeration limit of " +
                        std::to_string(kMaxEnumerationSize));
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<std::size_t> best_order = order;
    double best = std::numeric_limits<double>::infinity();

    // Lexicographic order over positions 1..n-1 with city 0 fixed first; a
    // strict improvement test keeps the earliest (smallest) canonical tour.
    do {
        if (order[1] > order[n - 1]) continue;
        double length = m(order[n - 1], order[0]);
        for (std::size_t k = 0; k + 1 < n; ++k) length += m(order[k], order[k + 1]);
        if (length < best - 1e-12) {
            best = length;
            best_order = order;
        }
    } while (std::next_permutation(order.begin() + 1, order.end()));

    Tour tour(std::move(best_order));
    return {tour, tour_length(m, tour)};
}

}  // namespace hnnsa
