#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hnnsa/error.hpp"

namespace hnnsa {

class DistanceMatrix;

/// A closed visiting order: a permutation of the city indices 0..n-1.
class Tour {
public:
    Tour() = default;
    /// Throws Error(invalid_tour) unless `order` is a permutation of 0..n-1.
    explicit Tour(std::vector<std::size_t> order);

    static Tour identity(std::size_t n);

    std::size_t size() const noexcept { return order_.size(); }
    std::size_t operator[](std::size_t position) const noexcept { return order_[position]; }
    std::span<const std::size_t> order() const noexcept { return order_; }
    auto begin() const noexcept { return order_.begin(); }
    auto end() const noexcept { return order_.end(); }

    bool operator==(const Tour&) const = default;

private:
    std::vector<std::size_t> order_;
};

bool is_permutation(std::span<const std::size_t> order) noexcept;

/// n x n binary matrix, rows = cities, columns = visit positions.
class TourMatrix {
public:
    TourMatrix() = default;
    explicit TourMatrix(std::size_t n) : n_(n), cells_(n * n, 0) {}
    /// Throws InvalidTourMatrix(non_binary) on entries outside {0,1}.
    TourMatrix(std::size_t n, std::vector<std::uint8_t> cells);

    std::size_t size() const noexcept { return n_; }
    std::uint8_t operator()(std::size_t city, std::size_t position) const noexcept {
        return cells_[city * n_ + position];
    }
    void set(std::size_t city, std::size_t position, std::uint8_t value) noexcept {
        cells_[city * n_ + position] = value ? 1 : 0;
    }
    // Flat unit index is city * n + position.
    std::uint8_t unit(std::size_t u) const noexcept { return cells_[u]; }
    void set_unit(std::size_t u, std::uint8_t value) noexcept { cells_[u] = value ? 1 : 0; }
    std::span<const std::uint8_t> cells() const noexcept { return cells_; }
    std::size_t ones() const noexcept;

    bool operator==(const TourMatrix&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint8_t> cells_;
};

/// First failed condition in the order count, row, column; nullopt if valid.
std::optional<MatrixViolation> find_violation(const TourMatrix& tm) noexcept;
bool is_valid_permutation_matrix(const TourMatrix& tm) noexcept;

TourMatrix tour_to_matrix(const Tour& t);
/// Throws InvalidTourMatrix naming the failed condition.
Tour matrix_to_tour(const TourMatrix& tm);

/// Rotate to start at city 0, then orient so the second city is the smaller
/// neighbour of 0.
Tour canonicalize(const Tour& t);

struct ExactSolution {
    Tour tour;
    double length = 0.0;
};

inline constexpr std::size_t kMaxEnumerationSize = 12;

/// Exhaustive search over the (n-1)!/2 canonical tours. Ties resolve to the
/// lexicographically smallest canonical tour.
ExactSolution brute_force_optimum(const DistanceMatrix& m);

}  // namespace hnnsa
