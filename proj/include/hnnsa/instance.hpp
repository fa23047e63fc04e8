#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hnnsa/tour.hpp"

namespace hnnsa {

struct City {
    std::string label;
    double x = 0.0;
    double y = 0.0;

    bool operator==(const City&) const = default;
};

/// Symmetric n x n matrix of finite non-negative reals with zero diagonal.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    /// Row-major entries; throws Error(invalid_matrix) if any invariant fails.
    DistanceMatrix(std::size_t n, std::vector<double> entries);

    static DistanceMatrix euclidean(std::span<const City> cities);

    std::size_t size() const noexcept { return n_; }
    double operator()(std::size_t x, std::size_t y) const noexcept { return d_[x * n_ + y]; }
    std::span<const double> entries() const noexcept { return d_; }
    double max_entry() const noexcept;

    bool operator==(const DistanceMatrix&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<double> d_;
};

class Instance {
public:
    /// Requires n >= 3, unique labels and finite coordinates. An explicit
    /// matrix, when given, replaces the Euclidean distances.
    Instance(std::string id, std::vector<City> cities,
             std::optional<std::uint64_t> seed = std::nullopt,
             std::optional<DistanceMatrix> matrix = std::nullopt);

    const std::string& id() const noexcept { return id_; }
    std::span<const City> cities() const noexcept { return cities_; }
    std::size_t size() const noexcept { return cities_.size(); }
    const std::optional<std::uint64_t>& seed() const noexcept { return seed_; }
    const std::optional<DistanceMatrix>& explicit_matrix() const noexcept { return matrix_; }

    bool operator==(const Instance&) const = default;

private:
    std::string id_;
    std::vector<City> cities_;
    std::optional<std::uint64_t> seed_;
    std::optional<DistanceMatrix> matrix_;
};

/// n cities drawn uniformly from [0, bound]^2.
Instance generate_random_instance(std::size_t n, std::uint64_t seed, double bound);

DistanceMatrix distance_matrix(const Instance& inst);

/// Scale so the largest entry is exactly 1. Throws degenerate_instance on an
/// all-zero matrix.
DistanceMatrix normalize_distances(const DistanceMatrix& m);

/// Closed length, including the edge from the last city back to the first.
double tour_length(const DistanceMatrix& m, const Tour& t);

std::string instance_to_json(const Instance& inst);
Instance instance_from_json(std::string_view text);
void save_instance(const Instance& inst, const std::filesystem::path& path);
Instance load_instance(const std::filesystem::path& path);

}  // namespace hnnsa
