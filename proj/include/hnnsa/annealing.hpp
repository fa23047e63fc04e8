#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hnnsa/instance.hpp"
#include "hnnsa/random.hpp"
#include "hnnsa/tour.hpp"

namespace hnnsa {

struct SaConfig {
    double t0 = 1.0;
    double cooling_rate = 0.999;
    std::uint64_t iterations = 20000;
    std::size_t swap_count = 1;
    std::uint64_t seed = 1;

    /// Throws invalid_argument unless t0 > 0, 0 < rate < 1, iterations >= 1
    /// and 1 <= swap_count <= n/2.
    void validate(std::size_t n) const;
};

inline constexpr double kMinTemperature = 1e-12;

struct SaStep {
    std::uint64_t iteration = 0;
    double temperature = 0.0;
    double current_length = 0.0;
    double best_length = 0.0;
};

struct SaTrace {
    std::vector<SaStep> steps;
    // State the walk ended in, which need not be the best one seen.
    Tour final_tour;
    double final_length = 0.0;

    /// Columns: iteration,temperature,current,best.
    std::string to_csv() const;
};

struct SaResult {
    Tour tour;
    double length = 0.0;
    SaTrace trace;
};

/// Exchange the cities at the given position pairs, in order.
Tour swap_positions(const Tour& t, std::span<const std::pair<std::size_t, std::size_t>> pairs);

/// Exchange k disjoint, randomly chosen position pairs.
Tour swap_cities(const Tour& t, std::size_t k, Rng& rng);

/// Metropolis rule: 1 when candidate <= current, else exp(-(candidate-current)/t).
double acceptance_probability(double current, double candidate, double temperature);

/// Geometric cooling t0 * rate^step, floored at kMinTemperature.
double temperature_at(std::uint64_t step, const SaConfig& cfg);

/// Runs exactly cfg.iterations proposals and returns the best tour visited.
SaResult anneal(const DistanceMatrix& m, const Tour& start, const SaConfig& cfg);

/// Seeded uniformly random permutation.
Tour random_tour(std::size_t n, Rng& rng);

}  // namespace hnnsa
