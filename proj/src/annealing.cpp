#include "hnnsa/annealing.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <string>

namespace hnnsa {

void SaConfig::validate(std::size_t n) const {
    if (!(t0 > 0.0) || !std::isfinite(t0)) throw Error(ErrorCode::invalid_argument, "t0 must be positive");
    if (!(cooling_rate > 0.0 && cooling_rate < 1.0)) {
        throw Error(ErrorCode::invalid_argument, "cooling rate must lie in (0, 1)");
    }
    if (iterations == 0) throw Error(ErrorCode::invalid_argument, "iteration budget must be positive");
    if (swap_count < 1 || swap_count > n / 2) {
        throw Error(ErrorCode::invalid_argument,
                    "swap count must lie in [1, " + std::to_string(n / 2) + "]");
    }
}

std::string SaTrace::to_csv() const {
    std::string out = "iteration,temperature,current,best\n";
    char line[128];
    for (const auto& s : steps) {
        std::snprintf(line, sizeof line, "%llu,%.10g,%.10g,%.10g\n",
                      static_cast<unsigned long long>(s.iteration), s.temperature, s.current_length,
                      s.best_length);
        out += line;
    }
    return out;
}

Tour swap_positions(const Tour& t, std::span<const std::pair<std::size_t, std::size_t>> pairs) {
    std::vector<std::size_t> order(t.begin(), t.end());
    for (auto [a, b] : pairs) {
        if (a >= order.size() || b >= order.size()) {
            throw Error(ErrorCode::invalid_argument, "swap position out of range");
        }
        std::swap(order[a], order[b]);
    }
    return Tour(std::move(order));
}

Tour swap_cities(const Tour& t, std::size_t k, Rng& rng) {
    const auto n = t.size();
    if (k < 1 || k > n / 2) {
        throw Error(ErrorCode::invalid_argument,
                    "swap count " + std::to_string(k) + " outside [1, " + std::to_string(n / 2) + "]");
    }
    // Partial Fisher-Yates: the first 2k slots become distinct positions.
    std::vector<std::size_t> positions(n);
    std::iota(positions.begin(), positions.end(), std::size_t{0});
    for (std::size_t i = 0; i < 2 * k; ++i) {
        const auto j = i + static_cast<std::size_t>(uniform_index(rng, n - i));
        std::swap(positions[i], positions[j]);
    }
    std::vector<std::size_t> order(t.begin(), t.end());
    for (std::size_t p = 0; p < k; ++p) std::swap(order[positions[2 * p]], order[positions[2 * p + 1]]);
    return Tour(std::move(order));
}

double acceptance_probability(double current, double candidate, double temperature) {
    if (!(temperature > 0.0)) {
        throw Error(ErrorCode::invalid_temperature, "temperature must be positive");
    }
    if (candidate <= current) return 1.0;
    return std::exp(-(candidate - current) / temperature);
}

double temperature_at(std::uint64_t step, const SaConfig& cfg) {
    const double t = cfg.t0 * std::pow(cfg.cooling_rate, static_cast<double>(step));
    return t > kMinTemperature ? t : kMinTemperature;
}

Tour random_tour(std::size_t n, Rng& rng) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    shuffle(std::span<std::size_t>(order), rng);
    return Tour(std::move(order));
}

SaResult anneal(const DistanceMatrix& m, const Tour& start, const SaConfig& cfg) {
    cfg.validate(m.size());
    Rng rng(cfg.seed);

    Tour current = start;
    double current_length = tour_length(m, current);
    SaResult result{current, current_length, {}};
    result.trace.steps.reserve(cfg.iterations);

    for (std::uint64_t step = 0; step < cfg.iterations; ++step) {
        const double temperature = temperature_at(step, cfg);
        Tour candidate = swap_cities(current, cfg.swap_count, rng);
        const double candidate_length = tour_length(m, candidate);
        // Uniform draw on (0, 1] so a zero probability never accepts.
        if (acceptance_probability(current_length, candidate_length, temperature) >=
            uniform_open_closed(rng)) {
            current = std::move(candidate);
            current_length = candidate_length;
            if (current_length < result.length) {
                result.tour = current;
                result.length = current_length;
            }
        }
        result.trace.steps.push_back({step, temperature, current_length, result.length});
    }
    result.trace.final_tour = std::move(current);
    result.trace.final_length = current_length;
    return result;
}

}  // namespace hnnsa
