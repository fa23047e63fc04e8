#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hnnsa/annealing.hpp"
#include "hnnsa/hopfield.hpp"
#include "hnnsa/instance.hpp"

namespace hnnsa {

struct HybridReport {
    std::string instance_id;
    Tour sa_start;
    double sa_start_length = 0.0;
    Tour sa_tour;
    double sa_length = 0.0;
    bool hnn_valid = false;
    bool hnn_converged = false;
    std::size_t hnn_sweeps = 0;
    std::optional<Tour> hnn_tour;
    std::optional<double> hnn_length;
    Tour final_tour;
    double final_length = 0.0;
    SaTrace sa_trace;
    std::vector<double> hnn_energy_trace;
    ActivationGrid hnn_grid;
    std::uint64_t sa_seed = 0;
    std::uint64_t hnn_seed = 0;
};

/// Random starting tour used by the annealing stage for a given seed.
Tour start_tour(std::size_t n, std::uint64_t seed);

/// SA from a seeded random start; its best tour seeds the network as a
/// permutation grid. Lengths are in the instance's own units; the network
/// runs on max-normalized distances. An invalid network output falls back
/// to the SA tour.
HybridReport solve_hybrid(const Instance& inst, const SaConfig& sa, const HopfieldParams& hp);

enum class SuccessMetric { valid, optimal };

struct CellStats {
    std::size_t id = 0;
    double c_pen = 0.0;
    double d_pen = 0.0;
    // Over successful-valid runs only; empty when there were none.
    std::optional<double> best;
    std::optional<double> mean;
    std::optional<double> worst;
    double success_rate = 0.0;
    double mean_sweeps = 0.0;
    std::size_t trials = 0;
    std::size_t successes = 0;
    std::vector<std::uint64_t> seeds;
};

struct BenchmarkReport {
    std::string instance_id;
    std::uint64_t master_seed = 0;
    SuccessMetric metric = SuccessMetric::valid;
    HopfieldParams base;
    std::vector<CellStats> cells;
};

struct SweepOptions {
    std::vector<double> c_values;
    std::vector<double> d_values;
    std::size_t trials = 100;
    std::uint64_t seed = 1;
    SuccessMetric metric = SuccessMetric::valid;
    // 0 picks the hardware concurrency. The report does not depend on it.
    std::size_t workers = 1;
};

/// Runs `trials` networks from random grids for every (C, D) cell, C-major.
BenchmarkReport sweep(const Instance& inst, const HopfieldParams& base, const SweepOptions& opts);

enum class ReportFormat { table, csv };

std::string render_report(const BenchmarkReport& r, ReportFormat format);

}  // namespace hnnsa
