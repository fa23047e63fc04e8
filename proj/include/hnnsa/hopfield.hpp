#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hnnsa/instance.hpp"
#include "hnnsa/random.hpp"
#include "hnnsa/tour.hpp"

namespace hnnsa {

// Binary Hopfield network over n^2 units, one per (city, visit position).
// Unit index is city * n + position. Activations are 0/1.

struct HopfieldParams {
    double a_pen = 100.0;  // one position per city (row term)
    double b_pen = 100.0;  // one city per position (column term)
    double c_pen = 90.0;   // exactly n active units
    double d_pen = 100.0;  // tour length
    double threshold = 0.0;
    std::size_t max_sweeps = 1000;
    std::uint64_t seed = 1;
};

using ActivationGrid = TourMatrix;

class WeightMatrix {
public:
    WeightMatrix() = default;
    WeightMatrix(std::size_t n, std::vector<double> weights, std::vector<double> bias)
        : n_(n), w_(std::move(weights)), bias_(std::move(bias)) {}

    std::size_t cities() const noexcept { return n_; }
    std::size_t units() const noexcept { return n_ * n_; }
    double operator()(std::size_t u, std::size_t v) const noexcept { return w_[u * units() + v]; }
    std::span<const double> row(std::size_t u) const noexcept {
        return std::span<const double>(w_).subspan(u * units(), units());
    }
    double bias(std::size_t u) const noexcept { return bias_[u]; }

private:
    std::size_t n_ = 0;
    std::vector<double> w_;
    std::vector<double> bias_;
};

/// Connection weights whose quadratic energy -1/2 v'Wv - b'v reproduces
/// energy() up to the constant C n^2 / 2. Symmetric with zero diagonal.
WeightMatrix build_weights(const DistanceMatrix& m, const HopfieldParams& p);

struct EnergyTerms {
    double row = 0.0;       // sum_x sum_i sum_{j!=i} v_xi v_xj
    double column = 0.0;    // sum_i sum_x sum_{y!=x} v_xi v_yi
    double count = 0.0;     // (sum v - n)^2
    double distance = 0.0;  // sum_x sum_{y!=x} sum_i d_xy v_xi (v_y,i+1 + v_y,i-1)
};

EnergyTerms energy_terms(const ActivationGrid& g, const DistanceMatrix& m);
double energy(const ActivationGrid& g, const DistanceMatrix& m, const HopfieldParams& p);

struct Unit {
    std::size_t city = 0;
    std::size_t position = 0;
};

/// Net input sum_v w[u][v] g[v] + bias[u].
double local_field(const ActivationGrid& g, const WeightMatrix& w, std::size_t unit);

/// 1 when the net input reaches the threshold, else 0.
std::uint8_t unit_update(const ActivationGrid& g, const WeightMatrix& w, Unit unit, double threshold);

struct UnitVisit {
    std::size_t unit = 0;
    std::uint8_t before = 0;
    std::uint8_t after = 0;
    double net = 0.0;
};

// Called after every unit visit with the grid as it stands after the update.
using UpdateObserver = std::function<void(const ActivationGrid&, const UnitVisit&)>;

struct HopfieldResult {
    ActivationGrid grid;
    bool converged = false;
    bool valid = false;
    std::optional<Tour> tour;
    std::optional<double> length;
    // Entry 0 is the initial grid, then one entry per sweep.
    std::vector<double> energy_trace;
    std::size_t sweeps_used = 0;
};

/// Each unit is 1 with probability 1/n.
ActivationGrid random_grid(std::size_t n, Rng& rng);

/// Asynchronous dynamics: every sweep visits all units in a fresh random
/// order until a sweep changes nothing or max_sweeps is reached.
HopfieldResult run(const DistanceMatrix& m, const HopfieldParams& p,
                   std::optional<ActivationGrid> init = std::nullopt,
                   const UpdateObserver& observer = {});

/// As above with weights built once by the caller.
HopfieldResult run(const WeightMatrix& w, const DistanceMatrix& m, const HopfieldParams& p,
                   std::optional<ActivationGrid> init = std::nullopt,
                   const UpdateObserver& observer = {});

std::optional<Tour> decode(const ActivationGrid& g);

/// One line per city, space-separated 0/1 per position.
std::string grid_to_text(const ActivationGrid& g);
/// Accepts any whitespace layout; the token count must be a perfect square.
ActivationGrid grid_from_text(std::string_view text);

}  // namespace hnnsa
