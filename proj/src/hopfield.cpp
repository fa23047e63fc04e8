#include "hnnsa/hopfield.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace hnnsa {

WeightMatrix build_weights(const DistanceMatrix& m, const HopfieldParams& p) {
    const auto n = m.size();
    const auto units = n * n;
    std::vector<double> w(units * units, 0.0);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t i = 0; i < n; ++i) {
            const auto u = x * n + i;
            for (std::size_t y = 0; y < n; ++y) {
                for (std::size_t j = 0; j < n; ++j) {
                    const auto v = y * n + j;
                    if (u == v) continue;
                    double weight = -p.c_pen;
                    if (x == y) weight -= p.a_pen;
                    if (i == j) weight -= p.b_pen;
                    const bool next = j == (i + 1) % n;
                    const bool prev = j == (i + n - 1) % n;
                    weight -= p.d_pen * m(x, y) * ((next ? 1.0 : 0.0) + (prev ? 1.0 : 0.0));
                    w[u * units + v] = weight;
                }
            }
        }
    }
    // (C/2)(sum v - n)^2 has a C/2 diagonal part; with v^2 = v it folds into
    // the bias, which keeps the self-connections at zero.
    std::vector<double> bias(units, p.c_pen * static_cast<double>(n) - p.c_pen / 2.0);
    return WeightMatrix(n, std::move(w), std::move(bias));
}

EnergyTerms energy_terms(const ActivationGrid& g, const DistanceMatrix& m) {
    const auto n = g.size();
    EnergyTerms t;
    double total = 0.0;
    for (std::size_t x = 0; x < n; ++x) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += g(x, i);
        t.row += s * s - s;
        total += s;
    }
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t x = 0; x < n; ++x) s += g(x, i);
        t.column += s * s - s;
    }
    t.count = (total - static_cast<double>(n)) * (total - static_cast<double>(n));
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!g(x, i)) continue;
            const auto next = (i + 1) % n;
            const auto prev = (i + n - 1) % n;
            for (std::size_t y = 0; y < n; ++y) {
                if (y == x) continue;
                t.distance += m(x, y) * (g(y, next) + g(y, prev));
            }
        }
    }
    return t;
}

double energy(const ActivationGrid& g, const DistanceMatrix& m, const HopfieldParams& p) {
    const auto t = energy_terms(g, m);
    return p.a_pen / 2.0 * t.row + p.b_pen / 2.0 * t.column + p.c_pen / 2.0 * t.count +
           p.d_pen / 2.0 * t.distance;
}

double local_field(const ActivationGrid& g, const WeightMatrix& w, std::size_t unit) {
    const auto row = w.row(unit);
    const auto cells = g.cells();
    double net = w.bias(unit);
    for (std::size_t v = 0; v < cells.size(); ++v)
        if (cells[v]) net += row[v];
    return net;
}

std::uint8_t unit_update(const ActivationGrid& g, const WeightMatrix& w, Unit unit, double threshold) {
    const auto u = unit.city * g.size() + unit.position;
    return local_field(g, w, u) >= threshold ? 1 : 0;
}

ActivationGrid random_grid(std::size_t n, Rng& rng) {
    ActivationGrid g(n);
    const double p = 1.0 / static_cast<double>(n);
    for (std::size_t u = 0; u < n * n; ++u) g.set_unit(u, uniform01(rng) < p ? 1 : 0);
    return g;
}

HopfieldResult run(const DistanceMatrix& m, const HopfieldParams& p, std::optional<ActivationGrid> init,
                   const UpdateObserver& observer) {
    return run(build_weights(m, p), m, p, std::move(init), observer);
}

HopfieldResult run(const WeightMatrix& w, const DistanceMatrix& m, const HopfieldParams& p,
                   std::optional<ActivationGrid> init, const UpdateObserver& observer) {
    const auto n = m.size();
    if (w.cities() != n) throw Error(ErrorCode::invalid_size, "weights and distance matrix disagree on n");
    if (init && init->size() != n) {
        throw Error(ErrorCode::invalid_size, "initial grid is " + std::to_string(init->size()) + "x" +
                                                 std::to_string(init->size()) + " for " +
                                                 std::to_string(n) + " cities");
    }

    Rng rng(p.seed);
    HopfieldResult result;
    result.grid = init ? std::move(*init) : random_grid(n, rng);
    result.energy_trace.push_back(energy(result.grid, m, p));

    std::vector<std::size_t> order(n * n);
    std::iota(order.begin(), order.end(), std::size_t{0});

    while (result.sweeps_used < p.max_sweeps) {
        shuffle(std::span<std::size_t>(order), rng);
        bool changed = false;
        for (auto u : order) {
            const auto before = result.grid.unit(u);
            const double net = local_field(result.grid, w, u);
            const std::uint8_t after = net >= p.threshold ? 1 : 0;
            if (after != before) {
                result.grid.set_unit(u, after);
                changed = true;
            }
            if (observer) observer(result.grid, UnitVisit{u, before, after, net});
        }
        ++result.sweeps_used;
        result.energy_trace.push_back(energy(result.grid, m, p));
        if (!changed) {
            result.converged = true;
            break;
        }
    }

    result.valid = result.converged && is_valid_permutation_matrix(result.grid);
    if (result.valid) {
        result.tour = matrix_to_tour(result.grid);
        result.length = tour_length(m, *result.tour);
    }
    return result;
}

std::optional<Tour> decode(const ActivationGrid& g) {
    if (!is_valid_permutation_matrix(g)) return std::nullopt;
    return matrix_to_tour(g);
}

std::string grid_to_text(const ActivationGrid& g) {
    std::string out;
    for (std::size_t x = 0; x < g.size(); ++x) {
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (i) out += ' ';
            out += g(x, i) ? '1' : '0';
        }
        out += '\n';
    }
    return out;
}

ActivationGrid grid_from_text(std::string_view text) {
    std::vector<std::uint8_t> cells;
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) {
        if (token != "0" && token != "1") {
            throw Error(ErrorCode::parse_error, "grid entry '" + token + "' is not 0 or 1");
        }
        cells.push_back(token == "1" ? 1 : 0);
    }
    const auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(cells.size()))));
    if (n == 0 || n * n != cells.size()) {
        throw Error(ErrorCode::parse_error,
                    "grid has " + std::to_string(cells.size()) + " entries, not a square count");
    }
    return ActivationGrid(n, std::move(cells));
}

}  // namespace hnnsa
