#include "hnnsa/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <thread>

#include "hnnsa/random.hpp"

namespace hnnsa {

Tour start_tour(std::size_t n, std::uint64_t seed) {
    Rng rng(derive_seed(seed, 0x5354415254ULL));
    return random_tour(n, rng);
}

HybridReport solve_hybrid(const Instance& inst, const SaConfig& sa, const HopfieldParams& hp) {
    const auto raw = distance_matrix(inst);
    const auto n = raw.size();
    sa.validate(n);

    HybridReport report;
    report.instance_id = inst.id();
    report.sa_seed = sa.seed;
    report.hnn_seed = hp.seed;

    report.sa_start = start_tour(n, sa.seed);
    report.sa_start_length = tour_length(raw, report.sa_start);

    auto annealed = anneal(raw, report.sa_start, sa);
    report.sa_tour = annealed.tour;
    report.sa_length = annealed.length;
    report.sa_trace = std::move(annealed.trace);

    const auto hnn = run(normalize_distances(raw), hp, tour_to_matrix(report.sa_tour));
    report.hnn_valid = hnn.valid;
    report.hnn_converged = hnn.converged;
    report.hnn_sweeps = hnn.sweeps_used;
    report.hnn_energy_trace = hnn.energy_trace;
    report.hnn_grid = hnn.grid;

    report.final_tour = report.sa_tour;
    report.final_length = report.sa_length;
    if (hnn.valid) {
        report.hnn_tour = *hnn.tour;
        report.hnn_length = tour_length(raw, *hnn.tour);
        if (*report.hnn_length < report.final_length) {
            report.final_tour = *report.hnn_tour;
            report.final_length = *report.hnn_length;
        }
    }
    return report;
}

namespace {

struct TrialOutcome {
    bool success = false;
    std::optional<double> length;
    std::size_t sweeps = 0;
};

}  // namespace

BenchmarkReport sweep(const Instance& inst, const HopfieldParams& base, const SweepOptions& opts) {
    if (opts.c_values.empty() || opts.d_values.empty()) {
        throw Error(ErrorCode::invalid_argument, "sweep needs at least one C and one D value");
    }
    if (opts.trials < 1) throw Error(ErrorCode::invalid_argument, "sweep needs at least one trial");

    const auto raw = distance_matrix(inst);
    const auto normalized = normalize_distances(raw);
    std::optional<double> optimum;
    if (opts.metric == SuccessMetric::optimal) optimum = brute_force_optimum(raw).length;

    BenchmarkReport report;
    report.instance_id = inst.id();
    report.master_seed = opts.seed;
    report.metric = opts.metric;
    report.base = base;

    std::vector<HopfieldParams> cell_params;
    std::vector<WeightMatrix> cell_weights;
    for (double c : opts.c_values) {
        for (double d : opts.d_values) {
            CellStats cell;
            cell.id = report.cells.size() + 1;
            cell.c_pen = c;
            cell.d_pen = d;
            cell.trials = opts.trials;
            for (std::size_t t = 0; t < opts.trials; ++t) cell.seeds.push_back(derive_seed(opts.seed, cell.id, t));
            report.cells.push_back(std::move(cell));

            HopfieldParams p = base;
            p.c_pen = c;
            p.d_pen = d;
            cell_params.push_back(p);
            cell_weights.push_back(build_weights(normalized, p));
        }
    }

    const auto total = report.cells.size() * opts.trials;
    std::vector<TrialOutcome> outcomes(total);
    auto run_trial = [&](std::size_t index) {
        const auto cell = index / opts.trials;
        HopfieldParams p = cell_params[cell];
        p.seed = report.cells[cell].seeds[index % opts.trials];
        const auto r = run(cell_weights[cell], normalized, p);
        TrialOutcome& out = outcomes[index];
        out.sweeps = r.sweeps_used;
        if (r.valid) {
            out.length = tour_length(raw, *r.tour);
            out.success = !optimum || std::abs(*out.length - *optimum) <= 1e-9 * std::max(1.0, *optimum);
        }
    };

    std::size_t workers = opts.workers == 0 ? std::max(1u, std::thread::hardware_concurrency()) : opts.workers;
    workers = std::min(workers, total);
    if (workers <= 1) {
        for (std::size_t i = 0; i < total; ++i) run_trial(i);
    } else {
        // Static striding; each trial writes only its own slot.
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < total; i += workers) run_trial(i);
            });
        }
    }

    for (std::size_t c = 0; c < report.cells.size(); ++c) {
        auto& cell = report.cells[c];
        double sum = 0.0, sweeps = 0.0;
        for (std::size_t t = 0; t < opts.trials; ++t) {
            const auto& o = outcomes[c * opts.trials + t];
            sweeps += static_cast<double>(o.sweeps);
            if (!o.success) continue;
            ++cell.successes;
            const double len = *o.length;
            sum += len;
            cell.best = cell.best ? std::min(*cell.best, len) : len;
            cell.worst = cell.worst ? std::max(*cell.worst, len) : len;
        }
        if (cell.successes) cell.mean = sum / static_cast<double>(cell.successes);
        cell.success_rate = static_cast<double>(cell.successes) / static_cast<double>(opts.trials);
        cell.mean_sweeps = sweeps / static_cast<double>(opts.trials);
    }
    return report;
}

namespace {

std::string fmt(const char* pattern, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, pattern, v);
    return buf;
}

std::string pad(std::string s, std::size_t width) {
    // Column widths count code points so the em dash lines up.
    std::size_t visible = 0;
    for (unsigned char ch : s)
        if ((ch & 0xC0) != 0x80) ++visible;
    if (visible < width) s.append(width - visible, ' ');
    return s;
}

}  // namespace

std::string render_report(const BenchmarkReport& r, ReportFormat format) {
    std::string out;
    if (format == ReportFormat::csv) {
        out = "cell,C,D,best,mean,worst,success_rate,mean_sweeps,trials\n";
        auto opt = [](const std::optional<double>& v) { return v ? fmt("%.10g", *v) : std::string(); };
        for (const auto& c : r.cells) {
            out += std::to_string(c.id) + "," + fmt("%.10g", c.c_pen) + "," + fmt("%.10g", c.d_pen) + "," +
                   opt(c.best) + "," + opt(c.mean) + "," + opt(c.worst) + "," + fmt("%.10g", c.success_rate) +
                   "," + fmt("%.10g", c.mean_sweeps) + "," + std::to_string(c.trials) + "\n";
        }
        return out;
    }

    const char* dash = "\xE2\x80\x94";
    auto opt = [&](const std::optional<double>& v) { return v ? fmt("%.3f", *v) : std::string(dash); };
    out += pad("cell", 6) + pad("C", 8) + pad("D", 8) + pad("Best", 8) + pad("Mean", 8) + pad("Worst", 8) +
           pad("% Succ.", 9) + "Iter.\n";
    for (const auto& c : r.cells) {
        out += pad(std::to_string(c.id), 6) + pad(fmt("%g", c.c_pen), 8) + pad(fmt("%g", c.d_pen), 8) +
               pad(opt(c.best), 8) + pad(opt(c.mean), 8) + pad(opt(c.worst), 8) +
               pad(fmt("%.0f", 100.0 * c.success_rate), 9) + fmt("%.1f", c.mean_sweeps) + "\n";
    }
    return out;
}

}  // namespace hnnsa
