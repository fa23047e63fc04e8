#include "hnnsa/hnnsa.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <new>
#include <string>

#include "hnnsa/annealing.hpp"
#include "hnnsa/baselines.hpp"
#include "hnnsa/builtin.hpp"
#include "hnnsa/hopfield.hpp"
#include "hnnsa/instance.hpp"
#include "hnnsa/pipeline.hpp"
#include "hnnsa/svg.hpp"

struct hnnsa_instance {
    hnnsa::Instance inst;
};

struct hnnsa_result {
    std::string record;
    std::string trace_csv;
    std::string grid_text;
    bool valid = false;
    double length = NAN;
    std::vector<std::uint32_t> tour;
};

struct hnnsa_report {
    hnnsa::BenchmarkReport report;
};

namespace {

thread_local std::string last_error;

hnnsa_status to_status(hnnsa::ErrorCode code) {
    using hnnsa::ErrorCode;
    switch (code) {
    case ErrorCode::invalid_argument: return HNNSA_ERR_INVALID_ARGUMENT;
    case ErrorCode::invalid_size: return HNNSA_ERR_INVALID_SIZE;
    case ErrorCode::invalid_tour: return HNNSA_ERR_INVALID_TOUR;
    case ErrorCode::invalid_matrix: return HNNSA_ERR_INVALID_MATRIX;
    case ErrorCode::degenerate_instance: return HNNSA_ERR_DEGENERATE;
    case ErrorCode::enumeration_too_large: return HNNSA_ERR_TOO_LARGE;
    case ErrorCode::invalid_temperature: return HNNSA_ERR_INVALID_TEMPERATURE;
    case ErrorCode::parse_error: return HNNSA_ERR_PARSE;
    case ErrorCode::io_error: return HNNSA_ERR_IO;
    }
    return HNNSA_ERR_INTERNAL;
}

hnnsa_status fail(hnnsa_status status, std::string message) {
    last_error = std::move(message);
    return status;
}

template <typename F>
hnnsa_status guarded(F&& body) {
    try {
        last_error.clear();
        return body();
    } catch (const hnnsa::Error& e) {
        return fail(to_status(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(HNNSA_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(HNNSA_ERR_INTERNAL, e.what());
    }
}

char* dup_string(const std::string& s) {
    auto* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string tour_text(const hnnsa::Tour& t) {
    std::string out;
    for (std::size_t k = 0; k < t.size(); ++k) {
        if (k) out += ' ';
        out += std::to_string(t[k]);
    }
    return out;
}

hnnsa::Tour tour_from(const std::uint32_t* order, std::size_t n) {
    if (!order) throw hnnsa::Error(hnnsa::ErrorCode::invalid_argument, "null tour");
    return hnnsa::Tour(std::vector<std::size_t>(order, order + n));
}

hnnsa::SaConfig sa_config(const hnnsa_options& o) {
    return {o.t0, o.cooling, o.iterations, o.swaps, o.seed};
}

hnnsa::HopfieldParams hopfield_params(const hnnsa_options& o, std::uint64_t seed) {
    return {o.a, o.b, o.c, o.d, o.threshold, o.max_sweeps, seed};
}

constexpr const char* kMethodNames[] = {"exact", "greedy", "2opt", "3opt", "sa", "hnn", "hybrid"};

}  // namespace

extern "C" {

const char* hnnsa_last_error(void) { return last_error.c_str(); }

const char* hnnsa_status_string(hnnsa_status status) {
    switch (status) {
    case HNNSA_OK: return "ok";
    case HNNSA_ERR_INVALID_ARGUMENT: return "invalid argument";
    case HNNSA_ERR_INVALID_SIZE: return "invalid size";
    case HNNSA_ERR_INVALID_TOUR: return "invalid tour";
    case HNNSA_ERR_INVALID_MATRIX: return "invalid matrix";
    case HNNSA_ERR_DEGENERATE: return "degenerate instance";
    case HNNSA_ERR_TOO_LARGE: return "enumeration too large";
    case HNNSA_ERR_INVALID_TEMPERATURE: return "invalid temperature";
    case HNNSA_ERR_PARSE: return "parse error";
    case HNNSA_ERR_IO: return "i/o error";
    case HNNSA_ERR_NOT_FOUND: return "not found";
    case HNNSA_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

void hnnsa_string_free(char* s) { std::free(s); }

void hnnsa_options_default(hnnsa_options* options) {
    if (!options) return;
    const hnnsa::SaConfig sa;
    const hnnsa::HopfieldParams hp;
    options->seed = 1;
    options->t0 = sa.t0;
    options->cooling = sa.cooling_rate;
    options->iterations = sa.iterations;
    options->swaps = static_cast<std::uint32_t>(sa.swap_count);
    options->a = hp.a_pen;
    options->b = hp.b_pen;
    options->c = hp.c_pen;
    options->d = hp.d_pen;
    options->threshold = hp.threshold;
    options->max_sweeps = static_cast<std::uint32_t>(hp.max_sweeps);
    options->start_city = 0;
}

hnnsa_status hnnsa_method_from_name(const char* name, hnnsa_method* out) {
    if (!name || !out) return fail(HNNSA_ERR_INVALID_ARGUMENT, "null argument");
    for (int k = 0; k < 7; ++k) {
        if (std::strcmp(name, kMethodNames[k]) == 0) {
            *out = static_cast<hnnsa_method>(k);
            return HNNSA_OK;
        }
    }
    return fail(HNNSA_ERR_NOT_FOUND, std::string("unknown method '") + name + "'");
}

const char* hnnsa_method_name(hnnsa_method method) {
    const auto k = static_cast<int>(method);
    return k >= 0 && k < 7 ? kMethodNames[k] : "unknown";
}

hnnsa_status hnnsa_instance_generate(size_t n, uint64_t seed, double bound, hnnsa_instance** out) {
    if (!out) return fail(HNNSA_ERR_INVALID_ARGUMENT, "null output handle");
    return guarded([&] {
        *out = new hnnsa_instance{hnnsa::generate_random_instance(n, seed, bound)};
        return HNNSA_OK;
    });
}

hnnsa_status hnnsa_instance_builtin(const char* name, hnnsa_instance** out) {
    if (!name || !out) return fail(HNNSA_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        auto inst = hnnsa::builtin_instance(name);
        if (!inst) return fail(HNNSA_ERR_NOT_FOUND, std::string("no built-in instance '") + name + "'");
        *out = new hnnsa_instance{std::move(*inst)};
        return HNNSA_OK;
    });
}

hnnsa_status hnnsa_instance_load(const char* path, hnnsa_instance** out) {
    if (!path || !out) return fail(HNNSA_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out = new hnnsa_instance{hnnsa::load_instance(path)};
        return HNNSA_OK;
    });
}

hnnsa_status hnnsa_instance_open(const char* name_or_path, hnnsa_instance** out) {
    if (!name_or_path || !out) return fail(HNNSA_ERR_INVALID_ARGUMENT, "null argument");
    if (hnnsa::builtin_instance(name_or_path)) return hnnsa_instance_builtin(name_or_path, out);
    return hnnsa_instance_load(name_or_path, out);
}

hnnsa_status hnnsa_instance_save(const hnnsa_instance* inst, const char* path) {
    if (!inst || !path) return fail(HNNSA_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        hnnsa::save_instance(inst->inst, path);
        return HNNSA_OK;
    });
}

void hnnsa_instance_free(hnnsa_instance* inst) { delete inst; }

size_t hnnsa_instance_size(const hnnsa_instance* inst) { return inst ? inst->inst.size() : 0; }

const char* hnnsa_instance_id(const hnnsa_instance* inst) { return inst ? inst->inst.id().c_str() : ""; }

hnnsa_status hnnsa_tour_length(const hnnsa_instance* inst, const uint32_t* order, size_t n, double* out) {
    if (!inst || !out) return fail(HNNSA_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out = hnnsa::tour_length(hnnsa::distance_matrix(inst->inst), tour_from(order, n));
        return HNNSA_OK;
    });
}

hnnsa_status hnnsa_solve(const hnnsa_instance* inst, hnnsa_method method, const hnnsa_options* options,
                         hnnsa_result** out) {
    if (!inst || !out) return fail(HNNSA_ERR_INVALID_ARGUMENT, "null argument");
    hnnsa_options defaults;
    hnnsa_options_default(&defaults);
    const hnnsa_options& o = options ? *options : defaults;

    return guarded([&] {
        const auto& instance = inst->inst;
        const auto raw = hnnsa::distance_matrix(instance);
        auto result = std::make_unique<hnnsa_result>();
        std::optional<hnnsa::Tour> tour;
        std::string extra;

        switch (method) {
        case HNNSA_METHOD_EXACT: tour = hnnsa::brute_force_optimum(raw).tour; break;
        case HNNSA_METHOD_GREEDY: tour = hnnsa::greedy_nearest_neighbor(raw, o.start_city); break;
        case HNNSA_METHOD_TWO_OPT:
            tour = hnnsa::two_opt(raw, hnnsa::greedy_nearest_neighbor(raw, o.start_city));
            break;
        case HNNSA_METHOD_THREE_OPT:
            tour = hnnsa::three_opt(raw, hnnsa::greedy_nearest_neighbor(raw, o.start_city));
            break;
        case HNNSA_METHOD_SA: {
            const auto cfg = sa_config(o);
            cfg.validate(raw.size());
            const auto start = hnnsa::start_tour(raw.size(), o.seed);
            auto r = hnnsa::anneal(raw, start, cfg);
            extra += "start_length=" + num(hnnsa::tour_length(raw, start)) + "\n";
            extra += "final_state_length=" + num(r.trace.final_length) + "\n";
            result->trace_csv = r.trace.to_csv();
            tour = std::move(r.tour);
            break;
        }
        case HNNSA_METHOD_HNN: {
            const auto r = hnnsa::run(hnnsa::normalize_distances(raw), hopfield_params(o, o.seed));
            extra += std::string("converged=") + (r.converged ? "true" : "false") + "\n";
            extra += "sweeps=" + std::to_string(r.sweeps_used) + "\n";
            extra += "energy=" + num(r.energy_trace.back()) + "\n";
            result->grid_text = hnnsa::grid_to_text(r.grid);
            tour = r.tour;
            break;
        }
        case HNNSA_METHOD_HYBRID: {
            const auto hnn_seed = hnnsa::derive_seed(o.seed, 0x484E4EULL);
            const auto r = hnnsa::solve_hybrid(instance, sa_config(o), hopfield_params(o, hnn_seed));
            extra += "sa_start_length=" + num(r.sa_start_length) + "\n";
            extra += "sa_length=" + num(r.sa_length) + "\n";
            extra += std::string("hnn_converged=") + (r.hnn_converged ? "true" : "false") + "\n";
            extra += std::string("hnn_valid=") + (r.hnn_valid ? "true" : "false") + "\n";
            extra += "hnn_length=" + (r.hnn_length ? num(*r.hnn_length) : std::string()) + "\n";
            extra += "hnn_sweeps=" + std::to_string(r.hnn_sweeps) + "\n";
            extra += "hnn_seed=" + std::to_string(hnn_seed) + "\n";
            extra += "final_length=" + num(r.final_length) + "\n";
            result->trace_csv = r.sa_trace.to_csv();
            result->grid_text = hnnsa::grid_to_text(r.hnn_grid);
            tour = r.final_tour;
            break;
        }
        default: return fail(HNNSA_ERR_INVALID_ARGUMENT, "unknown method");
        }

        result->valid = tour.has_value();
        if (tour) {
            result->length = hnnsa::tour_length(raw, *tour);
            result->tour.assign(tour->begin(), tour->end());
        }
        std::string& rec = result->record;
        rec += std::string("method=") + hnnsa_method_name(method) + "\n";
        rec += "instance=" + instance.id() + "\n";
        rec += "n=" + std::to_string(instance.size()) + "\n";
        rec += "seed=" + std::to_string(o.seed) + "\n";
        rec += std::string("valid=") + (result->valid ? "true" : "false") + "\n";
        rec += "length=" + (tour ? num(result->length) : std::string()) + "\n";
        rec += "tour=" + (tour ? tour_text(*tour) : std::string()) + "\n";
        rec += extra;

        *out = result.release();
        return HNNSA_OK;
    });
}

void hnnsa_result_free(hnnsa_result* result) { delete result; }

int hnnsa_result_valid(const hnnsa_result* result) { return result && result->valid ? 1 : 0; }

double hnnsa_result_length(const hnnsa_result* result) { return result ? result->length : NAN; }

size_t hnnsa_result_tour(const hnnsa_result* result, uint32_t* buf, size_t cap) {
    if (!result) return 0;
    if (buf) {
        for (std::size_t k = 0; k < result->tour.size() && k < cap; ++k) buf[k] = result->tour[k];
    }
    return result->tour.size();
}

char* hnnsa_result_record(const hnnsa_result* result) { return dup_string(result ? result->record : ""); }

char* hnnsa_result_trace_csv(const hnnsa_result* result) { return dup_string(result ? result->trace_csv : ""); }

char* hnnsa_result_grid_text(const hnnsa_result* result) { return dup_string(result ? result->grid_text : ""); }

hnnsa_status hnnsa_sweep(const hnnsa_instance* inst, const double* c_values, size_t c_count,
                         const double* d_values, size_t d_count, uint32_t trials, const hnnsa_options* base,
                         hnnsa_success_metric metric, uint32_t workers, hnnsa_report** out) {
    if (!inst || !out || (c_count && !c_values) || (d_count && !d_values)) {
        return fail(HNNSA_ERR_INVALID_ARGUMENT, "null argument");
    }
    hnnsa_options defaults;
    hnnsa_options_default(&defaults);
    const hnnsa_options& o = base ? *base : defaults;
    return guarded([&] {
        hnnsa::SweepOptions opts;
        opts.c_values.assign(c_values, c_values + c_count);
        opts.d_values.assign(d_values, d_values + d_count);
        opts.trials = trials;
        opts.seed = o.seed;
        opts.metric = metric == HNNSA_SUCCESS_OPTIMAL ? hnnsa::SuccessMetric::optimal : hnnsa::SuccessMetric::valid;
        opts.workers = workers;
        *out = new hnnsa_report{hnnsa::sweep(inst->inst, hopfield_params(o, o.seed), opts)};
        return HNNSA_OK;
    });
}

void hnnsa_report_free(hnnsa_report* report) { delete report; }

size_t hnnsa_report_cell_count(const hnnsa_report* report) { return report ? report->report.cells.size() : 0; }

double hnnsa_report_success_rate(const hnnsa_report* report, size_t cell) {
    if (!report || cell >= report->report.cells.size()) return NAN;
    return report->report.cells[cell].success_rate;
}

hnnsa_status hnnsa_report_render(const hnnsa_report* report, hnnsa_format format, char** out) {
    if (!report || !out) return fail(HNNSA_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        const auto f = format == HNNSA_FORMAT_CSV ? hnnsa::ReportFormat::csv : hnnsa::ReportFormat::table;
        *out = dup_string(hnnsa::render_report(report->report, f));
        return *out ? HNNSA_OK : fail(HNNSA_ERR_INTERNAL, "out of memory");
    });
}

hnnsa_status hnnsa_plot_tour_svg(const hnnsa_instance* inst, const uint32_t* tour, size_t n, char** out) {
    if (!inst || !out) return fail(HNNSA_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        std::optional<hnnsa::Tour> t;
        if (tour) t = tour_from(tour, n);
        *out = dup_string(hnnsa::plot_tour_svg(inst->inst, t));
        return *out ? HNNSA_OK : fail(HNNSA_ERR_INTERNAL, "out of memory");
    });
}

hnnsa_status hnnsa_plot_grid_svg(const hnnsa_instance* inst, const uint8_t* cells, size_t n, char** out) {
    if (!inst || !cells || !out) return fail(HNNSA_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        hnnsa::ActivationGrid grid(n, std::vector<std::uint8_t>(cells, cells + n * n));
        *out = dup_string(hnnsa::plot_grid_svg(inst->inst, grid));
        return *out ? HNNSA_OK : fail(HNNSA_ERR_INTERNAL, "out of memory");
    });
}

}  // extern "C"
