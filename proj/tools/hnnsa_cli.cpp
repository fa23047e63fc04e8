// hnnsa command-line front end. Talks to the library only through the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hnnsa/hnnsa.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNoTour = 1;
constexpr int kExitUsage = 2;

struct InstanceDeleter {
    void operator()(hnnsa_instance* p) const { hnnsa_instance_free(p); }
};
struct ResultDeleter {
    void operator()(hnnsa_result* p) const { hnnsa_result_free(p); }
};
struct ReportDeleter {
    void operator()(hnnsa_report* p) const { hnnsa_report_free(p); }
};
struct StringDeleter {
    void operator()(char* p) const { hnnsa_string_free(p); }
};

using InstancePtr = std::unique_ptr<hnnsa_instance, InstanceDeleter>;
using OwnedString = std::unique_ptr<char, StringDeleter>;

int report_error(hnnsa_status status) {
    std::cerr << "error: " << hnnsa_status_string(status);
    if (*hnnsa_last_error()) std::cerr << ": " << hnnsa_last_error();
    std::cerr << "\n";
    return kExitUsage;
}

bool write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) {
        std::cerr << "error: cannot write '" << path << "'\n";
        return false;
    }
    return true;
}

bool read_file(const std::string& path, std::string& text) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot read '" << path << "'\n";
        return false;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
    return true;
}

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> values;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        const double v = std::stod(item, &used);
        if (used != item.size()) throw std::invalid_argument(item);
        values.push_back(v);
    }
    return values;
}

// A bare list of city indices, or a solve record (its tour= line is used).
bool parse_tour(const std::string& text, std::vector<std::uint32_t>& tour) {
    std::string body = text;
    std::istringstream lines(text);
    for (std::string line; std::getline(lines, line);) {
        if (line.rfind("tour=", 0) == 0) {
            body = line.substr(5);
            break;
        }
    }
    for (auto& ch : body)
        if (ch == ',') ch = ' ';
    std::istringstream in(body);
    std::string token;
    while (in >> token) {
        if (token.find_first_not_of("0123456789") != std::string::npos) return false;
        tour.push_back(static_cast<std::uint32_t>(std::stoul(token)));
    }
    return !tour.empty();
}

hnnsa_status open_instance(const std::string& name, InstancePtr& out) {
    hnnsa_instance* raw = nullptr;
    const auto status = hnnsa_instance_open(name.c_str(), &raw);
    out.reset(raw);
    return status;
}

struct GenArgs {
    std::size_t n = 0;
    std::uint64_t seed = 1;
    double bound = 1.0;
    std::string out;
};

int cmd_gen(const GenArgs& a) {
    hnnsa_instance* raw = nullptr;
    if (auto s = hnnsa_instance_generate(a.n, a.seed, a.bound, &raw); s != HNNSA_OK) return report_error(s);
    InstancePtr inst(raw);
    if (auto s = hnnsa_instance_save(inst.get(), a.out.c_str()); s != HNNSA_OK) return report_error(s);
    std::cerr << "wrote " << hnnsa_instance_size(inst.get()) << " cities to " << a.out << "\n";
    return kExitOk;
}

struct SolveArgs {
    std::string instance;
    std::string method = "hybrid";
    std::string trace_out;
    std::string grid_out;
    hnnsa_options options{};
};

int cmd_solve(const SolveArgs& a) {
    hnnsa_method method;
    if (hnnsa_method_from_name(a.method.c_str(), &method) != HNNSA_OK) {
        std::cerr << "error: unknown method '" << a.method << "'\n";
        return kExitUsage;
    }
    InstancePtr inst;
    if (auto s = open_instance(a.instance, inst); s != HNNSA_OK) return report_error(s);

    hnnsa_result* raw = nullptr;
    if (auto s = hnnsa_solve(inst.get(), method, &a.options, &raw); s != HNNSA_OK) return report_error(s);
    std::unique_ptr<hnnsa_result, ResultDeleter> result(raw);

    OwnedString record(hnnsa_result_record(result.get()));
    std::cout << record.get();

    if (!a.trace_out.empty()) {
        OwnedString csv(hnnsa_result_trace_csv(result.get()));
        if (!write_file(a.trace_out, csv.get())) return kExitUsage;
    }
    if (!a.grid_out.empty()) {
        OwnedString grid(hnnsa_result_grid_text(result.get()));
        if (!write_file(a.grid_out, grid.get())) return kExitUsage;
    }

    std::cerr << "method  " << a.method << "\n"
              << "cities  " << hnnsa_instance_size(inst.get()) << "\n";
    if (hnnsa_result_valid(result.get())) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.4f", hnnsa_result_length(result.get()));
        std::cerr << "length  " << buf << "\n";
        return kExitOk;
    }
    std::cerr << "no valid tour\n";
    return kExitNoTour;
}

struct SweepArgs {
    std::string instance;
    std::string c_grid = "90,100";
    std::string d_grid = "100,110,120";
    std::uint32_t trials = 100;
    std::string metric = "valid";
    std::uint32_t workers = 1;
    std::string out;
    hnnsa_options options{};
};

int cmd_sweep(const SweepArgs& a) {
    std::vector<double> cs, ds;
    try {
        cs = parse_list(a.c_grid);
        ds = parse_list(a.d_grid);
    } catch (const std::exception&) {
        std::cerr << "error: --c-grid and --d-grid take comma-separated numbers\n";
        return kExitUsage;
    }
    InstancePtr inst;
    if (auto s = open_instance(a.instance, inst); s != HNNSA_OK) return report_error(s);

    const auto metric = a.metric == "optimal" ? HNNSA_SUCCESS_OPTIMAL : HNNSA_SUCCESS_VALID;
    hnnsa_report* raw = nullptr;
    if (auto s = hnnsa_sweep(inst.get(), cs.data(), cs.size(), ds.data(), ds.size(), a.trials, &a.options,
                             metric, a.workers, &raw);
        s != HNNSA_OK) {
        return report_error(s);
    }
    std::unique_ptr<hnnsa_report, ReportDeleter> report(raw);

    char* csv_raw = nullptr;
    char* table_raw = nullptr;
    if (auto s = hnnsa_report_render(report.get(), HNNSA_FORMAT_CSV, &csv_raw); s != HNNSA_OK) return report_error(s);
    OwnedString csv(csv_raw);
    if (auto s = hnnsa_report_render(report.get(), HNNSA_FORMAT_TABLE, &table_raw); s != HNNSA_OK) {
        return report_error(s);
    }
    OwnedString table(table_raw);

    if (a.out.empty()) {
        std::cout << csv.get();
    } else if (!write_file(a.out, csv.get())) {
        return kExitUsage;
    }
    std::cerr << "instance " << hnnsa_instance_id(inst.get()) << ", seed " << a.options.seed << ", "
              << a.trials << " trials per cell\n"
              << table.get();
    return kExitOk;
}

struct PlotArgs {
    std::string instance;
    std::string tour;
    std::string grid;
    std::string out;
};

int cmd_plot(const PlotArgs& a) {
    InstancePtr inst;
    if (auto s = open_instance(a.instance, inst); s != HNNSA_OK) return report_error(s);
    const auto n = hnnsa_instance_size(inst.get());

    char* svg_raw = nullptr;
    hnnsa_status status = HNNSA_OK;
    if (!a.grid.empty()) {
        std::string text;
        if (!read_file(a.grid, text)) return kExitUsage;
        std::vector<std::uint8_t> cells;
        std::istringstream in(text);
        for (std::string token; in >> token;) {
            if (token != "0" && token != "1") {
                std::cerr << "error: grid entries must be 0 or 1\n";
                return kExitUsage;
            }
            cells.push_back(token == "1" ? 1 : 0);
        }
        if (cells.size() != n * n) {
            std::cerr << "error: grid has " << cells.size() << " cells, instance needs " << n * n << "\n";
            return kExitUsage;
        }
        status = hnnsa_plot_grid_svg(inst.get(), cells.data(), n, &svg_raw);
    } else if (!a.tour.empty()) {
        std::string text;
        if (!read_file(a.tour, text)) return kExitUsage;
        std::vector<std::uint32_t> tour;
        if (!parse_tour(text, tour)) {
            std::cerr << "error: '" << a.tour << "' holds no tour\n";
            return kExitUsage;
        }
        if (tour.size() != n) {
            std::cerr << "error: tour has " << tour.size() << " cities, instance has " << n << "\n";
            return kExitUsage;
        }
        status = hnnsa_plot_tour_svg(inst.get(), tour.data(), tour.size(), &svg_raw);
    } else {
        status = hnnsa_plot_tour_svg(inst.get(), nullptr, 0, &svg_raw);
    }
    if (status != HNNSA_OK) return report_error(status);
    OwnedString svg(svg_raw);
    return write_file(a.out, svg.get()) ? kExitOk : kExitUsage;
}

void add_seed(CLI::App& cmd, hnnsa_options& o) {
    cmd.add_option("--seed", o.seed, "Random seed")->capture_default_str();
}

void add_annealing_flags(CLI::App& cmd, hnnsa_options& o) {
    cmd.add_option("--t0", o.t0, "Initial temperature")->capture_default_str();
    cmd.add_option("--cooling", o.cooling, "Geometric cooling rate in (0,1)")->capture_default_str();
    cmd.add_option("--iters", o.iterations, "Annealing iteration budget")->capture_default_str();
    cmd.add_option("--swaps", o.swaps, "City pairs exchanged per move")->capture_default_str();
}

void add_network_flags(CLI::App& cmd, hnnsa_options& o, bool with_cd) {
    cmd.add_option("--A", o.a, "Row penalty")->capture_default_str();
    cmd.add_option("--B", o.b, "Column penalty")->capture_default_str();
    if (with_cd) {
        cmd.add_option("--C", o.c, "Global count penalty")->capture_default_str();
        cmd.add_option("--D", o.d, "Distance weight")->capture_default_str();
    }
    cmd.add_option("--threshold", o.threshold, "Unit activation threshold")->capture_default_str();
    cmd.add_option("--max-sweeps", o.max_sweeps, "Sweep limit for the network")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Travelling salesman solvers: Hopfield network, simulated annealing, hybrid and baselines"};
    app.require_subcommand(1);

    std::string instance_help = "Instance file, or a built-in name: cityset1, paper8, matrix4";

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance file");
    gen_cmd->add_option("--n", gen.n, "Number of cities (>= 3)")->required();
    gen_cmd->add_option("--seed", gen.seed, "Random seed")->capture_default_str();
    gen_cmd->add_option("--bound", gen.bound, "Side length of the square")->capture_default_str();
    gen_cmd->add_option("--out", gen.out, "Output path")->required();

    SolveArgs solve;
    hnnsa_options_default(&solve.options);
    auto* solve_cmd = app.add_subcommand("solve", "Solve an instance and print a key=value record");
    solve_cmd->add_option("--instance", solve.instance, instance_help)->required();
    solve_cmd->add_option("--method", solve.method, "exact, greedy, 2opt, 3opt, sa, hnn or hybrid")
        ->capture_default_str();
    add_seed(*solve_cmd, solve.options);
    solve_cmd->add_option("--start", solve.options.start_city, "Start city for greedy, 2opt and 3opt")
        ->capture_default_str();
    add_annealing_flags(*solve_cmd, solve.options);
    add_network_flags(*solve_cmd, solve.options, true);
    solve_cmd->add_option("--trace-out", solve.trace_out, "Write the annealing trace as CSV");
    solve_cmd->add_option("--grid-out", solve.grid_out, "Write the final activation grid as text");

    SweepArgs sw;
    hnnsa_options_default(&sw.options);
    auto* sweep_cmd = app.add_subcommand("sweep", "Benchmark the network over a grid of C and D values");
    sweep_cmd->add_option("--instance", sw.instance, instance_help)->required();
    sweep_cmd->add_option("--c-grid", sw.c_grid, "Comma-separated C values")->capture_default_str();
    sweep_cmd->add_option("--d-grid", sw.d_grid, "Comma-separated D values")->capture_default_str();
    sweep_cmd->add_option("--trials", sw.trials, "Runs per cell")->capture_default_str()->check(CLI::PositiveNumber);
    add_seed(*sweep_cmd, sw.options);
    add_network_flags(*sweep_cmd, sw.options, false);
    sweep_cmd->add_option("--success-metric", sw.metric, "valid or optimal")
        ->capture_default_str()
        ->check(CLI::IsMember({"valid", "optimal"}));
    sweep_cmd->add_option("--workers", sw.workers, "Worker threads, 0 for all cores")->capture_default_str();
    sweep_cmd->add_option("--out", sw.out, "CSV output path (default: standard output)");

    PlotArgs plot;
    auto* plot_cmd = app.add_subcommand("plot", "Write an SVG of the cities, a tour or an activation grid");
    plot_cmd->add_option("--instance", plot.instance, instance_help)->required();
    auto* tour_opt = plot_cmd->add_option("--tour", plot.tour, "Tour file: city indices or a solve record");
    auto* grid_opt = plot_cmd->add_option("--grid", plot.grid, "Activation grid text file");
    tour_opt->excludes(grid_opt);
    plot_cmd->add_option("--out", plot.out, "SVG output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (*gen_cmd) return cmd_gen(gen);
    if (*solve_cmd) return cmd_solve(solve);
    if (*sweep_cmd) return cmd_sweep(sw);
    if (*plot_cmd) return cmd_plot(plot);
    return kExitUsage;
}
