#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "hnnsa/hnnsa.h"

namespace {

struct Owned {
    char* s = nullptr;
    ~Owned() { hnnsa_string_free(s); }
    std::string str() const { return s ? s : ""; }
};

hnnsa_instance* builtin(const char* name) {
    hnnsa_instance* inst = nullptr;
    REQUIRE(hnnsa_instance_builtin(name, &inst) == HNNSA_OK);
    return inst;
}

}  // namespace

TEST_CASE("instances through the C API") {
    hnnsa_instance* inst = nullptr;
    CHECK(hnnsa_instance_builtin("nope", &inst) == HNNSA_ERR_NOT_FOUND);
    CHECK(std::string(hnnsa_last_error()).find("nope") != std::string::npos);

    CHECK(hnnsa_instance_generate(2, 1, 1.0, &inst) == HNNSA_ERR_INVALID_SIZE);
    CHECK(std::string(hnnsa_last_error()).size() > 0);

    REQUIRE(hnnsa_instance_generate(9, 5, 2.0, &inst) == HNNSA_OK);
    CHECK(hnnsa_instance_size(inst) == 9);
    const std::string path = "capi_roundtrip.json";
    REQUIRE(hnnsa_instance_save(inst, path.c_str()) == HNNSA_OK);
    hnnsa_instance* back = nullptr;
    REQUIRE(hnnsa_instance_open(path.c_str(), &back) == HNNSA_OK);
    CHECK(std::string(hnnsa_instance_id(back)) == hnnsa_instance_id(inst));

    std::vector<uint32_t> order{8, 1, 2, 3, 4, 5, 6, 7, 0};
    double a = 0, b = 0;
    CHECK(hnnsa_tour_length(inst, order.data(), order.size(), &a) == HNNSA_OK);
    CHECK(hnnsa_tour_length(back, order.data(), order.size(), &b) == HNNSA_OK);
    CHECK(a == b);
    order[0] = 1;
    CHECK(hnnsa_tour_length(inst, order.data(), order.size(), &a) == HNNSA_ERR_INVALID_TOUR);

    hnnsa_instance_free(back);
    hnnsa_instance_free(inst);
    std::remove(path.c_str());

    CHECK(hnnsa_instance_load("missing-file.json", &inst) == HNNSA_ERR_IO);
}

TEST_CASE("solve through the C API") {
    hnnsa_instance* m4 = builtin("matrix4");
    hnnsa_options o;
    hnnsa_options_default(&o);

    hnnsa_result* r = nullptr;
    REQUIRE(hnnsa_solve(m4, HNNSA_METHOD_EXACT, &o, &r) == HNNSA_OK);
    CHECK(hnnsa_result_valid(r) == 1);
    CHECK(hnnsa_result_length(r) == 71.0);
    uint32_t tour[4];
    CHECK(hnnsa_result_tour(r, tour, 4) == 4);
    Owned rec{hnnsa_result_record(r)};
    CHECK(rec.str().find("length=71\n") != std::string::npos);
    CHECK(rec.str().find("seed=1\n") != std::string::npos);
    hnnsa_result_free(r);

    hnnsa_method method;
    CHECK(hnnsa_method_from_name("3opt", &method) == HNNSA_OK);
    CHECK(method == HNNSA_METHOD_THREE_OPT);
    CHECK(hnnsa_method_from_name("tabu", &method) == HNNSA_ERR_NOT_FOUND);

    hnnsa_instance* p8 = builtin("paper8");
    o.max_sweeps = 0;
    REQUIRE(hnnsa_solve(p8, HNNSA_METHOD_HNN, &o, &r) == HNNSA_OK);
    CHECK(hnnsa_result_valid(r) == 0);
    CHECK(hnnsa_result_tour(r, nullptr, 0) == 0);
    CHECK(std::isnan(hnnsa_result_length(r)));
    hnnsa_result_free(r);

    hnnsa_options_default(&o);
    o.iterations = 2000;
    REQUIRE(hnnsa_solve(p8, HNNSA_METHOD_HYBRID, &o, &r) == HNNSA_OK);
    CHECK(hnnsa_result_valid(r) == 1);
    Owned trace{hnnsa_result_trace_csv(r)};
    Owned grid{hnnsa_result_grid_text(r)};
    CHECK(trace.str().rfind("iteration,temperature,current,best\n", 0) == 0);
    CHECK(grid.str().size() == 8 * 16);
    hnnsa_result_free(r);

    o.swaps = 9;
    CHECK(hnnsa_solve(p8, HNNSA_METHOD_SA, &o, &r) == HNNSA_ERR_INVALID_ARGUMENT);

    hnnsa_instance* big = nullptr;
    REQUIRE(hnnsa_instance_generate(13, 1, 1.0, &big) == HNNSA_OK);
    CHECK(hnnsa_solve(big, HNNSA_METHOD_EXACT, nullptr, &r) == HNNSA_ERR_TOO_LARGE);

    hnnsa_instance_free(big);
    hnnsa_instance_free(p8);
    hnnsa_instance_free(m4);
}

TEST_CASE("sweep and plots through the C API") {
    hnnsa_instance* c1 = builtin("cityset1");
    hnnsa_options o;
    hnnsa_options_default(&o);
    const double cs[] = {90, 100};
    const double ds[] = {100};
    hnnsa_report* rep = nullptr;
    REQUIRE(hnnsa_sweep(c1, cs, 2, ds, 1, 5, &o, HNNSA_SUCCESS_VALID, 2, &rep) == HNNSA_OK);
    CHECK(hnnsa_report_cell_count(rep) == 2);
    CHECK(hnnsa_report_success_rate(rep, 0) >= 0.0);
    char* csv = nullptr;
    REQUIRE(hnnsa_report_render(rep, HNNSA_FORMAT_CSV, &csv) == HNNSA_OK);
    Owned csv_owned{csv};
    CHECK(csv_owned.str().rfind("cell,C,D,best,mean,worst,success_rate,mean_sweeps,trials\n", 0) == 0);
    hnnsa_report_free(rep);
    CHECK(hnnsa_sweep(c1, cs, 0, ds, 1, 5, &o, HNNSA_SUCCESS_VALID, 1, &rep) == HNNSA_ERR_INVALID_ARGUMENT);

    const uint32_t tour[] = {0, 4, 5, 6, 8, 7, 3, 1, 2, 9};
    char* svg = nullptr;
    REQUIRE(hnnsa_plot_tour_svg(c1, tour, 10, &svg) == HNNSA_OK);
    Owned svg_owned{svg};
    CHECK(svg_owned.str().find("<svg") != std::string::npos);
    CHECK(hnnsa_plot_tour_svg(c1, tour, 9, &svg) == HNNSA_ERR_INVALID_TOUR);

    std::vector<uint8_t> cells(16, 0);
    CHECK(hnnsa_plot_grid_svg(c1, cells.data(), 4, &svg) == HNNSA_ERR_INVALID_SIZE);
    hnnsa_instance_free(c1);
}
