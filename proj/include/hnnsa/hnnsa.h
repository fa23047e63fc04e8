/* C interface to the hnnsa TSP toolkit.
 *
 * Objects are opaque handles created by hnnsa_*_create-style calls and
 * released with the matching *_free. Every fallible call returns an
 * hnnsa_status; on failure hnnsa_last_error() describes the problem for the
 * calling thread. Strings handed out by the library are released with
 * hnnsa_string_free.
 */
#ifndef HNNSA_H
#define HNNSA_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  ifdef HNNSA_BUILDING
#    define HNNSA_API __declspec(dllexport)
#  else
#    define HNNSA_API __declspec(dllimport)
#  endif
#else
#  define HNNSA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hnnsa_status {
    HNNSA_OK = 0,
    HNNSA_ERR_INVALID_ARGUMENT = 1,
    HNNSA_ERR_INVALID_SIZE = 2,
    HNNSA_ERR_INVALID_TOUR = 3,
    HNNSA_ERR_INVALID_MATRIX = 4,
    HNNSA_ERR_DEGENERATE = 5,
    HNNSA_ERR_TOO_LARGE = 6,
    HNNSA_ERR_INVALID_TEMPERATURE = 7,
    HNNSA_ERR_PARSE = 8,
    HNNSA_ERR_IO = 9,
    HNNSA_ERR_NOT_FOUND = 10,
    HNNSA_ERR_INTERNAL = 99
} hnnsa_status;

typedef enum hnnsa_method {
    HNNSA_METHOD_EXACT = 0,
    HNNSA_METHOD_GREEDY,
    HNNSA_METHOD_TWO_OPT,
    HNNSA_METHOD_THREE_OPT,
    HNNSA_METHOD_SA,
    HNNSA_METHOD_HNN,
    HNNSA_METHOD_HYBRID
} hnnsa_method;

typedef enum hnnsa_success_metric {
    HNNSA_SUCCESS_VALID = 0,
    HNNSA_SUCCESS_OPTIMAL = 1
} hnnsa_success_metric;

typedef enum hnnsa_format {
    HNNSA_FORMAT_TABLE = 0,
    HNNSA_FORMAT_CSV = 1
} hnnsa_format;

typedef struct hnnsa_instance hnnsa_instance;
typedef struct hnnsa_result hnnsa_result;
typedef struct hnnsa_report hnnsa_report;

/* Solver knobs. Fill with hnnsa_options_default before overriding. */
typedef struct hnnsa_options {
    uint64_t seed;
    /* annealing */
    double t0;
    double cooling;
    uint64_t iterations;
    uint32_t swaps;
    /* network */
    double a;
    double b;
    double c;
    double d;
    double threshold;
    uint32_t max_sweeps;
    /* greedy, 2-opt and 3-opt start city */
    uint32_t start_city;
} hnnsa_options;

HNNSA_API const char* hnnsa_last_error(void);
HNNSA_API const char* hnnsa_status_string(hnnsa_status status);
HNNSA_API void hnnsa_string_free(char* s);

HNNSA_API void hnnsa_options_default(hnnsa_options* options);
HNNSA_API hnnsa_status hnnsa_method_from_name(const char* name, hnnsa_method* out);
HNNSA_API const char* hnnsa_method_name(hnnsa_method method);

/* Instances */
HNNSA_API hnnsa_status hnnsa_instance_generate(size_t n, uint64_t seed, double bound, hnnsa_instance** out);
/* "cityset1", "paper8" or "matrix4"; HNNSA_ERR_NOT_FOUND otherwise. */
HNNSA_API hnnsa_status hnnsa_instance_builtin(const char* name, hnnsa_instance** out);
HNNSA_API hnnsa_status hnnsa_instance_load(const char* path, hnnsa_instance** out);
/* Built-in name if it is one, otherwise a file path. */
HNNSA_API hnnsa_status hnnsa_instance_open(const char* name_or_path, hnnsa_instance** out);
HNNSA_API hnnsa_status hnnsa_instance_save(const hnnsa_instance* inst, const char* path);
HNNSA_API void hnnsa_instance_free(hnnsa_instance* inst);
HNNSA_API size_t hnnsa_instance_size(const hnnsa_instance* inst);
HNNSA_API const char* hnnsa_instance_id(const hnnsa_instance* inst);
HNNSA_API hnnsa_status hnnsa_tour_length(const hnnsa_instance* inst, const uint32_t* order, size_t n,
                                         double* out);

/* Solving. A result is produced even when the method ends without a valid
 * tour; check hnnsa_result_valid. */
HNNSA_API hnnsa_status hnnsa_solve(const hnnsa_instance* inst, hnnsa_method method,
                                   const hnnsa_options* options, hnnsa_result** out);
HNNSA_API void hnnsa_result_free(hnnsa_result* result);
HNNSA_API int hnnsa_result_valid(const hnnsa_result* result);
HNNSA_API double hnnsa_result_length(const hnnsa_result* result);
/* Copies up to cap city indices, returns the tour length in cities (0 if
 * no valid tour). */
HNNSA_API size_t hnnsa_result_tour(const hnnsa_result* result, uint32_t* buf, size_t cap);
/* key=value lines, one per field. Deterministic for fixed inputs. */
HNNSA_API char* hnnsa_result_record(const hnnsa_result* result);
/* Annealing trace as CSV (sa, hybrid), empty string otherwise. */
HNNSA_API char* hnnsa_result_trace_csv(const hnnsa_result* result);
/* Final activation grid as text (hnn, hybrid), empty string otherwise. */
HNNSA_API char* hnnsa_result_grid_text(const hnnsa_result* result);

/* Parameter sweeps over (C, D) cells. workers = 0 uses all cores. */
HNNSA_API hnnsa_status hnnsa_sweep(const hnnsa_instance* inst, const double* c_values, size_t c_count,
                                   const double* d_values, size_t d_count, uint32_t trials,
                                   const hnnsa_options* base, hnnsa_success_metric metric,
                                   uint32_t workers, hnnsa_report** out);
HNNSA_API void hnnsa_report_free(hnnsa_report* report);
HNNSA_API size_t hnnsa_report_cell_count(const hnnsa_report* report);
HNNSA_API double hnnsa_report_success_rate(const hnnsa_report* report, size_t cell);
HNNSA_API hnnsa_status hnnsa_report_render(const hnnsa_report* report, hnnsa_format format, char** out);

/* SVG output. tour may be NULL for markers only. */
HNNSA_API hnnsa_status hnnsa_plot_tour_svg(const hnnsa_instance* inst, const uint32_t* tour, size_t n,
                                           char** out);
/* cells is row-major n*n of 0/1, rows are cities. */
HNNSA_API hnnsa_status hnnsa_plot_grid_svg(const hnnsa_instance* inst, const uint8_t* cells, size_t n,
                                           char** out);

#ifdef __cplusplus
}
#endif

#endif /* HNNSA_H */
