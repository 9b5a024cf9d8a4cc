/*
 * C interface to the stacking library.
 *
 * Objects are opaque handles created by stk_*_create / stk_*_generate /
 * stk_*_read_file and released with the matching stk_*_destroy. Every call
 * returning stk_status leaves a human readable message for the calling
 * thread in stk_last_error() when the status is not STK_OK.
 *
 * Colors are 1-based stack ids. Items are indexed 0..n-1 in arrival order
 * (increasing start).
 */
#ifndef STACKING_STACKING_H
#define STACKING_STACKING_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(STACKING_BUILDING)
#    define STK_API __declspec(dllexport)
#  else
#    define STK_API __declspec(dllimport)
#  endif
#else
#  define STK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum stk_status {
    STK_OK = 0,
    STK_ERR_INVALID_ARGUMENT = 1, /* null pointer, h == 0, bad spec string, ... */
    STK_ERR_INVALID_INSTANCE = 2, /* start >= end, duplicate or non-finite endpoint */
    STK_ERR_EMPTY_INPUT = 3,
    STK_ERR_OUT_OF_ORDER = 4,     /* online push with a non-increasing start */
    STK_ERR_DUPLICATE = 5,        /* online push reusing an endpoint */
    STK_ERR_LIMIT_EXCEEDED = 6,   /* exact oracle refused an instance */
    STK_ERR_PARSE = 7,
    STK_ERR_IO = 8,
    STK_ERR_GENERATION = 9,       /* rejection sampling cap */
    STK_ERR_VERIFICATION = 10,    /* a check ran and found violations */
    STK_ERR_INTERNAL = 99
} stk_status;

typedef struct stk_instance stk_instance;
typedef struct stk_coloring stk_coloring;
typedef struct stk_online_solver stk_online_solver;

STK_API const char* stk_last_error(void);
STK_API const char* stk_status_name(stk_status status);
STK_API const char* stk_version(void);

/* ---- instances ---------------------------------------------------------- */

/* Copies n windows, sorts them by start and validates them. */
STK_API stk_status stk_instance_create(const double* starts, const double* ends, size_t n,
                                       stk_instance** out);
/* spec: usq | u:<ell> | g:<mu_c>:<sigma_c>:<mu_l>:<sigma_l> | fixed:<len> */
STK_API stk_status stk_instance_generate(const char* spec, size_t n, uint64_t seed,
                                         stk_instance** out);
STK_API stk_status stk_instance_read_file(const char* path, stk_instance** out);
STK_API stk_status stk_instance_write_file(const stk_instance* inst, const char* path);
/* Canonical text into buf (NUL terminated). *needed gets the byte count
 * including the terminator; buf may be null to query it. */
STK_API stk_status stk_instance_to_text(const stk_instance* inst, char* buf, size_t buf_size,
                                        size_t* needed);
STK_API void stk_instance_destroy(stk_instance* inst);

STK_API size_t stk_instance_size(const stk_instance* inst);
STK_API stk_status stk_instance_get(const stk_instance* inst, size_t index, double* start,
                                    double* end);

STK_API stk_status stk_clique_number(const stk_instance* inst, size_t* omega_prime,
                                     double* witness_t);
STK_API stk_status stk_chain_count(const stk_instance* inst, size_t* c);

/* ---- solving ------------------------------------------------------------ */

STK_API stk_status stk_solve_online(const stk_instance* inst, size_t h, stk_coloring** out);
STK_API stk_status stk_solve_offline(const stk_instance* inst, size_t h, stk_coloring** out);
/* Exact optimum by branch and bound; refuses instances larger than limit
 * (pass 0 for the default of 14). nodes_explored may be null. */
STK_API stk_status stk_solve_exact(const stk_instance* inst, size_t h, size_t limit,
                                   stk_coloring** out, uint64_t* nodes_explored);
STK_API void stk_coloring_destroy(stk_coloring* col);

STK_API size_t stk_coloring_size(const stk_coloring* col);
STK_API size_t stk_coloring_num_colors(const stk_coloring* col);
/* 0 when index is out of range. */
STK_API uint32_t stk_coloring_color(const stk_coloring* col, size_t index);

/* *violations receives the number of violated conditions. Returns
 * STK_ERR_VERIFICATION when it is nonzero, with the first few described in
 * stk_last_error(). */
STK_API stk_status stk_validate_coloring(const stk_instance* inst, size_t h,
                                         const stk_coloring* col, size_t* violations);

typedef struct stk_bound_report {
    size_t c;
    size_t omega_prime;
    size_t chi_prime_h;
    size_t lower_bound;
    double lemma2_rhs;
    double ratio_ub;
} stk_bound_report;

STK_API stk_status stk_bound_report_compute(const stk_instance* inst, size_t h,
                                            const stk_coloring* col, stk_bound_report* out);

/* Incremental online solver: push windows in increasing start order. */
STK_API stk_status stk_online_solver_create(size_t h, stk_online_solver** out);
STK_API stk_status stk_online_solver_push(stk_online_solver* solver, double start, double end,
                                          uint32_t* color);
STK_API size_t stk_online_solver_num_colors(const stk_online_solver* solver);
STK_API void stk_online_solver_destroy(stk_online_solver* solver);

/* ---- sequences ---------------------------------------------------------- */

STK_API stk_status stk_patience_pile_count(const double* deck, size_t n, size_t* piles);
STK_API stk_status stk_lis_length(const double* seq, size_t n, size_t* length);

typedef struct stk_ln_stats {
    size_t n;
    size_t trials;
    double mean;
    double std;
    uint64_t seed;
} stk_ln_stats;

STK_API stk_status stk_ln_statistics(size_t n, size_t trials, uint64_t seed, stk_ln_stats* out);

/* ---- experiments -------------------------------------------------------- */

typedef struct stk_experiment_row {
    char dist[64];
    size_t n;
    size_t h;
    uint64_t seed;
    size_t c;
    size_t omega_prime;
    size_t chi_prime;
    size_t lower_bound;
    double c_over_sqrt_n;
    double err_sqrt_n;
    double ratio_ub;
    double solve_micros;
    char error[192]; /* empty on success */
} stk_experiment_row;

/* Solves inst online and fills a row; dist is copied into row->dist. */
STK_API stk_status stk_measure_instance(const stk_instance* inst, size_t h, const char* dist,
                                        uint64_t seed, stk_experiment_row* row);
/* Writes the CSV header line followed by the row. */
STK_API stk_status stk_experiment_row_csv(const stk_experiment_row* row, char* buf,
                                          size_t buf_size, size_t* needed);

typedef struct stk_sweep_config {
    const char* const* distributions; /* spec strings */
    size_t num_distributions;
    const size_t* n_values;           /* ascending */
    size_t num_n_values;
    size_t h;
    uint64_t base_seed;
    size_t instances_per_point;       /* 0 means 1 */
} stk_sweep_config;

/* suite: "paper" or "smoke". The returned config points at library-owned
 * storage that stays valid for the life of the process. */
STK_API stk_status stk_suite_config(const char* suite, stk_sweep_config* out);

/* Runs the sweep and writes CSV to csv_path (null: stdout). With
 * plot_prefix non-null, also writes <prefix>_<family>_<metric>.svg.
 * failed_rows (nullable) receives the number of rows with an error. */
STK_API stk_status stk_run_sweep(const stk_sweep_config* config, size_t workers,
                                 const char* csv_path, const char* plot_prefix,
                                 size_t* failed_rows);

/* ---- self checks -------------------------------------------------------- */

typedef void (*stk_report_fn)(const char* line, void* user);

/* level: "quick" or "full". Each suite reports a summary line and up to
 * five counterexamples through report. *passed is 1 when all suites pass. */
STK_API stk_status stk_verify(const char* level, uint64_t seed, stk_report_fn report,
                              void* user, int* passed);

#ifdef __cplusplus
}
#endif

#endif /* STACKING_STACKING_H */
