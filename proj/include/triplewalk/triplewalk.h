/*
 * Copyright 2026 The triplewalk Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the triplewalk engine: continuous-time quantum walks on a
 * main chain of N sites with an S-site side chain attached at site l.
 *
 * Conventions
 *   - Sites are 1-indexed: 1..N main chain, N+1..N+S side chain.
 *   - Every fallible call returns tw_status; TW_OK is zero. On failure,
 *     tw_last_error() returns a message for the calling thread, valid until
 *     the next failing call on that thread.
 *   - Objects are opaque handles released with their *_destroy function.
 *     Handles are immutable after creation and may be shared between threads.
 *   - Array outputs take (buffer, capacity, *count). *count always receives
 *     the required size; TW_ERR_BUFFER_TOO_SMALL is returned when capacity is
 *     short, and buffer may be NULL when capacity is 0.
 */

#ifndef TRIPLEWALK_H
#define TRIPLEWALK_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(TRIPLEWALK_BUILDING)
#    define TW_API __declspec(dllexport)
#  else
#    define TW_API __declspec(dllimport)
#  endif
#else
#  define TW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tw_status {
    TW_OK = 0,
    TW_ERR_INVALID_ARGUMENT = 1,
    TW_ERR_OUT_OF_RANGE = 2,
    TW_ERR_ON_SPECTRUM = 3,
    TW_ERR_NO_CONVERGENCE = 4,
    TW_ERR_DEGENERATE_PARTITION = 5,
    TW_ERR_DIMENSION_MISMATCH = 6,
    TW_ERR_NOT_A_ROOT = 7,
    TW_ERR_BUFFER_TOO_SMALL = 8,
    TW_ERR_NULL_POINTER = 9,
    TW_ERR_INTERNAL = 10
} tw_status;

TW_API const char* tw_status_string(tw_status status);
TW_API const char* tw_last_error(void);
TW_API const char* tw_version(void);

/* ---- model --------------------------------------------------------------- */

typedef struct tw_spec {
    int main_len;    /* N >= 1 */
    int side_len;    /* S >= 0 */
    int attach;      /* 1 <= l <= N */
    double coupling; /* J > 0 */
} tw_spec;

typedef enum tw_region { TW_REGION_LEFT = 0, TW_REGION_CONNECTION = 1, TW_REGION_RIGHT = 2, TW_REGION_SIDE = 3 } tw_region;

/* A model owns the Hamiltonian and its eigendecomposition. */
typedef struct tw_model tw_model;

TW_API tw_status tw_spec_validate(const tw_spec* spec);
TW_API tw_status tw_model_create(const tw_spec* spec, tw_model** out);
TW_API void tw_model_destroy(tw_model* model);
TW_API tw_status tw_model_spec(const tw_model* model, tw_spec* out);
TW_API int tw_model_dim(const tw_model* model);
TW_API tw_status tw_model_region(const tw_model* model, int site, tw_region* out);

/* Row-major (N+S)x(N+S) Hamiltonian. */
TW_API tw_status tw_model_hamiltonian(const tw_model* model, double* out, size_t capacity, size_t* count);
/* Ascending eigenvalues. */
TW_API tw_status tw_model_eigenvalues(const tw_model* model, double* out, size_t capacity, size_t* count);
/* Row-major eigenvector matrix; column k belongs to eigenvalue k. */
TW_API tw_status tw_model_eigenvectors(const tw_model* model, double* out, size_t capacity, size_t* count);
/* <a|(z-H)^{-1}|b> by direct linear solve. */
TW_API tw_status tw_model_resolvent(const tw_model* model, double z_re, double z_im, int a, int b, double* out_re,
                                    double* out_im);
/* Amplitudes of e^{-iHt}|start> as interleaved (re, im) pairs; capacity in doubles. */
TW_API tw_status tw_model_evolve_basis(const tw_model* model, int start, double t, double* out, size_t capacity,
                                       size_t* count);

/* ---- dynamics ------------------------------------------------------------ */

typedef struct tw_trace tw_trace;

typedef enum tw_trace_column {
    TW_COL_TIME = 0,
    TW_COL_LEFT = 1,
    TW_COL_CONN = 2,
    TW_COL_RIGHT = 3,
    TW_COL_SIDE = 4
} tw_trace_column;

typedef enum tw_side { TW_SIDE_LEFT = 0, TW_SIDE_RIGHT = 1 } tw_side;

typedef struct tw_verdict {
    int switching; /* 1 when max_opposite < threshold */
    double max_opposite;
    double threshold;
    double horizon;
    size_t samples;
} tw_verdict;

TW_API tw_status tw_trace_create(const tw_model* model, int start, double horizon, double dt, tw_trace** out);
TW_API void tw_trace_destroy(tw_trace* trace);
TW_API size_t tw_trace_length(const tw_trace* trace);
TW_API tw_status tw_trace_column_data(const tw_trace* trace, tw_trace_column column, double* out, size_t capacity,
                                      size_t* count);
/* Side containing the start site; fails for the connection site or side chain. */
TW_API tw_status tw_trace_initial_side(const tw_trace* trace, tw_side* out);
TW_API tw_status tw_detect_switching(const tw_trace* trace, tw_side initial_side, double threshold, tw_verdict* out);
TW_API tw_status tw_side_leakage_max(const tw_spec* spec, int start, double horizon, double dt, double* out);

/* ---- spectral ------------------------------------------------------------ */

typedef enum tw_root_mode { TW_ROOTS_EXACT = 0, TW_ROOTS_LARGE_J = 1 } tw_root_mode;

TW_API tw_status tw_chain_levels(int length, double* out, size_t capacity, size_t* count);
TW_API tw_status tw_g0_element(double z_re, double z_im, int j1, int j2, int length, double* out_re, double* out_im);
TW_API tw_status tw_remaining_levels(int length, int attach, double* out, size_t capacity, size_t* count);
TW_API tw_status tw_shifted_levels_large_j(int length, int attach, double* out, size_t capacity, size_t* count);
/* Levels shared by the main chain and the side chain beyond its first site;
 * exact eigenvalues that are poles, not roots, of the exact level equation. */
TW_API tw_status tw_coincident_levels(const tw_spec* spec, double* out, size_t capacity, size_t* count);
TW_API tw_status tw_lambda_s(int side_len, double* out);
TW_API tw_status tw_side_chain_g_diag(double z_re, double z_im, int side_len, double coupling, double* out_re,
                                      double* out_im);
TW_API tw_status tw_level_equation(const tw_spec* spec, tw_root_mode mode, double z, double* out);
/* Roots and residuals share the count; inconclusive brackets go to
 * tw_find_roots_inconclusive. */
TW_API tw_status tw_find_roots(const tw_spec* spec, tw_root_mode mode, double* roots, double* residuals,
                               size_t capacity, size_t* count);
/* Interleaved (lo, hi) pairs; capacity in doubles. */
TW_API tw_status tw_find_roots_inconclusive(const tw_spec* spec, tw_root_mode mode, double* out, size_t capacity,
                                            size_t* count);
TW_API tw_status tw_delta_shift(const tw_spec* spec, double z0, double* out);
TW_API tw_status tw_perturbative_amplitude(const tw_spec* spec, int j1, int j2, double t, double* out_re,
                                           double* out_im);
TW_API tw_status tw_side_leak_residue(const tw_spec* spec, int j, double* out);

/* ---- sweep --------------------------------------------------------------- */

typedef struct tw_sweep_grid {
    int n_first, n_last;
    int l_first, l_last;
    int s_first, s_last;
    const double* couplings;
    size_t coupling_count;
    int start;
    double horizon; /* <= 0: max(100, 10 J^2) per point */
    double dt;
    double threshold;
    unsigned threads; /* 0: hardware concurrency */
} tw_sweep_grid;

/* Defaults: N=11, l=2..10, S=1..4, J={10}, start=1, auto horizon,
 * dt=0.05, threshold=0.05. couplings points at static storage. */
TW_API void tw_sweep_grid_default(tw_sweep_grid* out);

typedef struct tw_sweep_record {
    tw_spec spec;
    int start;
    double horizon;
    double dt;
    int gcd_value;
    int predicate_paper; /* gcd > 2 */
    int predicate_weak;  /* gcd > 1 */
    int odd_parity;
    int evaluated; /* 0 when the point failed; see error */
    tw_verdict verdict;
    int agreement;
    const char* error; /* empty string when evaluated; owned by the sweep */
} tw_sweep_record;

typedef struct tw_parity_cell {
    int present; /* 0: no records fell in this cell */
    size_t count;
    size_t switching;
    size_t agreeing;
} tw_parity_cell;

typedef struct tw_parity_table {
    tw_parity_cell cells[2][2]; /* [0=odd,1=even][predicate_paper] */
    size_t total;
    size_t evaluated;
    size_t failed;
    size_t agreeing;
    double agreement_rate;
} tw_parity_table;

typedef struct tw_sweep tw_sweep;

TW_API tw_status tw_gcd_predicate(int length, int attach, int* gcd_value, int* predicate_paper, int* predicate_weak);
TW_API tw_status tw_sweep_run(const tw_sweep_grid* grid, tw_sweep** out);
TW_API void tw_sweep_destroy(tw_sweep* sweep);
TW_API size_t tw_sweep_size(const tw_sweep* sweep);
TW_API tw_status tw_sweep_record_at(const tw_sweep* sweep, size_t index, tw_sweep_record* out);
TW_API tw_status tw_sweep_classify(const tw_sweep* sweep, tw_parity_table* out);

/* ---- acceptance checks --------------------------------------------------- */

typedef struct tw_check_info {
    const char* name;
    const char* criterion;
    const char* description;
    int supplementary;
} tw_check_info;

typedef struct tw_check_result {
    int passed;
    double seconds;
    char detail[512];
} tw_check_result;

TW_API size_t tw_check_count(void);
TW_API tw_status tw_check_info_at(size_t index, tw_check_info* out);
/* Returns TW_ERR_OUT_OF_RANGE when no check has this name. */
TW_API tw_status tw_check_find(const char* name, size_t* index);
TW_API tw_status tw_check_run(size_t index, tw_check_result* out);

#ifdef __cplusplus
}
#endif

#endif /* TRIPLEWALK_H */
