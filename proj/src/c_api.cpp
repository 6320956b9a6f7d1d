// Copyright 2026 The triplewalk Authors
// SPDX-License-Identifier: Apache-2.0

#include "triplewalk/triplewalk.h"

#include "triplewalk/dynamics.hpp"
#include "triplewalk/linalg.hpp"
#include "triplewalk/model.hpp"
#include "triplewalk/spectral.hpp"
#include "triplewalk/sweep.hpp"
#include "triplewalk/verify.hpp"

#include <cstdio>
#include <cstring>
#include <new>
#include <string>
#include <vector>

using namespace triplewalk;

struct tw_model {
    TripleGraphSpec spec;
    Hamiltonian hamiltonian;
    SpectralDecomposition dec;
};

struct tw_trace {
    ProbabilityTrace trace;
};

struct tw_sweep {
    std::vector<SweepRecord> records;
};

namespace {

thread_local std::string g_last_error;

tw_status map_code(ErrorCode code) {
    switch (code) {
        case ErrorCode::invalid_argument: return TW_ERR_INVALID_ARGUMENT;
        case ErrorCode::out_of_range: return TW_ERR_OUT_OF_RANGE;
        case ErrorCode::on_spectrum: return TW_ERR_ON_SPECTRUM;
        case ErrorCode::no_convergence: return TW_ERR_NO_CONVERGENCE;
        case ErrorCode::degenerate_partition: return TW_ERR_DEGENERATE_PARTITION;
        case ErrorCode::dimension_mismatch: return TW_ERR_DIMENSION_MISMATCH;
        case ErrorCode::not_a_root: return TW_ERR_NOT_A_ROOT;
    }
    return TW_ERR_INTERNAL;
}

tw_status fail(tw_status status, std::string message) {
    g_last_error = std::move(message);
    return status;
}

/// Runs body, translating exceptions into status codes.
template <class F>
tw_status guarded(F&& body) noexcept {
    try {
        body();
        return TW_OK;
    } catch (const Error& e) {
        return fail(map_code(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(TW_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(TW_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(TW_ERR_INTERNAL, "unknown error");
    }
}

TripleGraphSpec to_spec(const tw_spec& s) { return {s.main_len, s.side_len, s.attach, s.coupling}; }
tw_spec from_spec(const TripleGraphSpec& s) { return {s.main_len, s.side_len, s.attach, s.coupling}; }

tw_status copy_out(const std::vector<double>& values, double* out, size_t capacity, size_t* count) {
    if (count == nullptr) return fail(TW_ERR_NULL_POINTER, "null pointer: count");
    *count = values.size();
    if (capacity < values.size()) return fail(TW_ERR_BUFFER_TOO_SMALL, "output buffer too small");
    if (!values.empty()) {
        if (out == nullptr) return fail(TW_ERR_NULL_POINTER, "null pointer: out");
        std::memcpy(out, values.data(), values.size() * sizeof(double));
    }
    return TW_OK;
}

/// Computes values via body, then copies them out.
template <class F>
tw_status array_call(double* out, size_t capacity, size_t* count, F&& body) noexcept {
    std::vector<double> values;
    const tw_status st = guarded([&] { values = body(); });
    if (st != TW_OK) return st;
    return copy_out(values, out, capacity, count);
}

tw_status set_complex(cplx v, double* re, double* im) {
    if (re == nullptr || im == nullptr) return fail(TW_ERR_NULL_POINTER, "null pointer: complex output");
    *re = v.real();
    *im = v.imag();
    return TW_OK;
}

tw_verdict to_c(const SwitchingVerdict& v) {
    return {v.switching ? 1 : 0, v.max_opposite, v.threshold, v.horizon, v.samples};
}

RootMode to_mode(tw_root_mode mode) {
    if (mode == TW_ROOTS_EXACT) return RootMode::exact;
    if (mode == TW_ROOTS_LARGE_J) return RootMode::large_j;
    throw Error(ErrorCode::invalid_argument, "unknown root mode");
}

const std::vector<double> kDefaultCouplings{10.0};

}  // namespace

extern "C" {

const char* tw_status_string(tw_status status) {
    switch (status) {
        case TW_OK: return "ok";
        case TW_ERR_INVALID_ARGUMENT: return "invalid argument";
        case TW_ERR_OUT_OF_RANGE: return "out of range";
        case TW_ERR_ON_SPECTRUM: return "energy on spectrum";
        case TW_ERR_NO_CONVERGENCE: return "no convergence";
        case TW_ERR_DEGENERATE_PARTITION: return "degenerate partition";
        case TW_ERR_DIMENSION_MISMATCH: return "dimension mismatch";
        case TW_ERR_NOT_A_ROOT: return "not a root";
        case TW_ERR_BUFFER_TOO_SMALL: return "buffer too small";
        case TW_ERR_NULL_POINTER: return "null pointer";
        case TW_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* tw_last_error(void) { return g_last_error.c_str(); }

const char* tw_version(void) { return "1.0.0"; }

tw_status tw_spec_validate(const tw_spec* spec) {
    if (spec == nullptr) return fail(TW_ERR_NULL_POINTER, "null pointer: spec");
    return guarded([&] { validate_spec(to_spec(*spec)); });
}

tw_status tw_model_create(const tw_spec* spec, tw_model** out) {
    if (spec == nullptr || out == nullptr) return fail(TW_ERR_NULL_POINTER, "null pointer: spec/out");
    *out = nullptr;
    return guarded([&] {
        const TripleGraphSpec s = to_spec(*spec);
        Hamiltonian h = build_hamiltonian(s);
        SpectralDecomposition dec = symmetric_eig(h);
        *out = new tw_model{s, std::move(h), std::move(dec)};
    });
}

void tw_model_destroy(tw_model* model) { delete model; }

tw_status tw_model_spec(const tw_model* model, tw_spec* out) {
    if (model == nullptr || out == nullptr) return fail(TW_ERR_NULL_POINTER, "null pointer: model/out");
    *out = from_spec(model->spec);
    return TW_OK;
}

int tw_model_dim(const tw_model* model) { return model == nullptr ? 0 : model->spec.dim(); }

tw_status tw_model_region(const tw_model* model, int site, tw_region* out) {
    if (model == nullptr || out == nullptr) return fail(TW_ERR_NULL_POINTER, "null pointer: model/out");
    return guarded([&] { *out = static_cast<tw_region>(region_of(model->spec, site)); });
}

tw_status tw_model_hamiltonian(const tw_model* model, double* out, size_t capacity, size_t* count) {
    if (model == nullptr) return fail(TW_ERR_NULL_POINTER, "null pointer: model");
    return copy_out(model->hamiltonian.matrix().data(), out, capacity, count);
}

tw_status tw_model_eigenvalues(const tw_model* model, double* out, size_t capacity, size_t* count) {
    if (model == nullptr) return fail(TW_ERR_NULL_POINTER, "null pointer: model");
    return copy_out(model->dec.values, out, capacity, count);
}

tw_status tw_model_eigenvectors(const tw_model* model, double* out, size_t capacity, size_t* count) {
    if (model == nullptr) return fail(TW_ERR_NULL_POINTER, "null pointer: model");
    return copy_out(model->dec.vectors.data(), out, capacity, count);
}

tw_status tw_model_resolvent(const tw_model* model, double z_re, double z_im, int a, int b, double* out_re,
                             double* out_im) {
    if (model == nullptr) return fail(TW_ERR_NULL_POINTER, "null pointer: model");
    cplx g;
    const tw_status st = guarded([&] { g = resolvent_element(model->hamiltonian, cplx(z_re, z_im), a, b); });
    return st == TW_OK ? set_complex(g, out_re, out_im) : st;
}

tw_status tw_model_evolve_basis(const tw_model* model, int start, double t, double* out, size_t capacity,
                                size_t* count) {
    if (model == nullptr) return fail(TW_ERR_NULL_POINTER, "null pointer: model");
    return array_call(out, capacity, count, [&] {
        const WalkState psi = evolve(model->dec, WalkState::basis(model->spec.dim(), start), t);
        std::vector<double> flat;
        flat.reserve(static_cast<std::size_t>(2 * psi.dim()));
        for (const cplx& a : psi.amplitudes()) {
            flat.push_back(a.real());
            flat.push_back(a.imag());
        }
        return flat;
    });
}

tw_status tw_trace_create(const tw_model* model, int start, double horizon, double dt, tw_trace** out) {
    if (model == nullptr || out == nullptr) return fail(TW_ERR_NULL_POINTER, "null pointer: model/out");
    *out = nullptr;
    return guarded([&] { *out = new tw_trace{propagate_trace(model->spec, model->dec, start, horizon, dt)}; });
}

void tw_trace_destroy(tw_trace* trace) { delete trace; }

size_t tw_trace_length(const tw_trace* trace) { return trace == nullptr ? 0 : trace->trace.size(); }

tw_status tw_trace_column_data(const tw_trace* trace, tw_trace_column column, double* out, size_t capacity,
                               size_t* count) {
    if (trace == nullptr) return fail(TW_ERR_NULL_POINTER, "null pointer: trace");
    const ProbabilityTrace& t = trace->trace;
    switch (column) {
        case TW_COL_TIME: return copy_out(t.times, out, capacity, count);
        case TW_COL_LEFT: return copy_out(t.p_left, out, capacity, count);
        case TW_COL_CONN: return copy_out(t.p_conn, out, capacity, count);
        case TW_COL_RIGHT: return copy_out(t.p_right, out, capacity, count);
        case TW_COL_SIDE: return copy_out(t.p_side, out, capacity, count);
    }
    return fail(TW_ERR_INVALID_ARGUMENT, "unknown trace column");
}

tw_status tw_trace_initial_side(const tw_trace* trace, tw_side* out) {
    if (trace == nullptr || out == nullptr) return fail(TW_ERR_NULL_POINTER, "null pointer: trace/out");
    return guarded([&] {
        *out = initial_side(trace->trace.spec, trace->trace.start) == Side::left ? TW_SIDE_LEFT : TW_SIDE_RIGHT;
    });
}

tw_status tw_detect_switching(const tw_trace* trace, tw_side side, double threshold, tw_verdict* out) {
    if (trace == nullptr || out == nullptr) return fail(TW_ERR_NULL_POINTER, "null pointer: trace/out");
    if (side != TW_SIDE_LEFT && side != TW_SIDE_RIGHT) return fail(TW_ERR_INVALID_ARGUMENT, "unknown side");
    return guarded([&] {
        *out = to_c(detect_switching(trace->trace, side == TW_SIDE_LEFT ? Side::left : Side::right, threshold));
    });
}

tw_status tw_side_leakage_max(const tw_spec* spec, int start, double horizon, double dt, double* out) {
    if (spec == nullptr || out == nullptr) return fail(TW_ERR_NULL_POINTER, "null pointer: spec/out");
    return guarded([&] { *out = side_chain_leakage_max(to_spec(*spec), start, horizon, dt); });
}

tw_status tw_chain_levels(int length, double* out, size_t capacity, size_t* count) {
    return array_call(out, capacity, count, [&] { return chain_levels(length).levels; });
}

tw_status tw_g0_element(double z_re, double z_im, int j1, int j2, int length, double* out_re, double* out_im) {
    cplx g;
    const tw_status st = guarded([&] { g = g0_element(cplx(z_re, z_im), j1, j2, length); });
    return st == TW_OK ? set_complex(g, out_re, out_im) : st;
}

tw_status tw_remaining_levels(int length, int attach, double* out, size_t capacity, size_t* count) {
    return array_call(out, capacity, count, [&] { return remaining_levels(length, attach); });
}

tw_status tw_shifted_levels_large_j(int length, int attach, double* out, size_t capacity, size_t* count) {
    return array_call(out, capacity, count, [&] { return shifted_levels_large_j(length, attach); });
}

tw_status tw_coincident_levels(const tw_spec* spec, double* out, size_t capacity, size_t* count) {
    if (spec == nullptr) return fail(TW_ERR_NULL_POINTER, "null pointer: spec");
    return array_call(out, capacity, count, [&] { return coincident_levels(to_spec(*spec)); });
}

tw_status tw_lambda_s(int side_len, double* out) {
    if (out == nullptr) return fail(TW_ERR_NULL_POINTER, "null pointer: out");
    return guarded([&] { *out = lambda_s(side_len); });
}

tw_status tw_side_chain_g_diag(double z_re, double z_im, int side_len, double coupling, double* out_re,
                               double* out_im) {
    cplx g;
    const tw_status st = guarded([&] { g = side_chain_g_diag(cplx(z_re, z_im), side_len, coupling); });
    return st == TW_OK ? set_complex(g, out_re, out_im) : st;
}

tw_status tw_level_equation(const tw_spec* spec, tw_root_mode mode, double z, double* out) {
    if (spec == nullptr || out == nullptr) return fail(TW_ERR_NULL_POINTER, "null pointer: spec/out");
    return guarded([&] { *out = level_equation(z, to_spec(*spec), to_mode(mode)); });
}

tw_status tw_find_roots(const tw_spec* spec, tw_root_mode mode, double* roots, double* residuals, size_t capacity,
                        size_t* count) {
    if (spec == nullptr) return fail(TW_ERR_NULL_POINTER, "null pointer: spec");
    RootSet set;
    const tw_status st = guarded([&] { set = find_roots(to_spec(*spec), to_mode(mode)); });
    if (st != TW_OK) return st;
    const tw_status a = copy_out(set.roots, roots, capacity, count);
    if (a != TW_OK) return a;
    return copy_out(set.residuals, residuals, capacity, count);
}

tw_status tw_find_roots_inconclusive(const tw_spec* spec, tw_root_mode mode, double* out, size_t capacity,
                                     size_t* count) {
    if (spec == nullptr) return fail(TW_ERR_NULL_POINTER, "null pointer: spec");
    return array_call(out, capacity, count, [&] {
        std::vector<double> flat;
        for (const auto& [lo, hi] : find_roots(to_spec(*spec), to_mode(mode)).inconclusive) {
            flat.push_back(lo);
            flat.push_back(hi);
        }
        return flat;
    });
}

tw_status tw_delta_shift(const tw_spec* spec, double z0, double* out) {
    if (spec == nullptr || out == nullptr) return fail(TW_ERR_NULL_POINTER, "null pointer: spec/out");
    return guarded([&] { *out = delta_shift(z0, to_spec(*spec)); });
}

tw_status tw_perturbative_amplitude(const tw_spec* spec, int j1, int j2, double t, double* out_re, double* out_im) {
    if (spec == nullptr) return fail(TW_ERR_NULL_POINTER, "null pointer: spec");
    cplx a;
    const tw_status st = guarded([&] { a = perturbative_amplitude(j1, j2, t, to_spec(*spec)); });
    return st == TW_OK ? set_complex(a, out_re, out_im) : st;
}

tw_status tw_side_leak_residue(const tw_spec* spec, int j, double* out) {
    if (spec == nullptr || out == nullptr) return fail(TW_ERR_NULL_POINTER, "null pointer: spec/out");
    return guarded([&] { *out = side_leak_residue(j, to_spec(*spec)); });
}

void tw_sweep_grid_default(tw_sweep_grid* out) {
    if (out == nullptr) return;
    const SweepGrid g;
    *out = {g.main_len.first, g.main_len.last, g.attach.first,  g.attach.last,
            g.side_len.first, g.side_len.last, kDefaultCouplings.data(), kDefaultCouplings.size(),
            g.start,          g.horizon,       g.dt,           g.threshold,
            g.threads};
}

tw_status tw_gcd_predicate(int length, int attach, int* gcd_value, int* predicate_paper, int* predicate_weak) {
    if (gcd_value == nullptr || predicate_paper == nullptr || predicate_weak == nullptr)
        return fail(TW_ERR_NULL_POINTER, "null pointer: output");
    return guarded([&] {
        const GcdPredicate g = gcd_predicate(length, attach);
        *gcd_value = g.gcd_value;
        *predicate_paper = g.predicate_paper ? 1 : 0;
        *predicate_weak = g.predicate_weak ? 1 : 0;
    });
}

tw_status tw_sweep_run(const tw_sweep_grid* grid, tw_sweep** out) {
    if (grid == nullptr || out == nullptr) return fail(TW_ERR_NULL_POINTER, "null pointer: grid/out");
    if (grid->coupling_count > 0 && grid->couplings == nullptr) return fail(TW_ERR_NULL_POINTER, "null pointer: couplings");
    *out = nullptr;
    return guarded([&] {
        SweepGrid g;
        g.main_len = {grid->n_first, grid->n_last};
        g.attach = {grid->l_first, grid->l_last};
        g.side_len = {grid->s_first, grid->s_last};
        g.couplings.assign(grid->couplings, grid->couplings + grid->coupling_count);
        g.start = grid->start;
        g.horizon = grid->horizon;
        g.dt = grid->dt;
        g.threshold = grid->threshold;
        g.threads = grid->threads;
        *out = new tw_sweep{run_sweep(g)};
    });
}

void tw_sweep_destroy(tw_sweep* sweep) { delete sweep; }

size_t tw_sweep_size(const tw_sweep* sweep) { return sweep == nullptr ? 0 : sweep->records.size(); }

tw_status tw_sweep_record_at(const tw_sweep* sweep, size_t index, tw_sweep_record* out) {
    if (sweep == nullptr || out == nullptr) return fail(TW_ERR_NULL_POINTER, "null pointer: sweep/out");
    if (index >= sweep->records.size()) return fail(TW_ERR_OUT_OF_RANGE, "record index out of range");
    const SweepRecord& r = sweep->records[index];
    tw_sweep_record c{};
    c.spec = from_spec(r.spec);
    c.start = r.start;
    c.horizon = r.horizon;
    c.dt = r.dt;
    c.gcd_value = r.gcd.gcd_value;
    c.predicate_paper = r.gcd.predicate_paper ? 1 : 0;
    c.predicate_weak = r.gcd.predicate_weak ? 1 : 0;
    c.odd_parity = r.parity == Parity::odd ? 1 : 0;
    c.evaluated = r.verdict ? 1 : 0;
    if (r.verdict) c.verdict = to_c(*r.verdict);
    c.agreement = r.agreement ? 1 : 0;
    c.error = r.error.c_str();
    *out = c;
    return TW_OK;
}

tw_status tw_sweep_classify(const tw_sweep* sweep, tw_parity_table* out) {
    if (sweep == nullptr || out == nullptr) return fail(TW_ERR_NULL_POINTER, "null pointer: sweep/out");
    return guarded([&] {
        const ParityTable t = classify_parity_effect(sweep->records);
        tw_parity_table c{};
        for (int p = 0; p < 2; ++p)
            for (int q = 0; q < 2; ++q) {
                const auto& cell = t.cells[p][q];
                c.cells[p][q] = cell ? tw_parity_cell{1, cell->count, cell->switching, cell->agreeing}
                                     : tw_parity_cell{0, 0, 0, 0};
            }
        c.total = t.total;
        c.evaluated = t.evaluated;
        c.failed = t.failed;
        c.agreeing = t.agreeing;
        c.agreement_rate = t.agreement_rate;
        *out = c;
    });
}

size_t tw_check_count(void) { return verify::checks().size(); }

tw_status tw_check_info_at(size_t index, tw_check_info* out) {
    if (out == nullptr) return fail(TW_ERR_NULL_POINTER, "null pointer: out");
    const auto all = verify::checks();
    if (index >= all.size()) return fail(TW_ERR_OUT_OF_RANGE, "check index out of range");
    const auto& c = all[index];
    *out = {c.name.c_str(), c.criterion.c_str(), c.description.c_str(), c.supplementary ? 1 : 0};
    return TW_OK;
}

tw_status tw_check_find(const char* name, size_t* index) {
    if (name == nullptr || index == nullptr) return fail(TW_ERR_NULL_POINTER, "null pointer: name/index");
    const auto all = verify::checks();
    for (size_t i = 0; i < all.size(); ++i)
        if (all[i].name == name) {
            *index = i;
            return TW_OK;
        }
    return fail(TW_ERR_OUT_OF_RANGE, std::string("unknown check: ") + name);
}

tw_status tw_check_run(size_t index, tw_check_result* out) {
    if (out == nullptr) return fail(TW_ERR_NULL_POINTER, "null pointer: out");
    const auto all = verify::checks();
    if (index >= all.size()) return fail(TW_ERR_OUT_OF_RANGE, "check index out of range");
    const auto r = verify::run(all[index]);
    out->passed = r.passed ? 1 : 0;
    out->seconds = r.seconds;
    std::snprintf(out->detail, sizeof out->detail, "%s", r.detail.c_str());
    return TW_OK;
}

}  // extern "C"
