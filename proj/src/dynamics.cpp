// Copyright 2026 The triplewalk Authors
// SPDX-License-Identifier: Apache-2.0

#include "triplewalk/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace triplewalk {

std::vector<double> sample_times(double horizon, double dt) {
    if (!(horizon > 0.0) || !std::isfinite(horizon))
        throw Error(ErrorCode::invalid_argument, "horizon must be a positive finite time");
    if (!(dt > 0.0) || !std::isfinite(dt)) throw Error(ErrorCode::invalid_argument, "dt must be a positive finite time");
    const auto steps = static_cast<std::size_t>(std::floor(horizon / dt + 1e-9));
    std::vector<double> times(steps + 1);
    for (std::size_t k = 0; k <= steps; ++k) times[k] = static_cast<double>(k) * dt;
    return times;
}

ProbabilityTrace propagate_trace(const TripleGraphSpec& spec, const SpectralDecomposition& dec, int start,
                                 double horizon, double dt) {
    validate_spec(spec);
    if (dec.dim() != spec.dim()) throw Error(ErrorCode::dimension_mismatch, "decomposition does not match spec");
    (void)region_of(spec, start);

    ProbabilityTrace trace;
    trace.spec = spec;
    trace.start = start;
    trace.times = sample_times(horizon, dt);
    const std::size_t count = trace.times.size();
    trace.p_left.resize(count);
    trace.p_conn.resize(count);
    trace.p_right.resize(count);
    trace.p_side.resize(count);

    const WalkState psi0 = WalkState::basis(spec.dim(), start);
    const auto overlaps = project(dec, psi0);
    const int l = spec.attach;
    for (std::size_t i = 0; i < count; ++i) {
        const WalkState psi = trace.times[i] == 0.0 ? psi0 : evolve_projected(dec, overlaps, trace.times[i]);
        double left = 0.0, right = 0.0, side = 0.0;
        for (int site = 1; site < l; ++site) left += std::norm(psi[site - 1]);
        for (int site = l + 1; site <= spec.main_len; ++site) right += std::norm(psi[site - 1]);
        for (int site = spec.main_len + 1; site <= spec.dim(); ++site) side += std::norm(psi[site - 1]);
        trace.p_left[i] = left;
        trace.p_conn[i] = std::norm(psi[l - 1]);
        trace.p_right[i] = right;
        trace.p_side[i] = side;
    }
    return trace;
}

ProbabilityTrace propagate_trace(const TripleGraphSpec& spec, int start, double horizon, double dt) {
    validate_spec(spec);
    (void)region_of(spec, start);
    (void)sample_times(horizon, dt);
    return propagate_trace(spec, symmetric_eig(build_hamiltonian(spec)), start, horizon, dt);
}

Side initial_side(const TripleGraphSpec& spec, int start) {
    switch (region_of(spec, start)) {
        case Region::left: return Side::left;
        case Region::right: return Side::right;
        case Region::connection:
            throw Error(ErrorCode::invalid_argument, "start site is the connection site; no initial side");
        case Region::side: break;
    }
    throw Error(ErrorCode::invalid_argument, "start site is on the side chain; no initial side");
}

SwitchingVerdict detect_switching(const ProbabilityTrace& trace, Side initial, double threshold) {
    const auto& spec = trace.spec;
    const bool opposite_empty = initial == Side::left ? spec.attach == spec.main_len : spec.attach == 1;
    if (opposite_empty) {
        std::ostringstream msg;
        msg << "opposite part is empty (l=" << spec.attach << ", N=" << spec.main_len << ")";
        throw Error(ErrorCode::degenerate_partition, msg.str());
    }
    if (trace.size() == 0) throw Error(ErrorCode::invalid_argument, "empty trace");
    const auto& opposite = initial == Side::left ? trace.p_right : trace.p_left;

    SwitchingVerdict v;
    v.max_opposite = *std::max_element(opposite.begin(), opposite.end());
    v.threshold = threshold;
    v.horizon = trace.times.back();
    v.samples = trace.size();
    v.switching = v.max_opposite < threshold;
    return v;
}

double side_chain_leakage_max(const TripleGraphSpec& spec, int start, double horizon, double dt) {
    validate_spec(spec);
    const Region r = region_of(spec, start);
    if (r == Region::connection) throw Error(ErrorCode::invalid_argument, "start must not be the connection site");
    if (r == Region::side) throw Error(ErrorCode::invalid_argument, "start must be on the main chain");
    if (spec.side_len == 0) {
        (void)sample_times(horizon, dt);
        return 0.0;
    }
    const auto trace = propagate_trace(spec, start, horizon, dt);
    return *std::max_element(trace.p_side.begin(), trace.p_side.end());
}

}  // namespace triplewalk
