// Copyright 2026 The triplewalk Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file dynamics.hpp
 * @brief Walks started on a basis site, region-resolved probability traces
 *        and the switching verdict.
 *
 * Times are in units of the inverse main-chain hopping.
 */

#pragma once

#include "triplewalk/linalg.hpp"
#include "triplewalk/model.hpp"

#include <cstddef>
#include <vector>

namespace triplewalk {

inline constexpr double kDefaultHorizon = 100.0;
inline constexpr double kDefaultTimeStep = 0.05;
inline constexpr double kDefaultThreshold = 0.05;
inline constexpr int kDefaultStart = 3;

struct ProbabilityTrace {
    TripleGraphSpec spec;
    int start = 1;
    std::vector<double> times;
    std::vector<double> p_left;
    std::vector<double> p_conn;
    std::vector<double> p_right;
    std::vector<double> p_side;

    [[nodiscard]] std::size_t size() const noexcept { return times.size(); }
};

enum class Side { left, right };

struct SwitchingVerdict {
    bool switching = false;
    double max_opposite = 0.0;  ///< peak probability in the initially empty part
    double threshold = 0.0;
    double horizon = 0.0;
    std::size_t samples = 0;
};

/// Sample times 0, dt, 2dt, ... up to horizon (inclusive within 1e-9 dt).
[[nodiscard]] std::vector<double> sample_times(double horizon, double dt);

/// Evolves |start> and records the probability in each region at every sample.
[[nodiscard]] ProbabilityTrace propagate_trace(const TripleGraphSpec& spec, int start,
                                               double horizon = kDefaultHorizon, double dt = kDefaultTimeStep);

/// Same, reusing an existing eigendecomposition of build_hamiltonian(spec).
[[nodiscard]] ProbabilityTrace propagate_trace(const TripleGraphSpec& spec, const SpectralDecomposition& dec,
                                               int start, double horizon, double dt);

/// Side containing the trace's start site; throws for the connection or side chain.
[[nodiscard]] Side initial_side(const TripleGraphSpec& spec, int start);

[[nodiscard]] SwitchingVerdict detect_switching(const ProbabilityTrace& trace, Side initial,
                                                double threshold = kDefaultThreshold);

/// Peak side-chain probability for a walk started on the main chain away from l.
[[nodiscard]] double side_chain_leakage_max(const TripleGraphSpec& spec, int start,
                                            double horizon = kDefaultHorizon, double dt = kDefaultTimeStep);

}  // namespace triplewalk
