// Copyright 2026 The triplewalk Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file spectral.hpp
 * @brief Closed-form spectral machinery for the triple graph.
 *
 * Open-chain spectra and Green-function sums, the split of main-chain levels
 * into remaining and shifted ones, the large-J and exact level equations, the
 * O(1/J^2) level shift, the perturbative crossing amplitude and the
 * side-chain leakage residue.
 *
 * Main-chain modes are labelled m = 1..N with E_m = -2 cos(m pi / (N+1)).
 * Terms whose weight sin(l m pi / (N+1)) vanishes are detected by integer
 * divisibility, (N+1) | l m, and dropped, so the Green-function diagonal at
 * site l has no pole at a remaining level.
 */

#pragma once

#include "triplewalk/linalg.hpp"
#include "triplewalk/model.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace triplewalk {

/// Green-function sums refuse z closer than this to a pole with nonzero weight.
inline constexpr double kPoleGuard = 1e-8;

/// delta_shift rejects z0 with |<l|g0(z0)|l>| above this.
inline constexpr double kRootTolerance = 1e-6;

struct ChainSpectrum {
    int length = 0;
    std::vector<double> levels;  ///< levels[m-1] = -2 cos(m pi / (length+1)), ascending

    [[nodiscard]] double level(int m) const;
    /// <j|psi_m> = sqrt(2/(length+1)) sin(j m pi / (length+1))
    [[nodiscard]] double amplitude(int j, int m) const;
};

[[nodiscard]] ChainSpectrum chain_levels(int length);

/// <site|g0(z)|site> for the bare N-site chain.
[[nodiscard]] cplx g0_diag(cplx z, int site, int length);

/// <j1|g0(z)|j2> for the bare N-site chain.
[[nodiscard]] cplx g0_element(cplx z, int j1, int j2, int length);

/// <site|g0(z)^2|site> for real z.
[[nodiscard]] double g0_diag_squared(double z, int site, int length);

/// Mode labels m with <l|psi_m> = 0, i.e. (N+1) divides l*m.
[[nodiscard]] std::vector<int> remaining_modes(int length, int site);
[[nodiscard]] std::vector<double> remaining_levels(int length, int site);

/// Sub-chain spectra {-2cos(n pi / l)}_{n<l} U {-2cos(n' pi/(N+1-l))}_{n'<=N-l},
/// sorted, with multiplicity. Requires 2 <= l <= N-1.
[[nodiscard]] std::vector<double> shifted_levels_large_j(int length, int site);

/// Levels shared by the main chain (with weight at l) and the side chain
/// minus its first site. Each coincidence gives an eigenstate with nodes at l
/// and N+1; such a level is a pole of the exact level equation, not a root.
/// Empty for S <= 1.
[[nodiscard]] std::vector<double> coincident_levels(const TripleGraphSpec& spec);

struct LevelClassification {
    std::vector<double> remaining;
    std::vector<double> shifted;                        ///< empty when l is an end site
    std::optional<std::pair<double, double>> detached;  ///< (-J, +J) for odd S
};

[[nodiscard]] LevelClassification classify_levels(const TripleGraphSpec& spec);

/// (1 / (2(S+1))) sum_{n=1..S} tan^2(n pi / (S+1)), S even and positive.
[[nodiscard]] double lambda_s(int side_len);

enum class SideChainWeights {
    exact,    ///< (2/(S+1)) sin^2(n pi/(S+1)), the true end-site resolvent
    uniform,  ///< constant 2/(S+1), kept only to document the difference
};

/// Resolvent of the isolated side chain (hopping J) at its first site.
[[nodiscard]] cplx side_chain_g_diag(cplx z, int side_len, double coupling,
                                     SideChainWeights weights = SideChainWeights::exact);

enum class RootMode {
    exact,    ///< z/J^2 - gs_{S-1}(z) - <l|g0(z)|l>
    large_j,  ///< <l|g0|l> (odd S) or <l|g0|l> + lambda_S / z (even S)
};

[[nodiscard]] const char* to_string(RootMode mode) noexcept;

/// Left-hand side of the level equation selected by mode and the parity of S.
/// For exact mode with S = 1 this is z/J^2 - <l|g0|l>, for S = 2 it is
/// z/J^2 - (1/z + <l|g0|l>).
[[nodiscard]] double level_equation(double z, const TripleGraphSpec& spec, RootMode mode);

struct RootSet {
    std::vector<double> roots;      ///< ascending
    std::vector<double> residuals;  ///< |level_equation(root)|
    std::vector<std::pair<double, double>> inconclusive;
};

/// All real roots of level_equation in (-3-2J, 3+2J), one bracket per
/// interval between consecutive poles, refined by bisection.
[[nodiscard]] RootSet find_roots(const TripleGraphSpec& spec, RootMode mode);

/// Delta(z0) = -z0 / (J^2 <l|g0(z0)^2|l>) at a root of <l|g0|l> = 0.
[[nodiscard]] double delta_shift(double z0, const TripleGraphSpec& spec);

/// Large-J crossing amplitude from j2 to j1 on opposite sides of l (odd S),
/// carried only by the remaining levels; O(1/J^2) remainder dropped.
[[nodiscard]] cplx perturbative_amplitude(int j1, int j2, double t, const TripleGraphSpec& spec);

/// Residue of <j|G1|N+1> at the detached level near z = J for S = 1:
/// -1/2 on j = l, +1/(2J) on the neighbours of l, 0 elsewhere.
[[nodiscard]] double side_leak_residue(int j, const TripleGraphSpec& spec);

}  // namespace triplewalk
