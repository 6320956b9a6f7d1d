// Copyright 2026 The triplewalk Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file sweep.hpp
 * @brief Grid exploration over (N, l, S, J) and the parity / gcd phase table.
 */

#pragma once

#include "triplewalk/dynamics.hpp"
#include "triplewalk/model.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace triplewalk {

struct GcdPredicate {
    int gcd_value = 1;            ///< gcd(N+1, l)
    bool predicate_paper = false; ///< gcd > 2
    bool predicate_weak = false;  ///< gcd > 1
};

[[nodiscard]] GcdPredicate gcd_predicate(int main_len, int attach);

/// Inclusive integer range.
struct IntRange {
    int first = 0;
    int last = 0;

    [[nodiscard]] bool empty() const noexcept { return last < first; }
    friend bool operator==(const IntRange&, const IntRange&) = default;
};

/// horizon <= 0 selects the coupling-scaled horizon max(100, 10 J^2): the
/// crossing time through the remaining levels grows like J^2.
struct SweepGrid {
    IntRange main_len{11, 11};
    IntRange attach{2, 10};
    IntRange side_len{1, 4};
    std::vector<double> couplings{10.0};
    int start = 1;
    double horizon = 0.0;
    double dt = kDefaultTimeStep;
    double threshold = kDefaultThreshold;
    unsigned threads = 0;  ///< 0 = hardware concurrency
};

[[nodiscard]] double effective_horizon(const SweepGrid& grid, double coupling);

/// Throws Error(invalid_argument / out_of_range) naming the offending field.
void validate_grid(const SweepGrid& grid);

/// Grid points in N, l, S, J nesting order (J innermost).
[[nodiscard]] std::vector<TripleGraphSpec> grid_points(const SweepGrid& grid);

enum class Parity { odd, even };

[[nodiscard]] const char* to_string(Parity p) noexcept;

struct SweepRecord {
    TripleGraphSpec spec;
    int start = 1;
    double horizon = 0.0;
    double dt = 0.0;
    GcdPredicate gcd;
    Parity parity = Parity::odd;
    std::optional<SwitchingVerdict> verdict;  ///< empty when the point failed
    std::string error;
    bool agreement = false;  ///< verdict == (S odd && gcd <= 2)
};

/// Expected verdict under the parity / gcd law.
[[nodiscard]] bool law_predicts_switching(const SweepRecord& r) noexcept;

/// Evaluates every grid point; per-point failures land in SweepRecord::error.
/// Output order is grid order regardless of thread scheduling.
[[nodiscard]] std::vector<SweepRecord> run_sweep(const SweepGrid& grid);

struct ParityCell {
    std::size_t count = 0;
    std::size_t switching = 0;
    std::size_t agreeing = 0;
};

/// Cross-tabulation of (parity, gcd > 2) against the verdicts. Cells with no
/// records stay empty rather than zero.
struct ParityTable {
    /// cells[parity][predicate_paper]
    std::array<std::array<std::optional<ParityCell>, 2>, 2> cells{};
    std::size_t total = 0;
    std::size_t evaluated = 0;
    std::size_t failed = 0;
    std::size_t agreeing = 0;
    double agreement_rate = 0.0;  ///< agreeing / evaluated

    [[nodiscard]] const std::optional<ParityCell>& cell(Parity p, bool predicate_paper) const {
        return cells[p == Parity::odd ? 0 : 1][predicate_paper ? 1 : 0];
    }
};

[[nodiscard]] ParityTable classify_parity_effect(std::span<const SweepRecord> records);

}  // namespace triplewalk
