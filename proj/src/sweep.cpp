// Copyright 2026 The triplewalk Authors
// SPDX-License-Identifier: Apache-2.0

#include "triplewalk/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <sstream>
#include <thread>

namespace triplewalk {

GcdPredicate gcd_predicate(int main_len, int attach) {
    if (main_len < 1 || attach < 1 || attach > main_len)
        throw Error(ErrorCode::out_of_range, "gcd predicate needs 1 <= l <= N");
    GcdPredicate g;
    g.gcd_value = std::gcd(main_len + 1, attach);
    g.predicate_paper = g.gcd_value > 2;
    g.predicate_weak = g.gcd_value > 1;
    return g;
}

double effective_horizon(const SweepGrid& grid, double coupling) {
    if (grid.horizon > 0.0) return grid.horizon;
    return std::max(kDefaultHorizon, 10.0 * coupling * coupling);
}

void validate_grid(const SweepGrid& grid) {
    auto fail = [](const std::string& what) { throw Error(ErrorCode::invalid_argument, what); };
    if (grid.main_len.empty()) fail("empty range for n");
    if (grid.attach.empty()) fail("empty range for l");
    if (grid.side_len.empty()) fail("empty range for s");
    if (grid.couplings.empty()) fail("empty list for j");
    if (!(grid.dt > 0.0)) fail("dt must be positive");
    if (!std::isfinite(grid.horizon)) fail("horizon must be finite");
    if (!(grid.threshold > 0.0)) fail("threshold must be positive");
    for (const TripleGraphSpec& spec : grid_points(grid)) validate_spec(spec);
}

std::vector<TripleGraphSpec> grid_points(const SweepGrid& grid) {
    std::vector<TripleGraphSpec> points;
    for (int n = grid.main_len.first; n <= grid.main_len.last; ++n)
        for (int l = grid.attach.first; l <= grid.attach.last; ++l)
            for (int s = grid.side_len.first; s <= grid.side_len.last; ++s)
                for (double j : grid.couplings) points.push_back({n, s, l, j});
    return points;
}

const char* to_string(Parity p) noexcept { return p == Parity::odd ? "odd" : "even"; }

bool law_predicts_switching(const SweepRecord& r) noexcept {
    return r.parity == Parity::odd && !r.gcd.predicate_paper;
}

namespace {

SweepRecord evaluate_point(const SweepGrid& grid, const TripleGraphSpec& spec) {
    SweepRecord rec;
    rec.spec = spec;
    rec.start = grid.start;
    rec.horizon = effective_horizon(grid, spec.coupling);
    rec.dt = grid.dt;
    rec.gcd = gcd_predicate(spec.main_len, spec.attach);
    rec.parity = spec.side_len % 2 == 1 ? Parity::odd : Parity::even;
    try {
        const Side side = initial_side(spec, grid.start);
        const auto trace = propagate_trace(spec, grid.start, rec.horizon, grid.dt);
        rec.verdict = detect_switching(trace, side, grid.threshold);
        rec.agreement = rec.verdict->switching == law_predicts_switching(rec);
    } catch (const std::exception& e) {
        rec.verdict.reset();
        rec.error = e.what();
        rec.agreement = false;
    }
    return rec;
}

}  // namespace

std::vector<SweepRecord> run_sweep(const SweepGrid& grid) {
    validate_grid(grid);
    const auto points = grid_points(grid);
    std::vector<SweepRecord> records(points.size());

    unsigned workers = grid.threads != 0 ? grid.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, points.size()));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < points.size(); i = next++) records[i] = evaluate_point(grid, points[i]);
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    return records;
}

ParityTable classify_parity_effect(std::span<const SweepRecord> records) {
    if (records.empty()) throw Error(ErrorCode::invalid_argument, "no records to classify");
    ParityTable table;
    for (const SweepRecord& r : records) {
        ++table.total;
        if (!r.verdict) {
            ++table.failed;
            continue;
        }
        ++table.evaluated;
        auto& slot = table.cells[r.parity == Parity::odd ? 0 : 1][r.gcd.predicate_paper ? 1 : 0];
        if (!slot) slot = ParityCell{};
        ++slot->count;
        if (r.verdict->switching) ++slot->switching;
        if (r.agreement) {
            ++slot->agreeing;
            ++table.agreeing;
        }
    }
    table.agreement_rate =
        table.evaluated == 0 ? 0.0 : static_cast<double>(table.agreeing) / static_cast<double>(table.evaluated);
    return table;
}

}  // namespace triplewalk
