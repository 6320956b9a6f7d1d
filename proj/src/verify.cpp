// Copyright 2026 The triplewalk Authors
// SPDX-License-Identifier: Apache-2.0

#include "triplewalk/verify.hpp"

#include "triplewalk/dynamics.hpp"
#include "triplewalk/linalg.hpp"
#include "triplewalk/model.hpp"
#include "triplewalk/spectral.hpp"
#include "triplewalk/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <vector>

namespace triplewalk::verify {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

template <class... Args>
std::string format(Args&&... args) {
    std::ostringstream os;
    os.precision(6);
    (os << ... << args);
    return os.str();
}

double max_of(const std::vector<double>& v) { return *std::max_element(v.begin(), v.end()); }

double nearest_distance(const std::vector<double>& values, double x) {
    double best = std::numeric_limits<double>::infinity();
    for (double v : values) best = std::min(best, std::abs(v - x));
    return best;
}

/// Random valid spec with N <= 16, S <= 4, J <= 20.
TripleGraphSpec random_spec(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> n_dist(1, 16);
    std::uniform_int_distribution<int> s_dist(0, 4);
    std::uniform_real_distribution<double> j_dist(0.1, 20.0);
    TripleGraphSpec spec;
    spec.main_len = n_dist(rng);
    spec.side_len = s_dist(rng);
    spec.attach = std::uniform_int_distribution<int>(1, spec.main_len)(rng);
    spec.coupling = j_dist(rng);
    return spec;
}

WalkState random_state(std::mt19937_64& rng, int dim) {
    std::normal_distribution<double> g;
    std::vector<cplx> amp(static_cast<std::size_t>(dim));
    double norm = 0.0;
    for (cplx& a : amp) {
        a = cplx(g(rng), g(rng));
        norm += std::norm(a);
    }
    for (cplx& a : amp) a /= std::sqrt(norm);
    return WalkState(std::move(amp));
}

double max_abs_diff(const WalkState& a, const WalkState& b) {
    double worst = 0.0;
    for (int i = 0; i < a.dim(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

// 1
CheckResult spectrum_exactness() {
    const auto t0 = Clock::now();
    double worst = 0.0;
    for (int n = 1; n <= 32; ++n) {
        const auto dec = symmetric_eig(build_hamiltonian({n, 0, 1, 1.0}));
        for (int m = 1; m <= n; ++m) {
            const double expected = -2.0 * std::cos(m * std::numbers::pi / (n + 1));
            worst = std::max(worst, std::abs(dec.values[static_cast<std::size_t>(m - 1)] - expected));
        }
    }
    const double secs = seconds_since(t0);
    return {worst <= 1e-10 && secs < 1.0, format("max |E_num - E_m| = ", worst, " (tol 1e-10), ", secs, " s (< 1 s)")};
}

// 2
CheckResult resolvent_identity() {
    std::mt19937_64 rng(20260101);
    double worst_identity = 0.0;
    double worst_g0 = 0.0;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        const TripleGraphSpec spec = random_spec(rng);
        const Hamiltonian h = build_hamiltonian(spec);
        const auto values = symmetric_eig(h).values;
        const double span = 2.0 + 2.0 * spec.coupling + 1.0;
        cplx z;
        if (trial % 2 == 0) {
            z = cplx((2.0 * unit(rng) - 1.0) * span, 0.1 + unit(rng));
        } else {
            double x;
            do {
                x = (2.0 * unit(rng) - 1.0) * span;
            } while (nearest_distance(values, x) < 0.05);
            z = cplx(x, 0.0);
        }
        const auto g = resolvent(h.matrix(), z);
        const int d = h.dim();
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) {
                cplx sum{};
                for (int k = 0; k < d; ++k) sum += ((r == k ? z : cplx{}) - h.matrix()(r, k)) * g[k][c];
                worst_identity = std::max(worst_identity, std::abs(sum - (r == c ? 1.0 : 0.0)));
            }

        // Bare chain: analytic g0 against the numeric resolvent of H_M.
        const Hamiltonian hm = build_hamiltonian({spec.main_len, 0, spec.attach, 1.0});
        const auto chain = chain_levels(spec.main_len).levels;
        cplx zm = z;
        if (z.imag() == 0.0 && nearest_distance(chain, z.real()) < 0.05) zm = cplx(z.real(), 0.1);
        const cplx numeric = resolvent_element(hm, zm, spec.attach, spec.attach);
        worst_g0 = std::max(worst_g0, std::abs(g0_diag(zm, spec.attach, spec.main_len) - numeric));
    }
    return {worst_identity <= 1e-9 && worst_g0 <= 1e-10,
            format("max |(z-H)G - I| = ", worst_identity, " (tol 1e-9); max |g0_ll - G_M,ll| = ", worst_g0,
                   " (tol 1e-10); 100 samples")};
}

constexpr TripleGraphSpec kFig1Switching{11, 1, 5, 10.0};
constexpr TripleGraphSpec kFig1Crossing{11, 1, 6, 10.0};

// 3a
CheckResult coprime_switching() {
    const auto t0 = Clock::now();
    const auto trace = propagate_trace(kFig1Switching, 3, 100.0, 0.05);
    const double secs = seconds_since(t0);
    const double peak = max_of(trace.p_right);
    return {peak < 0.05 && secs < 1.0, format("l=5: max p_right = ", peak, " (< 0.05), ", secs, " s")};
}

// 3b
CheckResult commensurate_crossing() {
    const auto t0 = Clock::now();
    const auto trace = propagate_trace(kFig1Crossing, 3, 100.0, 0.05);
    const double secs = seconds_since(t0);
    const double peak = max_of(trace.p_right);
    return {peak > 0.3 && secs < 1.0, format("l=6, horizon 100: max p_right = ", peak, " (> 0.3), ", secs, " s")};
}

// 3b, supplementary
CheckResult commensurate_crossing_long() {
    const double horizon = 10.0 * kFig1Crossing.coupling * kFig1Crossing.coupling;
    const auto trace = propagate_trace(kFig1Crossing, 3, horizon, 0.05);
    const double peak = max_of(trace.p_right);
    return {peak > 0.3, format("l=6, horizon ", horizon, ": max p_right = ", peak, " (> 0.3)")};
}

CheckResult verdict_check(const TripleGraphSpec& spec, bool expected) {
    const auto trace = propagate_trace(spec, 3, kDefaultHorizon, kDefaultTimeStep);
    const auto v = detect_switching(trace, Side::left, kDefaultThreshold);
    return {v.switching == expected, format("S=", spec.side_len, " l=", spec.attach, ": max p_right = ", v.max_opposite,
                                            ", switching=", v.switching ? "true" : "false", " (expected ",
                                            expected ? "true" : "false", ")")};
}

CheckResult combine(std::initializer_list<CheckResult> parts) {
    CheckResult out{true, {}};
    for (const auto& p : parts) {
        out.passed = out.passed && p.passed;
        if (!out.detail.empty()) out.detail += "; ";
        out.detail += p.detail;
    }
    return out;
}

// 4
CheckResult even_side_crossing() {
    return combine({verdict_check({11, 2, 5, 10.0}, false), verdict_check({11, 2, 6, 10.0}, false)});
}

// 5
CheckResult side_parity() {
    return combine({verdict_check({11, 3, 5, 10.0}, true), verdict_check({11, 4, 5, 10.0}, false)});
}

// 6
CheckResult remaining_embedding() {
    const std::vector<double> expected{-std::sqrt(3.0), -1.0, 0.0, 1.0, std::sqrt(3.0)};
    double worst = 0.0;
    const auto predicted = remaining_levels(11, 6);
    double predicted_err = predicted.size() == expected.size() ? 0.0 : 1.0;
    for (std::size_t i = 0; i < std::min(predicted.size(), expected.size()); ++i)
        predicted_err = std::max(predicted_err, std::abs(predicted[i] - expected[i]));
    for (double j : {5.0, 10.0, 20.0}) {
        const auto values = symmetric_eig(build_hamiltonian({11, 1, 6, j})).values;
        for (double e : expected) worst = std::max(worst, nearest_distance(values, e));
    }
    return {worst <= 1e-9 && predicted_err <= 1e-12,
            format("max distance of {-sqrt3,-1,0,1,sqrt3} to spectrum over J in {5,10,20} = ", worst, " (tol 1e-9)")};
}

struct LargeJDeviation {
    double inner = 0.0;  ///< worst distance to the sub-chain predictions
    double outer = 0.0;  ///< worst distance of the extreme pair to -/+J
};

LargeJDeviation large_j_deviation(double j) {
    const auto values = symmetric_eig(build_hamiltonian({11, 1, 5, j})).values;
    const auto predicted = shifted_levels_large_j(11, 5);
    LargeJDeviation d;
    d.outer = std::max(std::abs(values.front() + j), std::abs(values.back() - j));
    for (std::size_t i = 1; i + 1 < values.size(); ++i) d.inner = std::max(d.inner, nearest_distance(predicted, values[i]));
    return d;
}

// 7
CheckResult large_j_levels() {
    const auto d10 = large_j_deviation(10.0);
    const auto d20 = large_j_deviation(20.0);
    const double shrink = d10.inner / d20.inner;
    return {d10.inner <= 0.05 && d10.outer <= 0.11 && shrink >= 3.0,
            format("J=10: inner dev ", d10.inner, " (<= 0.05), |E_ext -/+ J| ", d10.outer, " (<= 0.11); J=20 inner dev ",
                   d20.inner, ", shrink x", shrink, " (>= 3)")};
}

// 8
CheckResult delta_shift_check() {
    const TripleGraphSpec spec{11, 1, 5, 10.0};
    const auto roots = find_roots(spec, RootMode::large_j).roots;
    const auto values = symmetric_eig(build_hamiltonian(spec)).values;
    double worst = 0.0;
    int used = 0;
    for (double z0 : roots) {
        if (std::abs(z0) < 1e-12) continue;
        const double delta = delta_shift(z0, spec);
        double nearest = values.front();
        for (double v : values)
            if (std::abs(v - z0) < std::abs(nearest - z0)) nearest = v;
        worst = std::max(worst, std::abs(nearest - (z0 + delta)) / std::abs(delta));
        ++used;
    }
    return {used == 10 && worst <= 0.2,
            format(used, " nonzero roots; max |E - (z0+Delta)| / |Delta| = ", worst, " (<= 0.2)")};
}

// 9
CheckResult side_leakage() {
    const double at10 = side_chain_leakage_max({11, 1, 5, 10.0}, 3);
    const double at20 = side_chain_leakage_max({11, 1, 5, 20.0}, 3);
    const double ratio = at20 / at10;
    return {at10 < 0.05 && ratio < 0.3,
            format("max p_side J=10: ", at10, " (< 0.05), J=20: ", at20, ", ratio ", ratio, " (< 0.3)")};
}

// 10
CheckResult perturbative_amplitude_check() {
    const TripleGraphSpec spec{11, 1, 6, 10.0};
    const auto dec = symmetric_eig(build_hamiltonian(spec));
    const auto overlaps = project(dec, WalkState::basis(spec.dim(), 3));
    double worst = 0.0;
    for (double t : sample_times(20.0, 0.05)) {
        const double exact = evolve_projected(dec, overlaps, t).probability(8);
        const double approx = std::norm(perturbative_amplitude(8, 3, t, spec));
        worst = std::max(worst, std::abs(exact - approx));
    }
    return {worst <= 0.02, format("max ||A_pert|^2 - |<8|psi(t)>|^2| on [0,20] = ", worst, " (<= 0.02)")};
}

// 11
CheckResult lambda_s_check() {
    auto oracle = [](int s) {
        long double sum = 0.0L;
        for (int n = 1; n <= s; ++n) {
            const long double t = std::tan(static_cast<long double>(n) * std::numbers::pi_v<long double> / (s + 1));
            sum += t * t;
        }
        return static_cast<double>(sum / (2.0L * (s + 1)));
    };
    const double o2 = oracle(2), o4 = oracle(4);
    const double worst = std::max({std::abs(o2 - 1.0), std::abs(o4 - 2.0), std::abs(lambda_s(2) - o2),
                                   std::abs(lambda_s(4) - o4)});
    return {worst <= 1e-12, format("oracle lambda_2=", o2, " lambda_4=", o4, "; max deviation ", worst, " (tol 1e-12)")};
}

// 12: invariant suite on randomized specs.
constexpr int kInvariantSamples = 40;

CheckResult unitarity() {
    std::mt19937_64 rng(12001);
    double worst = 0.0;
    for (int i = 0; i < kInvariantSamples; ++i) {
        const auto spec = random_spec(rng);
        const auto dec = symmetric_eig(build_hamiltonian(spec));
        const auto psi = random_state(rng, spec.dim());
        for (double t : {0.3, 7.0, 55.0, 100.0}) worst = std::max(worst, std::abs(evolve(dec, psi, t).norm() - 1.0));
    }
    return {worst <= 1e-10, format("max | ||psi(t)|| - 1 | = ", worst, " (tol 1e-10)")};
}

CheckResult energy_conservation() {
    std::mt19937_64 rng(12002);
    double worst = 0.0;
    for (int i = 0; i < kInvariantSamples; ++i) {
        const auto spec = random_spec(rng);
        const auto h = build_hamiltonian(spec);
        const auto dec = symmetric_eig(h);
        const auto psi = random_state(rng, spec.dim());
        const double e0 = energy(h.matrix(), psi);
        for (double t : {0.5, 9.0, 80.0}) worst = std::max(worst, std::abs(energy(h.matrix(), evolve(dec, psi, t)) - e0));
    }
    return {worst <= 1e-9, format("max |<H>(t) - <H>(0)| = ", worst, " (tol 1e-9)")};
}

CheckResult reversibility() {
    std::mt19937_64 rng(12003);
    double worst = 0.0;
    for (int i = 0; i < kInvariantSamples; ++i) {
        const auto spec = random_spec(rng);
        const auto dec = symmetric_eig(build_hamiltonian(spec));
        const auto psi = random_state(rng, spec.dim());
        for (double t : {1.0, 33.0, 100.0}) worst = std::max(worst, max_abs_diff(evolve(dec, evolve(dec, psi, t), -t), psi));
    }
    return {worst <= 1e-9, format("max |psi - U(-t)U(t)psi| = ", worst, " (tol 1e-9)")};
}

CheckResult oracle_equivalence() {
    std::mt19937_64 rng(12004);
    double worst = 0.0;
    for (int i = 0; i < kInvariantSamples; ++i) {
        const auto spec = random_spec(rng);
        const auto h = build_hamiltonian(spec);
        const auto dec = symmetric_eig(h);
        const auto psi = random_state(rng, spec.dim());
        for (double t : {0.7, 12.0, 100.0})
            worst = std::max(worst, max_abs_diff(evolve(dec, psi, t), matexp_oracle(h.matrix(), psi, t)));
    }
    return {worst <= 1e-8, format("max |evolve - matexp| = ", worst, " (tol 1e-8)")};
}

CheckResult trace_normalization() {
    std::mt19937_64 rng(12005);
    double worst = 0.0;
    double out_of_range = 0.0;
    for (int i = 0; i < kInvariantSamples; ++i) {
        const auto spec = random_spec(rng);
        const int start = std::uniform_int_distribution<int>(1, spec.dim())(rng);
        const auto trace = propagate_trace(spec, start, 20.0, 0.1);
        for (std::size_t k = 0; k < trace.size(); ++k) {
            const double total = trace.p_left[k] + trace.p_conn[k] + trace.p_right[k] + trace.p_side[k];
            worst = std::max(worst, std::abs(total - 1.0));
            for (double p : {trace.p_left[k], trace.p_conn[k], trace.p_right[k], trace.p_side[k]})
                out_of_range = std::max({out_of_range, -p - 1e-12, p - 1.0 - 1e-12});
        }
    }
    return {worst <= 1e-9 && out_of_range <= 0.0,
            format("max |sum of regions - 1| = ", worst, " (tol 1e-9); entries within [-1e-12, 1+1e-12]: ",
                   out_of_range <= 0.0 ? "yes" : "no")};
}

// 13
CheckResult sweep_law() {
    const auto t0 = Clock::now();
    SweepGrid grid;  // N=11, l=2..10, S=1..4, J=10, start 1, horizon 10 J^2
    const auto records = run_sweep(grid);
    const double secs = seconds_since(t0);
    int mismatches = 0;
    std::string boundary;
    for (const auto& r : records) {
        if (!r.verdict) {
            ++mismatches;
            continue;
        }
        const bool boundary_point = r.gcd.gcd_value == 2 && r.parity == Parity::odd;
        if (boundary_point) {
            boundary += format(boundary.empty() ? "" : ", ", "(l=", r.spec.attach, ",S=", r.spec.side_len, ")=",
                               r.verdict->switching ? "switch" : "cross");
            continue;
        }
        if (!r.agreement) ++mismatches;
    }
    return {mismatches == 0 && secs < 30.0,
            format(records.size(), " points, ", mismatches, " disagree with the parity/gcd law; gcd=2 boundary: ",
                   boundary, "; ", secs, " s (< 30 s)")};
}

std::vector<Check> make_checks() {
    std::vector<Check> c;
    c.push_back({"spectrum_exactness", "1", "S=0 spectra match -2cos(m pi/(N+1)) for N=1..32", false, spectrum_exactness});
    c.push_back({"resolvent_identity", "2", "(zI-H)G=I and analytic g0 vs numeric resolvent", false, resolvent_identity});
    c.push_back({"coprime_switching", "3a", "N=11,l=5,S=1,J=10: right part stays empty", false, coprime_switching});
    c.push_back({"commensurate_crossing", "3b", "N=11,l=6,S=1,J=10: right part reached by t=100", false, commensurate_crossing});
    c.push_back({"commensurate_crossing_long", "3b*", "as 3b at horizon 10 J^2", true, commensurate_crossing_long});
    c.push_back({"even_side_crossing", "4", "S=2 crosses for l=5 and l=6", false, even_side_crossing});
    c.push_back({"side_parity", "5", "l=5: S=3 switches, S=4 crosses", false, side_parity});
    c.push_back({"remaining_embedding", "6", "remaining levels survive for l=6", false, remaining_embedding});
    c.push_back({"large_j_levels", "7", "large-J sub-chain levels and the +/-J pair", false, large_j_levels});
    c.push_back({"delta_shift", "8", "z0 + Delta(z0) predicts the exact levels", false, delta_shift_check});
    c.push_back({"side_leakage", "9", "side-chain leakage O(1/J^2)", false, side_leakage});
    c.push_back({"perturbative_amplitude", "10", "crossing amplitude vs exact evolution", false,
                 perturbative_amplitude_check});
    c.push_back({"lambda_s", "11", "lambda_2 = 1, lambda_4 = 2", false, lambda_s_check});
    c.push_back({"unitarity", "12", "norm preserved by evolve", false, unitarity});
    c.push_back({"energy_conservation", "12", "<H> constant in time", false, energy_conservation});
    c.push_back({"reversibility", "12", "U(-t)U(t) = 1", false, reversibility});
    c.push_back({"oracle_equivalence", "12", "evolve agrees with matexp_oracle", false, oracle_equivalence});
    c.push_back({"trace_normalization", "12", "region probabilities sum to one", false, trace_normalization});
    c.push_back({"sweep_law", "13", "parity/gcd switching law on N=11, l=2..10, S=1..4", false, sweep_law});
    return c;
}

}  // namespace

std::span<const Check> checks() {
    static const std::vector<Check> registry = make_checks();
    return registry;
}

const Check* find(const std::string& name) {
    for (const Check& c : checks())
        if (c.name == name) return &c;
    return nullptr;
}

CheckResult run(const Check& check) {
    const auto t0 = Clock::now();
    CheckResult result;
    try {
        result = check.run();
    } catch (const std::exception& e) {
        result.passed = false;
        result.detail = std::string("exception: ") + e.what();
    }
    result.seconds = seconds_since(t0);
    return result;
}

}  // namespace triplewalk::verify
