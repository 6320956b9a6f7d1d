// Copyright 2026 The triplewalk Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "triplewalk/dynamics.hpp"
#include "triplewalk/error.hpp"
#include "triplewalk/linalg.hpp"
#include "triplewalk/spectral.hpp"

using namespace triplewalk;

namespace {

double peak(const std::vector<double>& v) { return *std::max_element(v.begin(), v.end()); }

}  // namespace

TEST_CASE("sample grid") {
    const auto t = sample_times(1.0, 0.25);
    CHECK(t == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
    CHECK(sample_times(100.0, 0.05).size() == 2001);
    CHECK(sample_times(0.3, 0.1).size() == 4);
    CHECK_THROWS_AS((void)sample_times(0.0, 0.1), Error);
    CHECK_THROWS_AS((void)sample_times(1.0, -0.1), Error);
}

TEST_CASE("trace starts on the initial site and keeps unit mass") {
    const TripleGraphSpec spec{11, 2, 5, 10.0};
    const auto tr = propagate_trace(spec, 3, 20.0, 0.1);
    REQUIRE(tr.size() == 201);
    CHECK(tr.p_left[0] == 1.0);
    CHECK(tr.p_conn[0] == 0.0);
    CHECK(tr.p_right[0] == 0.0);
    CHECK(tr.p_side[0] == 0.0);
    for (std::size_t k = 0; k < tr.size(); ++k)
        CHECK(std::abs(tr.p_left[k] + tr.p_conn[k] + tr.p_right[k] + tr.p_side[k] - 1.0) < 1e-12);
}

TEST_CASE("odd side chain, coprime attachment: walk stays left") {
    const TripleGraphSpec spec{11, 1, 5, 10.0};
    const auto tr = propagate_trace(spec, 3);
    CHECK(peak(tr.p_right) < 0.05);
    const auto v = detect_switching(tr, initial_side(spec, 3));
    CHECK(v.switching);
    CHECK(v.max_opposite < 0.05);
    CHECK(v.samples == 2001);
}

TEST_CASE("l = 6 crosses only on the slow scale") {
    const TripleGraphSpec spec{11, 1, 6, 10.0};
    CHECK(peak(propagate_trace(spec, 3, 100.0, 0.05).p_right) < 0.05);
    CHECK(peak(propagate_trace(spec, 3, 1000.0, 0.05).p_right) > 0.3);
}

TEST_CASE("verdicts for S = 1..4 at l = 5") {
    const double expected_switching[] = {1, 0, 1, 0};
    for (int s = 1; s <= 4; ++s) {
        const TripleGraphSpec spec{11, s, 5, 10.0};
        const auto v = detect_switching(propagate_trace(spec, 3), Side::left);
        CAPTURE(s);
        CHECK(v.switching == static_cast<bool>(expected_switching[s - 1]));
    }
}

TEST_CASE("verdict does not depend on the starting site") {
    for (int start = 1; start <= 4; ++start) {
        const TripleGraphSpec spec{11, 1, 5, 10.0};
        CAPTURE(start);
        CHECK(detect_switching(propagate_trace(spec, start), Side::left).switching);
    }
    const TripleGraphSpec right{11, 1, 5, 10.0};
    CHECK(initial_side(right, 9) == Side::right);
    CHECK(detect_switching(propagate_trace(right, 9), Side::right).switching);
}

TEST_CASE("halving dt leaves the peak unchanged") {
    const TripleGraphSpec spec{11, 2, 5, 10.0};
    const double coarse = detect_switching(propagate_trace(spec, 3, 100.0, 0.05), Side::left).max_opposite;
    const double fine = detect_switching(propagate_trace(spec, 3, 100.0, 0.025), Side::left).max_opposite;
    CHECK(std::abs(coarse - fine) < 0.02);
}

TEST_CASE("shared decomposition gives the same trace") {
    const TripleGraphSpec spec{9, 3, 4, 5.0};
    const auto dec = symmetric_eig(build_hamiltonian(spec));
    const auto a = propagate_trace(spec, 2, 10.0, 0.5);
    const auto b = propagate_trace(spec, dec, 2, 10.0, 0.5);
    CHECK(a.p_right == b.p_right);
    CHECK_THROWS_AS((void)propagate_trace(TripleGraphSpec{9, 2, 4, 5.0}, dec, 2, 10.0, 0.5), Error);
}

TEST_CASE("degenerate and invalid starts") {
    const TripleGraphSpec end{11, 1, 11, 10.0};
    const auto tr = propagate_trace(end, 3, 5.0, 0.5);
    try {
        (void)detect_switching(tr, Side::left);
        FAIL("expected an exception");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::degenerate_partition);
    }
    const TripleGraphSpec spec{11, 1, 5, 10.0};
    CHECK_THROWS_AS((void)initial_side(spec, 5), Error);
    CHECK_THROWS_AS((void)initial_side(spec, 12), Error);
    CHECK_THROWS_AS((void)propagate_trace(spec, 13), Error);
}

TEST_CASE("side-chain leakage is suppressed by J^2") {
    const double j10 = side_chain_leakage_max(TripleGraphSpec{11, 1, 5, 10.0}, 3);
    const double j20 = side_chain_leakage_max(TripleGraphSpec{11, 1, 5, 20.0}, 3);
    CHECK(j10 < 0.02);
    CHECK(j20 < j10 / 4.0 + 0.005);
    CHECK(side_chain_leakage_max(TripleGraphSpec{11, 0, 5, 10.0}, 3) == 0.0);
    CHECK_THROWS_AS((void)side_chain_leakage_max(TripleGraphSpec{11, 1, 5, 10.0}, 5), Error);
}

TEST_CASE("crossing probability follows the perturbative amplitude") {
    const TripleGraphSpec spec{11, 1, 6, 10.0};
    const auto dec = symmetric_eig(build_hamiltonian(spec));
    const auto overlaps = project(dec, WalkState::basis(12, 3));
    for (double t : {100.0, 300.0}) {
        const auto psi = evolve_projected(dec, overlaps, t);
        const double exact = psi.probability(9);
        const double approx = std::norm(perturbative_amplitude(9, 3, t, spec));
        CHECK(std::abs(exact - approx) < 5e-3);
    }
}
