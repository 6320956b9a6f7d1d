// Copyright 2026 The triplewalk Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "triplewalk/error.hpp"
#include "triplewalk/linalg.hpp"
#include "triplewalk/model.hpp"
#include "triplewalk/spectral.hpp"

using namespace triplewalk;
using std::numbers::pi;

namespace {

const double kSqrt3 = std::sqrt(3.0);

bool same_multiset(std::vector<double> a, std::vector<double> b, double tol) {
    if (a.size() != b.size()) return false;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > tol) return false;
    return true;
}

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an exception");
    return ErrorCode::invalid_argument;
}

}  // namespace

TEST_CASE("chain levels") {
    const auto c3 = chain_levels(3);
    CHECK(same_multiset(c3.levels, {-std::sqrt(2.0), 0.0, std::sqrt(2.0)}, 1e-15));
    CHECK(chain_levels(1).levels.size() == 1);
    CHECK(std::abs(chain_levels(1).level(1)) < 1e-15);

    const auto c11 = chain_levels(11);
    CHECK(c11.level(6) == doctest::Approx(0.0));
    CHECK(c11.level(4) == doctest::Approx(-1.0));
    CHECK(c11.amplitude(1, 1) == doctest::Approx(std::sqrt(2.0 / 12.0) * std::sin(pi / 12.0)));
    CHECK_THROWS_AS((void)c11.level(12), Error);
    CHECK_THROWS_AS((void)chain_levels(0), Error);
}

TEST_CASE("bare-chain Green function, two sites") {
    CHECK(std::abs(g0_diag(cplx{2.0, 0.0}, 1, 2) - cplx{2.0 / 3.0, 0.0}) < 1e-15);
    CHECK(std::abs(g0_element(cplx{2.0, 0.0}, 1, 2, 2) - cplx{-1.0 / 3.0, 0.0}) < 1e-15);
}

TEST_CASE("bare-chain Green function matches the numeric resolvent") {
    const auto h = build_hamiltonian(TripleGraphSpec{11, 0, 1, 1.0});
    const cplx z{0.3, 0.45};
    for (int a = 1; a <= 11; ++a)
        for (int b = 1; b <= 11; ++b) {
            CHECK(std::abs(g0_element(z, a, b, 11) - resolvent_element(h, z, a, b)) < 1e-12);
            CHECK(std::abs(g0_element(z, a, b, 11) - g0_element(z, b, a, 11)) < 1e-15);
        }
}

TEST_CASE("site-l diagonal is finite at a remaining level") {
    // E = 1 is a level of the 11-chain with a node at site 6
    CHECK(std::isfinite(std::abs(g0_diag(cplx{1.0, 0.0}, 6, 11))));
    CHECK(code_of([] { (void)g0_diag(cplx{1.0, 0.0}, 5, 11); }) == ErrorCode::on_spectrum);
}

TEST_CASE("g0 squared is the derivative") {
    const double z = 0.37, h = 1e-5;
    const double d = (g0_diag(cplx{z + h, 0.0}, 6, 11).real() - g0_diag(cplx{z - h, 0.0}, 6, 11).real()) / (2 * h);
    CHECK(g0_diag_squared(z, 6, 11) == doctest::Approx(-d).epsilon(1e-7));
}

TEST_CASE("remaining levels") {
    CHECK(same_multiset(remaining_levels(11, 6), {-kSqrt3, -1.0, 0.0, 1.0, kSqrt3}, 1e-14));
    CHECK(remaining_modes(11, 6) == std::vector<int>{2, 4, 6, 8, 10});
    CHECK(remaining_levels(11, 5).empty());
    CHECK(remaining_levels(11, 1).empty());
    CHECK(remaining_modes(11, 4) == std::vector<int>{3, 6, 9});
    for (int l = 1; l <= 11; ++l) CHECK(remaining_modes(11, l) == remaining_modes(11, 12 - l));
}

TEST_CASE("remaining levels sit in the exact spectrum for every J and S") {
    for (int s = 0; s <= 3; ++s)
        for (double j : {0.3, 2.0, 10.0}) {
            const auto dec = symmetric_eig(build_hamiltonian(TripleGraphSpec{11, s, 6, j}));
            for (double e : remaining_levels(11, 6)) {
                double best = 1e9;
                for (double v : dec.values) best = std::min(best, std::abs(v - e));
                CHECK(best < 1e-11);
            }
        }
}

TEST_CASE("shifted levels at large J") {
    CHECK(same_multiset(shifted_levels_large_j(3, 2), {0.0, 0.0}, 1e-15));
    const auto s = shifted_levels_large_j(11, 6);
    CHECK(s.size() == 10);
    CHECK(same_multiset(s, {-kSqrt3, -kSqrt3, -1, -1, 0, 0, 1, 1, kSqrt3, kSqrt3}, 1e-14));
    CHECK(code_of([] { (void)shifted_levels_large_j(11, 1); }) == ErrorCode::degenerate_partition);
    CHECK(code_of([] { (void)shifted_levels_large_j(11, 11); }) == ErrorCode::degenerate_partition);
}

TEST_CASE("classification") {
    const auto odd = classify_levels(TripleGraphSpec{11, 1, 6, 10.0});
    REQUIRE(odd.detached);
    CHECK(odd.detached->first == -10.0);
    CHECK(odd.detached->second == 10.0);
    CHECK(odd.remaining.size() == 5);
    CHECK(odd.shifted.size() == 10);

    const auto even = classify_levels(TripleGraphSpec{11, 2, 6, 10.0});
    CHECK_FALSE(even.detached);
    CHECK(classify_levels(TripleGraphSpec{11, 1, 1, 10.0}).shifted.empty());
}

TEST_CASE("lambda_S") {
    CHECK(lambda_s(2) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(lambda_s(4) == doctest::Approx(2.0).epsilon(1e-14));
    // closed form S/2 holds beyond the worked cases
    for (int s = 6; s <= 20; s += 2) CHECK(lambda_s(s) == doctest::Approx(s / 2.0).epsilon(1e-12));
    CHECK_THROWS_AS((void)lambda_s(3), Error);
    CHECK_THROWS_AS((void)lambda_s(0), Error);
}

TEST_CASE("side-chain end resolvent") {
    const double j = 3.0;
    const cplx z{1.2, 0.4};
    // two sites with hopping J: z / (z^2 - J^2)
    CHECK(std::abs(side_chain_g_diag(z, 2, j) - z / (z * z - j * j)) < 1e-14);
    CHECK(std::abs(side_chain_g_diag(z, 1, j) - 1.0 / z) < 1e-15);
    CHECK(std::abs(side_chain_g_diag(z, 2, j, SideChainWeights::uniform) - z / (z * z - j * j)) > 1e-3);

    Matrix h(4, 4);
    for (int i = 0; i < 3; ++i) h(i, i + 1) = h(i + 1, i) = -j;
    CHECK(std::abs(side_chain_g_diag(z, 4, j) - resolvent_element(h, z, 1, 1)) < 1e-13);
}

TEST_CASE("exact level equation for S = 1 and S = 2") {
    const TripleGraphSpec s1{11, 1, 5, 10.0};
    const double z = 0.3;
    CHECK(level_equation(z, s1, RootMode::exact) == doctest::Approx(z / 100.0 - g0_diag(cplx{z, 0.0}, 5, 11).real()));
    const TripleGraphSpec s2{11, 2, 5, 10.0};
    CHECK(level_equation(z, s2, RootMode::exact) ==
          doctest::Approx(z / 100.0 - (1.0 / z + g0_diag(cplx{z, 0.0}, 5, 11).real())));
    CHECK(level_equation(z, s2, RootMode::large_j) ==
          doctest::Approx(g0_diag(cplx{z, 0.0}, 5, 11).real() + 1.0 / z));
    CHECK(std::string(to_string(RootMode::large_j)) == "large_j");
}

TEST_CASE("exact roots reproduce the spectrum together with the remaining levels") {
    for (int s = 1; s <= 4; ++s)
        for (int l : {2, 5, 6}) {
            const TripleGraphSpec spec{11, s, l, 10.0};
            const auto roots = find_roots(spec, RootMode::exact);
            CHECK(roots.inconclusive.empty());
            const auto rem = remaining_levels(11, l);
            const auto shared = coincident_levels(spec);
            CHECK(roots.roots.size() == static_cast<std::size_t>(11 + s) - rem.size() - shared.size());
            auto all = roots.roots;
            all.insert(all.end(), rem.begin(), rem.end());
            all.insert(all.end(), shared.begin(), shared.end());
            CHECK(same_multiset(all, symmetric_eig(build_hamiltonian(spec)).values, 1e-9));
        }
}

TEST_CASE("coincident levels") {
    // even S: the (S-1)-site remainder of the side chain has a zero mode, as
    // does the 11-chain with weight at odd l
    CHECK(coincident_levels(TripleGraphSpec{11, 2, 5, 10.0}) == std::vector<double>{chain_levels(11).level(6)});
    CHECK(coincident_levels(TripleGraphSpec{11, 4, 5, 10.0}).size() == 1);
    // l = 6 puts a node on the zero mode, and l = 5 with odd S has no side zero mode
    CHECK(coincident_levels(TripleGraphSpec{11, 2, 6, 10.0}).empty());
    CHECK(coincident_levels(TripleGraphSpec{11, 3, 5, 10.0}).empty());
    CHECK(coincident_levels(TripleGraphSpec{11, 1, 5, 10.0}).empty());
    // J = 1, S = 3: side remainder levels +-1 meet the chain levels +-1 at l = 5
    const TripleGraphSpec spec{11, 3, 5, 1.0};
    const auto shared = coincident_levels(spec);
    REQUIRE(shared.size() == 2);
    CHECK(shared[0] == doctest::Approx(-1.0));
    CHECK(shared[1] == doctest::Approx(1.0));
    const auto dec = symmetric_eig(build_hamiltonian(spec));
    auto all = find_roots(spec, RootMode::exact).roots;
    all.insert(all.end(), shared.begin(), shared.end());
    CHECK(same_multiset(all, dec.values, 1e-9));
}

TEST_CASE("large-J roots") {
    // odd S: roots of <l|g0|l>, which with the remaining levels give the sub-chain spectra
    for (int l : {5, 6, 3}) {
        const auto roots = find_roots(TripleGraphSpec{11, 1, l, 10.0}, RootMode::large_j);
        auto all = roots.roots;
        const auto rem = remaining_levels(11, l);
        all.insert(all.end(), rem.begin(), rem.end());
        CHECK(same_multiset(all, shifted_levels_large_j(11, l), 1e-9));
    }
    // even S: lambda_S / z pushes the roots off the sub-chain spectra
    const auto even = find_roots(TripleGraphSpec{11, 2, 5, 10.0}, RootMode::large_j);
    CHECK(even.roots.size() == 10);
    CHECK_FALSE(same_multiset(even.roots, shifted_levels_large_j(11, 5), 1e-3));
    for (double r : even.roots) {
        CHECK(std::abs(r) > 0.5);
        for (double e : chain_levels(11).levels) CHECK(std::abs(r - e) > 1e-3);
    }
    const auto no_s = TripleGraphSpec{11, 0, 5, 10.0};
    CHECK(code_of([&] { (void)find_roots(no_s, RootMode::exact); }) == ErrorCode::invalid_argument);
}

TEST_CASE("level shift") {
    const TripleGraphSpec j10{11, 1, 6, 10.0};
    const TripleGraphSpec j20{11, 1, 6, 20.0};
    CHECK(delta_shift(1.0, j10) == doctest::Approx(-0.005).epsilon(1e-9));
    CHECK(delta_shift(-1.0, j10) == doctest::Approx(0.005).epsilon(1e-9));
    CHECK(delta_shift(1.0, j20) == doctest::Approx(delta_shift(1.0, j10) / 4.0));
    CHECK(code_of([&] { (void)delta_shift(0.5, j10); }) == ErrorCode::not_a_root);

    // against the exact level near E = 1
    const auto exact = find_roots(j10, RootMode::exact).roots;
    double nearest = 1e9;
    for (double r : exact)
        if (std::abs(r - 1.0) < std::abs(nearest - 1.0)) nearest = r;
    CHECK(std::abs((nearest - 1.0) - delta_shift(1.0, j10)) < 2e-4);
}

TEST_CASE("perturbative crossing amplitude") {
    const TripleGraphSpec spec{11, 1, 6, 10.0};
    CHECK(std::abs(perturbative_amplitude(9, 3, 0.0, spec)) < 1e-15);
    CHECK(std::abs(perturbative_amplitude(9, 3, 200.0, TripleGraphSpec{11, 1, 5, 10.0})) == 0.0);

    const auto h = build_hamiltonian(spec);
    const auto dec = symmetric_eig(h);
    // the closed form carries the opposite overall sign to <9|psi(t)>
    for (double t : {50.0, 150.0, 400.0}) {
        const auto psi = evolve(dec, WalkState::basis(12, 3), t);
        const cplx a = perturbative_amplitude(9, 3, t, spec);
        CHECK(std::abs(a + psi[8]) < 5e-3);
        CHECK(std::abs(std::norm(a) - psi.probability(9)) < 5e-3);
    }
    CHECK(code_of([&] { (void)perturbative_amplitude(2, 3, 1.0, spec); }) == ErrorCode::invalid_argument);
    CHECK(code_of([&] { (void)perturbative_amplitude(9, 6, 1.0, spec); }) == ErrorCode::invalid_argument);
    CHECK(code_of([] { (void)perturbative_amplitude(9, 3, 1.0, TripleGraphSpec{11, 2, 6, 10.0}); }) ==
          ErrorCode::invalid_argument);
}

TEST_CASE("side leakage residue") {
    const TripleGraphSpec spec{11, 1, 6, 10.0};
    CHECK(side_leak_residue(6, spec) == -0.5);
    CHECK(side_leak_residue(5, spec) == doctest::Approx(0.05));
    CHECK(side_leak_residue(7, spec) == doctest::Approx(0.05));
    CHECK(side_leak_residue(3, spec) == 0.0);
    CHECK_THROWS_AS((void)side_leak_residue(3, TripleGraphSpec{11, 2, 6, 10.0}), Error);
}
