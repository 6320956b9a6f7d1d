// Copyright 2026 The triplewalk Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "triplewalk/error.hpp"
#include "triplewalk/linalg.hpp"
#include "triplewalk/model.hpp"

using namespace triplewalk;
using std::numbers::pi;

namespace {

Matrix pair_matrix() {
    Matrix h(2, 2);
    h(0, 1) = h(1, 0) = -1.0;
    return h;
}

Matrix random_symmetric(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Matrix m(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) m(a, b) = m(b, a) = u(rng);
    return m;
}

}  // namespace

TEST_CASE("two-site eigenpairs") {
    const auto dec = symmetric_eig(pair_matrix());
    REQUIRE(dec.dim() == 2);
    CHECK(dec.values[0] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(dec.values[1] == doctest::Approx(1.0).epsilon(1e-14));
    // ground state is the symmetric combination
    CHECK(std::abs(dec.vectors(0, 0)) == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(dec.vectors(0, 0) * dec.vectors(1, 0) > 0.0);
}

TEST_CASE("one-site system") {
    const auto h = build_hamiltonian(TripleGraphSpec{1, 0, 1, 1.0});
    const auto dec = symmetric_eig(h);
    REQUIRE(dec.dim() == 1);
    CHECK(dec.values[0] == 0.0);
    CHECK(std::abs(dec.vectors(0, 0)) == 1.0);
    CHECK(resolvent_element(h, cplx{2.5, 0.0}, 1, 1) == cplx{0.4, 0.0});
}

TEST_CASE("open chain of 11 sites") {
    const auto dec = symmetric_eig(build_hamiltonian(TripleGraphSpec{11, 0, 1, 1.0}));
    for (int m = 1; m <= 11; ++m)
        CHECK(std::abs(dec.values[static_cast<std::size_t>(m - 1)] + 2.0 * std::cos(m * pi / 12.0)) < 1e-12);
}

TEST_CASE("eigenvectors are orthonormal and diagonalize") {
    std::mt19937_64 rng(7);
    for (int n : {3, 8, 17}) {
        const auto h = random_symmetric(n, rng);
        const auto dec = symmetric_eig(h);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                double dot = 0.0, hv = 0.0;
                for (int k = 0; k < n; ++k) {
                    dot += dec.vectors(k, a) * dec.vectors(k, b);
                    double row = 0.0;
                    for (int q = 0; q < n; ++q) row += h(k, q) * dec.vectors(q, b);
                    hv += dec.vectors(k, a) * row;
                }
                CHECK(std::abs(dot - (a == b ? 1.0 : 0.0)) < 1e-12);
                CHECK(std::abs(hv - (a == b ? dec.values[static_cast<std::size_t>(a)] : 0.0)) < 1e-11);
            }
        for (int k = 1; k < n; ++k) CHECK(dec.values[static_cast<std::size_t>(k - 1)] <= dec.values[static_cast<std::size_t>(k)]);
    }
}

TEST_CASE("two-site transfer probability is sin^2 t") {
    const auto dec = symmetric_eig(pair_matrix());
    const auto psi0 = WalkState::basis(2, 1);
    for (double t : {0.0, 0.3, 1.0, 2.2, 7.5}) {
        const auto psi = evolve(dec, psi0, t);
        CHECK(psi.probability(2) == doctest::Approx(std::sin(t) * std::sin(t)).epsilon(1e-12));
        CHECK(psi.norm() == doctest::Approx(1.0).epsilon(1e-13));
    }
}

TEST_CASE("evolve at t=0 returns the initial state") {
    const auto h = build_hamiltonian(TripleGraphSpec{7, 2, 3, 4.0});
    const auto psi0 = WalkState::basis(9, 2);
    const auto psi = evolve(symmetric_eig(h), psi0, 0.0);
    for (int i = 0; i < 9; ++i) CHECK(psi[i] == psi0[i]);
}

TEST_CASE("two-site resolvent") {
    const auto h = pair_matrix();
    CHECK(std::abs(resolvent_element(h, cplx{2.0, 0.0}, 1, 1) - cplx{2.0 / 3.0, 0.0}) < 1e-15);
    CHECK(std::abs(resolvent_element(h, cplx{2.0, 0.0}, 1, 2) - cplx{-1.0 / 3.0, 0.0}) < 1e-15);
    const cplx z{0.4, 0.7};
    CHECK(std::abs(resolvent_element(h, z, 2, 2) - z / (z * z - 1.0)) < 1e-14);
}

TEST_CASE("resolvent agrees with the spectral sum") {
    const auto h = build_hamiltonian(TripleGraphSpec{9, 3, 4, 2.5});
    const auto dec = symmetric_eig(h);
    const cplx z{0.37, 0.21};
    const auto g = resolvent(h.matrix(), z);
    for (int a = 0; a < h.dim(); ++a)
        for (int b = 0; b < h.dim(); ++b) {
            cplx sum = 0.0;
            for (int k = 0; k < dec.dim(); ++k)
                sum += dec.vectors(a, k) * dec.vectors(b, k) / (z - dec.values[static_cast<std::size_t>(k)]);
            CHECK(std::abs(g[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] - sum) < 1e-11);
            CHECK(std::abs(resolvent_element(h, z, a + 1, b + 1) - sum) < 1e-11);
        }
}

TEST_CASE("resolvent on the spectrum is rejected") {
    try {
        (void)resolvent_element(pair_matrix(), cplx{1.0, 0.0}, 1, 1);
        FAIL("expected an exception");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::on_spectrum);
    }
}

TEST_CASE("matrix exponential oracle") {
    const auto psi = matexp_oracle(pair_matrix(), WalkState::basis(2, 1), pi / 2.0);
    CHECK(std::abs(psi[0]) < 1e-14);
    CHECK(std::abs(psi[1] - cplx{0.0, 1.0}) < 1e-14);
}

TEST_CASE("eigenbasis and Taylor propagators agree") {
    for (double j : {0.5, 3.0, 20.0}) {
        const auto h = build_hamiltonian(TripleGraphSpec{11, 2, 5, j});
        const auto dec = symmetric_eig(h);
        const auto psi0 = WalkState::basis(13, 3);
        for (double t : {0.1, 4.0, 37.5}) {
            const auto a = evolve(dec, psi0, t);
            const auto b = matexp_oracle(h.matrix(), psi0, t);
            double diff = 0.0;
            for (int i = 0; i < 13; ++i) diff = std::max(diff, std::abs(a[i] - b[i]));
            CHECK(diff < 1e-10);
        }
    }
}

TEST_CASE("energy is conserved") {
    const auto h = build_hamiltonian(TripleGraphSpec{8, 3, 3, 6.0});
    const auto dec = symmetric_eig(h);
    const auto overlaps = project(dec, WalkState::basis(11, 3));
    const double e0 = energy(h.matrix(), evolve_projected(dec, overlaps, 0.0));
    for (double t : {1.0, 10.0, 55.0}) CHECK(std::abs(energy(h.matrix(), evolve_projected(dec, overlaps, t)) - e0) < 1e-12);
}

TEST_CASE("dimension mismatch") {
    const auto dec = symmetric_eig(pair_matrix());
    try {
        (void)evolve(dec, WalkState::basis(3, 1), 1.0);
        FAIL("expected an exception");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::dimension_mismatch);
    }
    CHECK_THROWS_AS((void)matexp_oracle(pair_matrix(), WalkState::basis(3, 1), 1.0), Error);
    CHECK_THROWS_AS((void)WalkState::basis(3, 4), Error);
}
