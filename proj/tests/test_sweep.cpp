// Copyright 2026 The triplewalk Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "triplewalk/error.hpp"
#include "triplewalk/sweep.hpp"

using namespace triplewalk;

namespace {

SweepGrid small_grid() {
    SweepGrid g;
    g.main_len = {11, 11};
    g.attach = {5, 6};
    g.side_len = {1, 4};
    g.couplings = {10.0};
    g.threads = 3;
    return g;
}

}  // namespace

TEST_CASE("gcd predicate") {
    CHECK(gcd_predicate(11, 5).gcd_value == 1);
    CHECK_FALSE(gcd_predicate(11, 5).predicate_paper);
    CHECK(gcd_predicate(11, 6).gcd_value == 6);
    CHECK(gcd_predicate(11, 6).predicate_paper);
    CHECK(gcd_predicate(11, 2).gcd_value == 2);
    CHECK_FALSE(gcd_predicate(11, 2).predicate_paper);
    CHECK(gcd_predicate(11, 2).predicate_weak);
    CHECK(gcd_predicate(11, 4).gcd_value == 4);
    CHECK_THROWS_AS((void)gcd_predicate(11, 12), Error);
}

TEST_CASE("grid points and horizon") {
    const auto g = small_grid();
    const auto pts = grid_points(g);
    REQUIRE(pts.size() == 8);
    CHECK(pts[0] == TripleGraphSpec{11, 1, 5, 10.0});
    CHECK(pts[7] == TripleGraphSpec{11, 4, 6, 10.0});
    CHECK(effective_horizon(g, 10.0) == 1000.0);
    CHECK(effective_horizon(g, 2.0) == 100.0);
    auto fixed = g;
    fixed.horizon = 50.0;
    CHECK(effective_horizon(fixed, 10.0) == 50.0);
}

TEST_CASE("grid validation") {
    auto g = small_grid();
    g.attach = {7, 3};
    CHECK_THROWS_AS(validate_grid(g), Error);
    g = small_grid();
    g.couplings.clear();
    CHECK_THROWS_AS(validate_grid(g), Error);
    g = small_grid();
    g.attach = {5, 12};
    CHECK_THROWS_AS(validate_grid(g), Error);
    g = small_grid();
    g.dt = 0.0;
    CHECK_THROWS_AS(validate_grid(g), Error);
}

TEST_CASE("sweep over l = 5, 6 and S = 1..4") {
    const auto records = run_sweep(small_grid());
    REQUIRE(records.size() == 8);
    for (const auto& r : records) {
        REQUIRE(r.verdict);
        CHECK(r.error.empty());
        const bool expected = r.spec.attach == 5 && r.spec.side_len % 2 == 1;
        CAPTURE(r.spec.attach);
        CAPTURE(r.spec.side_len);
        CHECK(r.verdict->switching == expected);
        CHECK(r.agreement);
        CHECK(law_predicts_switching(r) == expected);
    }

    const auto table = classify_parity_effect(records);
    CHECK(table.total == 8);
    CHECK(table.evaluated == 8);
    CHECK(table.failed == 0);
    CHECK(table.agreement_rate == 1.0);
    const auto& odd_coprime = table.cell(Parity::odd, false);
    REQUIRE(odd_coprime);
    CHECK(odd_coprime->count == 2);
    CHECK(odd_coprime->switching == 2);
    REQUIRE(table.cell(Parity::even, true));
    CHECK(table.cell(Parity::even, true)->switching == 0);
}

TEST_CASE("sweep is deterministic across thread counts") {
    auto one = small_grid();
    one.threads = 1;
    one.horizon = 60.0;
    auto many = one;
    many.threads = 8;
    const auto a = run_sweep(one);
    const auto b = run_sweep(many);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].spec == b[i].spec);
        CHECK(a[i].verdict->max_opposite == b[i].verdict->max_opposite);
    }
}

TEST_CASE("mirror attachment gives the mirrored verdict") {
    SweepGrid g;
    g.main_len = {11, 11};
    g.attach = {3, 3};
    g.side_len = {1, 2};
    g.horizon = 100.0;
    g.start = 1;
    auto m = g;
    m.attach = {9, 9};
    m.start = 11;
    const auto a = run_sweep(g);
    const auto b = run_sweep(m);
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(a[i].verdict->max_opposite == doctest::Approx(b[i].verdict->max_opposite).epsilon(1e-8));
}

TEST_CASE("cells without records stay empty") {
    SweepGrid g;
    g.main_len = {11, 11};
    g.attach = {5, 5};
    g.side_len = {2, 4};
    g.horizon = 100.0;
    const auto records = run_sweep(g);
    const auto table = classify_parity_effect(records);
    CHECK_FALSE(table.cell(Parity::odd, true));
    CHECK_FALSE(table.cell(Parity::even, true));
    REQUIRE(table.cell(Parity::even, false));
    CHECK(table.cell(Parity::even, false)->switching == 0);
    CHECK_THROWS_AS((void)classify_parity_effect({}), Error);
}

TEST_CASE("failed points are recorded, not thrown") {
    SweepGrid g;
    g.main_len = {11, 11};
    g.attach = {1, 1};
    g.side_len = {1, 1};
    g.start = 3;
    g.horizon = 10.0;
    const auto records = run_sweep(g);
    REQUIRE(records.size() == 1);
    CHECK_FALSE(records[0].verdict);
    CHECK_FALSE(records[0].error.empty());
    const auto table = classify_parity_effect(records);
    CHECK(table.failed == 1);
    CHECK(table.evaluated == 0);
}
