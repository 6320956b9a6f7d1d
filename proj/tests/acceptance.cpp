// Copyright 2026 The triplewalk Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance suite: runs every registered criterion check and prints one
// PASS/FAIL line per check. Exit status is nonzero if any check fails.

#include "triplewalk/verify.hpp"

#include <cstdio>
#include <string>

int main(int argc, char** argv) {
    using namespace triplewalk;
    const std::string only = argc > 1 ? argv[1] : "";
    int failed = 0;
    int ran = 0;
    for (const auto& check : verify::checks()) {
        if (!only.empty() && check.name != only) continue;
        const auto r = verify::run(check);
        ++ran;
        if (!r.passed) ++failed;
        std::printf("[%s] criterion %-4s %-24s %s (%.3f s)\n", r.passed ? "PASS" : "FAIL", check.criterion.c_str(),
                    check.name.c_str(), r.detail.c_str(), r.seconds);
    }
    if (ran == 0) {
        std::fprintf(stderr, "unknown check: %s\n", only.c_str());
        return 2;
    }
    std::printf("%d/%d checks passed\n", ran - failed, ran);
    return failed == 0 ? 0 : 1;
}
