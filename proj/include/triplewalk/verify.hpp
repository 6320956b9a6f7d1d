// Copyright 2026 The triplewalk Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file verify.hpp
 * @brief Registry of the end-to-end acceptance checks, shared by the
 *        acceptance test binary and `triplewalk verify`.
 */

#pragma once

#include <functional>
#include <span>
#include <string>

namespace triplewalk::verify {

struct CheckResult {
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

struct Check {
    std::string name;       ///< stable identifier used by --only
    std::string criterion;  ///< acceptance criterion label, e.g. "3a"
    std::string description;
    bool supplementary = false;  ///< informational companion of a criterion
    std::function<CheckResult()> run;
};

[[nodiscard]] std::span<const Check> checks();

/// nullptr when no check has this name.
[[nodiscard]] const Check* find(const std::string& name);

/// Runs a check, timing it and converting exceptions into failures.
[[nodiscard]] CheckResult run(const Check& check);

}  // namespace triplewalk::verify
