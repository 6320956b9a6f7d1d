// Copyright 2026 The triplewalk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace triplewalk {

enum class ErrorCode {
    invalid_argument,
    out_of_range,
    on_spectrum,
    no_convergence,
    degenerate_partition,
    dimension_mismatch,
    not_a_root,
};

/// Every failure raised by the core carries one of the codes above; the C API
/// maps them onto tw_status values.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace triplewalk
