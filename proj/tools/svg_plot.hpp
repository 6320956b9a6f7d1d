// Copyright 2026 The triplewalk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <string>
#include <vector>

namespace triplewalk::cli {

struct Series {
    std::string label;
    std::string color;
    std::span<const double> y;
};

/// Self-contained SVG line plot of several series against a shared x axis.
[[nodiscard]] std::string render_svg(const std::string& title, const std::string& x_label, const std::string& y_label,
                                     std::span<const double> x, const std::vector<Series>& series);

}  // namespace triplewalk::cli
