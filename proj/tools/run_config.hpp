// Copyright 2026 The triplewalk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace triplewalk::cli {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Flat key/value run configuration. Keys are the long flag names without the
/// leading dashes; values are kept as the text a flag would carry, so a file
/// entry and a command-line flag are interchangeable.
///
///     # comment
///     n = 11
///     l = 2..10
class RunConfig {
public:
    static std::span<const std::string_view> known_keys();

    void set(const std::string& key, const std::string& value);
    [[nodiscard]] std::optional<std::string> get(const std::string& key) const;
    [[nodiscard]] const std::map<std::string, std::string>& entries() const noexcept { return values_; }

    /// Entries of other replace ours.
    void merge_from(const RunConfig& other);

    friend bool operator==(const RunConfig&, const RunConfig&) = default;

private:
    std::map<std::string, std::string> values_;
};

[[nodiscard]] RunConfig parse_config(std::istream& in);
[[nodiscard]] RunConfig load_config(const std::string& path);
[[nodiscard]] std::string emit_config(const RunConfig& config);

}  // namespace triplewalk::cli
