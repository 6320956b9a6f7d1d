// Copyright 2026 The triplewalk Authors
// SPDX-License-Identifier: Apache-2.0

#include "run_config.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

namespace triplewalk::cli {

namespace {

constexpr std::array<std::string_view, 13> kKeys{
    "n", "l", "s", "j", "start", "horizon", "dt", "threshold", "out", "plot", "summary", "threads", "only",
};

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

}  // namespace

std::span<const std::string_view> RunConfig::known_keys() { return kKeys; }

void RunConfig::set(const std::string& key, const std::string& value) {
    if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end()) throw ConfigError("unknown config key '" + key + "'");
    if (value.find('\n') != std::string::npos || trim(value) != value)
        throw ConfigError("config value for '" + key + "' has leading/trailing whitespace or a newline");
    values_[key] = value;
}

std::optional<std::string> RunConfig::get(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    return it->second;
}

void RunConfig::merge_from(const RunConfig& other) {
    for (const auto& [k, v] : other.values_) values_[k] = v;
}

RunConfig parse_config(std::istream& in) {
    RunConfig config;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string body = trim(std::string_view(line).substr(0, line.find('#')));
        if (body.empty()) continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) + ": expected 'key = value'");
        std::string key = trim(std::string_view(body).substr(0, eq));
        if (key.starts_with("--")) key = key.substr(2);
        if (trim(std::string_view(body).substr(eq + 1)).empty())
            throw ConfigError("config line " + std::to_string(lineno) + ": empty value for '" + key + "'");
        config.set(key, trim(std::string_view(body).substr(eq + 1)));
    }
    return config;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
    return parse_config(in);
}

std::string emit_config(const RunConfig& config) {
    std::ostringstream os;
    for (const auto& [k, v] : config.entries()) os << k << " = " << v << '\n';
    return os.str();
}

}  // namespace triplewalk::cli
