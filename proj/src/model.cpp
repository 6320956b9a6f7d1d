// Copyright 2026 The triplewalk Authors
// SPDX-License-Identifier: Apache-2.0

#include "triplewalk/model.hpp"

#include <cmath>
#include <sstream>

namespace triplewalk {

std::optional<std::string> check_spec(const TripleGraphSpec& spec) {
    std::ostringstream msg;
    if (spec.main_len < 1) {
        msg << "main chain length N must be >= 1 (got " << spec.main_len << ")";
        return msg.str();
    }
    if (spec.side_len < 0) {
        msg << "side chain length S must be >= 0 (got " << spec.side_len << ")";
        return msg.str();
    }
    if (spec.attach < 1 || spec.attach > spec.main_len) {
        msg << "attach site l out of range: need 1 <= l <= N=" << spec.main_len << " (got " << spec.attach << ")";
        return msg.str();
    }
    if (!(spec.coupling > 0.0) || !std::isfinite(spec.coupling)) {
        msg << "coupling J must be a positive finite number (got " << spec.coupling << ")";
        return msg.str();
    }
    return std::nullopt;
}

void validate_spec(const TripleGraphSpec& spec) {
    if (auto err = check_spec(spec)) throw Error(ErrorCode::out_of_range, *err);
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

double Hamiltonian::at(int a, int b) const {
    if (a < 1 || a > dim() || b < 1 || b > dim())
        throw Error(ErrorCode::out_of_range, "site index out of range");
    return entries_(a - 1, b - 1);
}

std::vector<std::pair<int, int>> Hamiltonian::bonds() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < dim(); ++a)
        for (int b = a + 1; b < dim(); ++b)
            if (entries_(a, b) != 0.0) out.emplace_back(a + 1, b + 1);
    return out;
}

Hamiltonian build_hamiltonian(const TripleGraphSpec& spec) {
    validate_spec(spec);
    const int n = spec.main_len;
    const int s = spec.side_len;
    const double j = spec.coupling;
    Matrix h(spec.dim(), spec.dim());

    auto bond = [&h](int a, int b, double w) {  // 1-indexed
        h(a - 1, b - 1) = -w;
        h(b - 1, a - 1) = -w;
    };
    for (int site = 1; site < n; ++site) bond(site, site + 1, 1.0);
    for (int site = n + 1; site < n + s; ++site) bond(site, site + 1, j);
    if (s >= 1) bond(spec.attach, n + 1, j);

    return Hamiltonian(spec, std::move(h));
}

const char* to_string(Region r) noexcept {
    switch (r) {
        case Region::left: return "left";
        case Region::connection: return "connection";
        case Region::right: return "right";
        case Region::side: return "side";
    }
    return "?";
}

SitePartition partition(const TripleGraphSpec& spec) {
    validate_spec(spec);
    SitePartition p;
    for (int site = 1; site < spec.attach; ++site) p.left.push_back(site);
    p.connection.push_back(spec.attach);
    for (int site = spec.attach + 1; site <= spec.main_len; ++site) p.right.push_back(site);
    for (int site = spec.main_len + 1; site <= spec.dim(); ++site) p.side.push_back(site);
    return p;
}

Region region_of(const TripleGraphSpec& spec, int site) {
    if (site < 1 || site > spec.dim()) {
        std::ostringstream msg;
        msg << "site " << site << " outside 1.." << spec.dim();
        throw Error(ErrorCode::out_of_range, msg.str());
    }
    if (site > spec.main_len) return Region::side;
    if (site < spec.attach) return Region::left;
    if (site == spec.attach) return Region::connection;
    return Region::right;
}

}  // namespace triplewalk
