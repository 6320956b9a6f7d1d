// Copyright 2026 The triplewalk Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file model.hpp
 * @brief Triple graph: an N-site main chain with an S-site side chain hanging
 *        off main-chain site l.
 *
 * Sites are 1-indexed everywhere in the public interface: 1..N on the main
 * chain, N+1..N+S on the side chain (N+1 is the site bonded to l). Energies are
 * in units of the main-chain hopping, which is fixed to 1.
 */

#pragma once

#include "triplewalk/error.hpp"

#include <optional>
#include <string>
#include <vector>

namespace triplewalk {

struct TripleGraphSpec {
    int main_len = 1;       ///< N
    int side_len = 0;       ///< S
    int attach = 1;         ///< l, 1 <= l <= N
    double coupling = 1.0;  ///< J, side-chain and side-to-main hopping

    [[nodiscard]] int dim() const noexcept { return main_len + side_len; }

    friend bool operator==(const TripleGraphSpec&, const TripleGraphSpec&) = default;
};

/// Returns a message naming the first violated bound, or nullopt when valid.
[[nodiscard]] std::optional<std::string> check_spec(const TripleGraphSpec& spec);

/// Throws Error(out_of_range) with the check_spec message.
void validate_spec(const TripleGraphSpec& spec);

/// Dense row-major real matrix, 0-indexed storage.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0.0) {}

    static Matrix identity(int n);

    [[nodiscard]] int rows() const noexcept { return rows_; }
    [[nodiscard]] int cols() const noexcept { return cols_; }

    double& operator()(int r, int c) noexcept { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    double operator()(int r, int c) const noexcept { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    [[nodiscard]] const std::vector<double>& data() const noexcept { return data_; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;
};

/// Tight-binding Hamiltonian of the triple graph. Entries are 0, -1 or -J.
class Hamiltonian {
public:
    Hamiltonian(TripleGraphSpec spec, Matrix entries) : spec_(spec), entries_(std::move(entries)) {}

    [[nodiscard]] int dim() const noexcept { return entries_.rows(); }
    [[nodiscard]] const TripleGraphSpec& spec() const noexcept { return spec_; }
    [[nodiscard]] const Matrix& matrix() const noexcept { return entries_; }

    /// 1-indexed element access.
    [[nodiscard]] double at(int a, int b) const;

    /// Unordered bonds (a < b, 1-indexed) with nonzero hopping.
    [[nodiscard]] std::vector<std::pair<int, int>> bonds() const;

private:
    TripleGraphSpec spec_;
    Matrix entries_;
};

[[nodiscard]] Hamiltonian build_hamiltonian(const TripleGraphSpec& spec);

enum class Region { left, connection, right, side };

[[nodiscard]] const char* to_string(Region r) noexcept;

struct SitePartition {
    std::vector<int> left;        ///< 1..l-1
    std::vector<int> connection;  ///< {l}
    std::vector<int> right;       ///< l+1..N
    std::vector<int> side;        ///< N+1..N+S
};

[[nodiscard]] SitePartition partition(const TripleGraphSpec& spec);

/// Region of a 1-indexed site; throws out_of_range for sites outside 1..N+S.
[[nodiscard]] Region region_of(const TripleGraphSpec& spec, int site);

}  // namespace triplewalk
