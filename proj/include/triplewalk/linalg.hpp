// Copyright 2026 The triplewalk Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file linalg.hpp
 * @brief Dense real-symmetric eigendecomposition, unitary evolution, the
 *        numeric resolvent and an independent matrix-exponential propagator.
 */

#pragma once

#include "triplewalk/model.hpp"

#include <complex>
#include <span>
#include <vector>

namespace triplewalk {

using cplx = std::complex<double>;

/// Cyclic Jacobi stopping rule: off-diagonal Frobenius norm below this.
inline constexpr double kJacobiTolerance = 1e-13;
inline constexpr int kJacobiMaxSweeps = 100;

/// Resolvent solves fail when a pivot drops below this (relative to the
/// largest entry of zI - H).
inline constexpr double kOnSpectrumPivot = 1e-10;

struct SpectralDecomposition {
    std::vector<double> values;  ///< ascending
    Matrix vectors;              ///< column k is the eigenvector of values[k]

    [[nodiscard]] int dim() const noexcept { return static_cast<int>(values.size()); }
};

class WalkState {
public:
    WalkState() = default;
    explicit WalkState(std::vector<cplx> amplitudes) : amplitudes_(std::move(amplitudes)) {}

    /// |site>, site is 1-indexed.
    static WalkState basis(int dim, int site);

    [[nodiscard]] int dim() const noexcept { return static_cast<int>(amplitudes_.size()); }
    [[nodiscard]] std::span<const cplx> amplitudes() const noexcept { return amplitudes_; }
    [[nodiscard]] cplx operator[](int i) const noexcept { return amplitudes_[static_cast<std::size_t>(i)]; }
    [[nodiscard]] double norm() const noexcept;
    /// |<site|psi>|^2, site 1-indexed.
    [[nodiscard]] double probability(int site) const;

private:
    std::vector<cplx> amplitudes_;
};

[[nodiscard]] SpectralDecomposition symmetric_eig(const Matrix& h, double tolerance = kJacobiTolerance,
                                                  int max_sweeps = kJacobiMaxSweeps);
[[nodiscard]] inline SpectralDecomposition symmetric_eig(const Hamiltonian& h) { return symmetric_eig(h.matrix()); }

/// e^{-iHt} psi0 through the eigenbasis.
[[nodiscard]] WalkState evolve(const SpectralDecomposition& dec, const WalkState& psi0, double t);

/// Projections of psi0 onto the eigenvectors; reuse across many times with
/// evolve_projected.
[[nodiscard]] std::vector<cplx> project(const SpectralDecomposition& dec, const WalkState& psi0);
[[nodiscard]] WalkState evolve_projected(const SpectralDecomposition& dec, std::span<const cplx> overlaps, double t);

/// <psi|H|psi>
[[nodiscard]] double energy(const Matrix& h, const WalkState& psi);

using ComplexMatrix = std::vector<std::vector<cplx>>;

/// <a|(z - H)^{-1}|b> by LU with partial pivoting, a and b 1-indexed.
[[nodiscard]] cplx resolvent_element(const Matrix& h, cplx z, int a, int b);
[[nodiscard]] inline cplx resolvent_element(const Hamiltonian& h, cplx z, int a, int b) {
    return resolvent_element(h.matrix(), z, a, b);
}

/// Full (z - H)^{-1}.
[[nodiscard]] ComplexMatrix resolvent(const Matrix& h, cplx z);

/// e^{-iHt} psi0 by scaling and squaring a truncated Taylor series. Shares no
/// code with symmetric_eig/evolve.
[[nodiscard]] WalkState matexp_oracle(const Matrix& h, const WalkState& psi0, double t);

}  // namespace triplewalk
