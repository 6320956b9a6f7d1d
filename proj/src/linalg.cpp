// Copyright 2026 The triplewalk Authors
// SPDX-License-Identifier: Apache-2.0

#include "triplewalk/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace triplewalk {

namespace {

double off_diagonal_norm(const Matrix& a) {
    double sum = 0.0;
    for (int p = 0; p < a.rows(); ++p)
        for (int q = p + 1; q < a.cols(); ++q) sum += 2.0 * a(p, q) * a(p, q);
    return std::sqrt(sum);
}

void require_square(const Matrix& h) {
    if (h.rows() != h.cols()) throw Error(ErrorCode::dimension_mismatch, "matrix is not square");
}

void require_dim(int expected, int got) {
    if (expected != got) {
        std::ostringstream msg;
        msg << "dimension mismatch: operator has " << expected << " sites, state has " << got;
        throw Error(ErrorCode::dimension_mismatch, msg.str());
    }
}

}  // namespace

WalkState WalkState::basis(int dim, int site) {
    if (site < 1 || site > dim) throw Error(ErrorCode::out_of_range, "basis site outside 1..dim");
    std::vector<cplx> amp(static_cast<std::size_t>(dim), cplx{});
    amp[static_cast<std::size_t>(site - 1)] = 1.0;
    return WalkState(std::move(amp));
}

double WalkState::norm() const noexcept {
    double sum = 0.0;
    for (const cplx& a : amplitudes_) sum += std::norm(a);
    return std::sqrt(sum);
}

double WalkState::probability(int site) const {
    if (site < 1 || site > dim()) throw Error(ErrorCode::out_of_range, "site outside state");
    return std::norm(amplitudes_[static_cast<std::size_t>(site - 1)]);
}

SpectralDecomposition symmetric_eig(const Matrix& h, double tolerance, int max_sweeps) {
    require_square(h);
    const int n = h.rows();
    Matrix a = h;
    Matrix v = Matrix::identity(n);

    bool converged = off_diagonal_norm(a) <= tolerance;
    for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                // Rotation angle from the 2x2 block; t = tan(theta), smaller root.
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                a(p, p) -= t * apq;
                a(q, q) += t * apq;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (int r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = a(r, p);
                    const double arq = a(r, q);
                    a(r, p) = arp - s * (arq + tau * arp);
                    a(p, r) = a(r, p);
                    a(r, q) = arq + s * (arp - tau * arq);
                    a(q, r) = a(r, q);
                }
                for (int r = 0; r < n; ++r) {
                    const double vrp = v(r, p);
                    const double vrq = v(r, q);
                    v(r, p) = vrp - s * (vrq + tau * vrp);
                    v(r, q) = vrq + s * (vrp - tau * vrq);
                }
            }
        }
        converged = off_diagonal_norm(a) <= tolerance;
    }
    if (!converged) {
        std::ostringstream msg;
        msg << "Jacobi eigensolver did not converge in " << max_sweeps << " sweeps";
        throw Error(ErrorCode::no_convergence, msg.str());
    }

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&a](int x, int y) { return a(x, x) < a(y, y); });

    SpectralDecomposition dec;
    dec.values.resize(static_cast<std::size_t>(n));
    dec.vectors = Matrix(n, n);
    for (int k = 0; k < n; ++k) {
        const int src = order[static_cast<std::size_t>(k)];
        dec.values[static_cast<std::size_t>(k)] = a(src, src);
        for (int r = 0; r < n; ++r) dec.vectors(r, k) = v(r, src);
    }
    return dec;
}

std::vector<cplx> project(const SpectralDecomposition& dec, const WalkState& psi0) {
    require_dim(dec.dim(), psi0.dim());
    const int n = dec.dim();
    std::vector<cplx> overlaps(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        cplx sum{};
        for (int r = 0; r < n; ++r) sum += dec.vectors(r, k) * psi0[r];
        overlaps[static_cast<std::size_t>(k)] = sum;
    }
    return overlaps;
}

WalkState evolve_projected(const SpectralDecomposition& dec, std::span<const cplx> overlaps, double t) {
    require_dim(dec.dim(), static_cast<int>(overlaps.size()));
    const int n = dec.dim();
    std::vector<cplx> phased(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double phase = -dec.values[static_cast<std::size_t>(k)] * t;
        phased[static_cast<std::size_t>(k)] =
            overlaps[static_cast<std::size_t>(k)] * cplx(std::cos(phase), std::sin(phase));
    }
    std::vector<cplx> out(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) {
        cplx sum{};
        for (int k = 0; k < n; ++k) sum += dec.vectors(r, k) * phased[static_cast<std::size_t>(k)];
        out[static_cast<std::size_t>(r)] = sum;
    }
    return WalkState(std::move(out));
}

WalkState evolve(const SpectralDecomposition& dec, const WalkState& psi0, double t) {
    if (t == 0.0) {
        require_dim(dec.dim(), psi0.dim());
        return psi0;
    }
    const auto overlaps = project(dec, psi0);
    return evolve_projected(dec, overlaps, t);
}

double energy(const Matrix& h, const WalkState& psi) {
    require_square(h);
    require_dim(h.rows(), psi.dim());
    cplx sum{};
    for (int r = 0; r < h.rows(); ++r)
        for (int c = 0; c < h.cols(); ++c) sum += std::conj(psi[r]) * h(r, c) * psi[c];
    return sum.real();
}

namespace {

/// LU factorization of zI - H with partial pivoting, stored in place.
struct ComplexLU {
    ComplexMatrix lu;
    std::vector<int> perm;

    ComplexLU(const Matrix& h, cplx z) {
        require_square(h);
        const int n = h.rows();
        lu.assign(static_cast<std::size_t>(n), std::vector<cplx>(static_cast<std::size_t>(n)));
        double scale = 1.0;
        for (int r = 0; r < n; ++r) {
            for (int c = 0; c < n; ++c) {
                lu[r][c] = (r == c ? z : cplx{}) - h(r, c);
                scale = std::max(scale, std::abs(lu[r][c]));
            }
        }
        perm.resize(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);

        for (int k = 0; k < n; ++k) {
            int pivot = k;
            for (int r = k + 1; r < n; ++r)
                if (std::abs(lu[r][k]) > std::abs(lu[pivot][k])) pivot = r;
            if (std::abs(lu[pivot][k]) < kOnSpectrumPivot * scale) {
                std::ostringstream msg;
                msg << "z = " << z << " lies on the spectrum (resolvent is singular)";
                throw Error(ErrorCode::on_spectrum, msg.str());
            }
            std::swap(lu[k], lu[pivot]);
            std::swap(perm[k], perm[pivot]);
            for (int r = k + 1; r < n; ++r) {
                const cplx f = lu[r][k] / lu[k][k];
                lu[r][k] = f;
                for (int c = k + 1; c < n; ++c) lu[r][c] -= f * lu[k][c];
            }
        }
    }

    /// Solves (zI - H) x = e_col.
    [[nodiscard]] std::vector<cplx> solve_unit(int col) const {
        const int n = static_cast<int>(lu.size());
        std::vector<cplx> x(static_cast<std::size_t>(n));
        for (int r = 0; r < n; ++r) x[r] = perm[r] == col ? cplx(1.0) : cplx{};
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < r; ++c) x[r] -= lu[r][c] * x[c];
        for (int r = n - 1; r >= 0; --r) {
            for (int c = r + 1; c < n; ++c) x[r] -= lu[r][c] * x[c];
            x[r] /= lu[r][r];
        }
        return x;
    }
};

}  // namespace

cplx resolvent_element(const Matrix& h, cplx z, int a, int b) {
    require_square(h);
    if (a < 1 || a > h.rows() || b < 1 || b > h.rows())
        throw Error(ErrorCode::out_of_range, "resolvent site index outside 1..dim");
    const ComplexLU lu(h, z);
    return lu.solve_unit(b - 1)[static_cast<std::size_t>(a - 1)];
}

ComplexMatrix resolvent(const Matrix& h, cplx z) {
    const ComplexLU lu(h, z);
    const int n = h.rows();
    ComplexMatrix g(static_cast<std::size_t>(n), std::vector<cplx>(static_cast<std::size_t>(n)));
    for (int c = 0; c < n; ++c) {
        const auto col = lu.solve_unit(c);
        for (int r = 0; r < n; ++r) g[r][c] = col[r];
    }
    return g;
}

namespace {

ComplexMatrix multiply(const ComplexMatrix& x, const ComplexMatrix& y) {
    const std::size_t n = x.size();
    ComplexMatrix out(n, std::vector<cplx>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k < n; ++k) {
            const cplx xrk = x[r][k];
            if (xrk == cplx{}) continue;
            for (std::size_t c = 0; c < n; ++c) out[r][c] += xrk * y[k][c];
        }
    return out;
}

}  // namespace

WalkState matexp_oracle(const Matrix& h, const WalkState& psi0, double t) {
    require_square(h);
    require_dim(h.rows(), psi0.dim());
    if (t == 0.0) return psi0;
    const std::size_t n = static_cast<std::size_t>(h.rows());

    double norm_inf = 0.0;
    for (int r = 0; r < h.rows(); ++r) {
        double row = 0.0;
        for (int c = 0; c < h.cols(); ++c) row += std::abs(h(r, c));
        norm_inf = std::max(norm_inf, row);
    }
    // Scale until ||H t|| / 2^s <= 1/2; 24 Taylor terms then leave ~1e-31.
    int squarings = 0;
    double scaled = norm_inf * std::abs(t);
    while (scaled > 0.5) {
        scaled *= 0.5;
        ++squarings;
    }
    const double step = t / std::ldexp(1.0, squarings);

    // A = -i H step
    ComplexMatrix a(n, std::vector<cplx>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) a[r][c] = cplx(0.0, -h(static_cast<int>(r), static_cast<int>(c)) * step);

    ComplexMatrix result(n, std::vector<cplx>(n));
    ComplexMatrix term(n, std::vector<cplx>(n));
    for (std::size_t i = 0; i < n; ++i) result[i][i] = term[i][i] = 1.0;
    constexpr int kTerms = 24;
    for (int k = 1; k <= kTerms; ++k) {
        term = multiply(term, a);
        for (auto& row : term)
            for (cplx& x : row) x /= static_cast<double>(k);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) result[r][c] += term[r][c];
    }
    for (int s = 0; s < squarings; ++s) result = multiply(result, result);

    std::vector<cplx> out(n);
    for (std::size_t r = 0; r < n; ++r) {
        cplx sum{};
        for (std::size_t c = 0; c < n; ++c) sum += result[r][c] * psi0[static_cast<int>(c)];
        out[r] = sum;
    }
    return WalkState(std::move(out));
}

}  // namespace triplewalk
