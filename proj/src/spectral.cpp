// Copyright 2026 The triplewalk Authors
// SPDX-License-Identifier: Apache-2.0

#include "triplewalk/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace triplewalk {

namespace {

constexpr double kPi = std::numbers::pi;

void require_length(int length) {
    if (length < 1) throw Error(ErrorCode::invalid_argument, "chain length must be >= 1");
}

void require_site(int site, int length) {
    require_length(length);
    if (site < 1 || site > length) {
        std::ostringstream msg;
        msg << "site " << site << " outside chain 1.." << length;
        throw Error(ErrorCode::out_of_range, msg.str());
    }
}

double chain_energy(int m, int length) { return -2.0 * std::cos(m * kPi / (length + 1)); }

bool vanishes(int site, int m, int length) { return (static_cast<long long>(site) * m) % (length + 1) == 0; }

double sine(int site, int m, int length) { return std::sin(static_cast<double>(site) * m * kPi / (length + 1)); }

[[noreturn]] void throw_on_spectrum(cplx z, double pole) {
    std::ostringstream msg;
    msg << "z = " << z << " is within " << kPoleGuard << " of the pole " << pole;
    throw Error(ErrorCode::on_spectrum, msg.str());
}

/// Unchecked <site|g0(z)|site> on the real axis; the root finder evaluates
/// arbitrarily close to poles and relies on the sign of the blow-up.
double g0_diag_real(double z, int site, int length) {
    double sum = 0.0;
    for (int m = 1; m <= length; ++m) {
        if (vanishes(site, m, length)) continue;
        const double s = sine(site, m, length);
        sum += (2.0 / (length + 1)) * s * s / (z - chain_energy(m, length));
    }
    return sum;
}

/// End-site resolvent of a k-site chain with hopping J, unchecked; 0 for k = 0.
double side_end_real(double z, int k, double coupling) {
    double sum = 0.0;
    for (int n = 1; n <= k; ++n) {
        const double s = std::sin(n * kPi / (k + 1));
        sum += (2.0 / (k + 1)) * s * s / (z + 2.0 * coupling * std::cos(n * kPi / (k + 1)));
    }
    return sum;
}

double level_equation_raw(double z, const TripleGraphSpec& spec, RootMode mode) {
    const double g = g0_diag_real(z, spec.attach, spec.main_len);
    if (mode == RootMode::exact) {
        const double j2 = spec.coupling * spec.coupling;
        return z / j2 - side_end_real(z, spec.side_len - 1, spec.coupling) - g;
    }
    if (spec.side_len % 2 == 1) return g;
    return g + lambda_s(spec.side_len) / z;
}

std::vector<double> equation_poles(const TripleGraphSpec& spec, RootMode mode) {
    std::vector<double> poles;
    for (int m = 1; m <= spec.main_len; ++m)
        if (!vanishes(spec.attach, m, spec.main_len)) poles.push_back(chain_energy(m, spec.main_len));
    if (mode == RootMode::exact) {
        const int k = spec.side_len - 1;
        for (int n = 1; n <= k; ++n) poles.push_back(-2.0 * spec.coupling * std::cos(n * kPi / (k + 1)));
    } else if (spec.side_len % 2 == 0) {
        poles.push_back(0.0);
    }
    std::sort(poles.begin(), poles.end());
    std::vector<double> merged;
    for (double p : poles)
        if (merged.empty() || std::abs(p - merged.back()) > 1e-12) merged.push_back(p);
    return merged;
}

/// Bisection on (lo, hi) given the sign of f just inside lo. Stops when the
/// midpoint no longer separates the endpoints.
template <class F>
double bisect(F&& f, double lo, double hi, double sign_lo) {
    for (int iter = 0; iter < 2000; ++iter) {
        const double mid = lo + 0.5 * (hi - lo);
        if (mid <= lo || mid >= hi) break;
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (sign_lo > 0.0))
            lo = mid;
        else
            hi = mid;
    }
    const double flo = std::abs(f(lo));
    const double fhi = std::abs(f(hi));
    return flo <= fhi ? lo : hi;
}

}  // namespace

double ChainSpectrum::level(int m) const {
    require_site(m, length);
    return levels[static_cast<std::size_t>(m - 1)];
}

double ChainSpectrum::amplitude(int j, int m) const {
    require_site(j, length);
    require_site(m, length);
    return std::sqrt(2.0 / (length + 1)) * sine(j, m, length);
}

ChainSpectrum chain_levels(int length) {
    require_length(length);
    ChainSpectrum spec;
    spec.length = length;
    spec.levels.reserve(static_cast<std::size_t>(length));
    for (int m = 1; m <= length; ++m) spec.levels.push_back(chain_energy(m, length));
    return spec;
}

cplx g0_element(cplx z, int j1, int j2, int length) {
    require_site(j1, length);
    require_site(j2, length);
    cplx sum{};
    for (int m = 1; m <= length; ++m) {
        if (vanishes(j1, m, length) || vanishes(j2, m, length)) continue;
        const double e = chain_energy(m, length);
        if (std::abs(z - e) < kPoleGuard) throw_on_spectrum(z, e);
        sum += (2.0 / (length + 1)) * sine(j1, m, length) * sine(j2, m, length) / (z - e);
    }
    return sum;
}

cplx g0_diag(cplx z, int site, int length) { return g0_element(z, site, site, length); }

double g0_diag_squared(double z, int site, int length) {
    require_site(site, length);
    double sum = 0.0;
    for (int m = 1; m <= length; ++m) {
        if (vanishes(site, m, length)) continue;
        const double e = chain_energy(m, length);
        if (std::abs(z - e) < kPoleGuard) throw_on_spectrum(z, e);
        const double s = sine(site, m, length);
        sum += (2.0 / (length + 1)) * s * s / ((z - e) * (z - e));
    }
    return sum;
}

std::vector<int> remaining_modes(int length, int site) {
    require_site(site, length);
    std::vector<int> modes;
    for (int m = 1; m <= length; ++m)
        if (vanishes(site, m, length)) modes.push_back(m);
    return modes;
}

std::vector<double> remaining_levels(int length, int site) {
    std::vector<double> levels;
    for (int m : remaining_modes(length, site)) levels.push_back(chain_energy(m, length));
    return levels;
}

std::vector<double> shifted_levels_large_j(int length, int site) {
    require_site(site, length);
    if (site == 1 || site == length)
        throw Error(ErrorCode::degenerate_partition,
                    "large-J shifted levels need both sub-chains nonempty (2 <= l <= N-1)");
    std::vector<double> levels;
    for (int n = 1; n <= site - 1; ++n) levels.push_back(-2.0 * std::cos(n * kPi / site));
    const int right = length + 1 - site;
    for (int n = 1; n <= length - site; ++n) levels.push_back(-2.0 * std::cos(n * kPi / right));
    std::sort(levels.begin(), levels.end());
    return levels;
}

std::vector<double> coincident_levels(const TripleGraphSpec& spec) {
    validate_spec(spec);
    std::vector<double> out;
    const int k = spec.side_len - 1;
    for (int m = 1; m <= spec.main_len; ++m) {
        if (vanishes(spec.attach, m, spec.main_len)) continue;
        const double e = chain_energy(m, spec.main_len);
        for (int n = 1; n <= k; ++n)
            if (std::abs(e + 2.0 * spec.coupling * std::cos(n * kPi / (k + 1))) < 1e-12) out.push_back(e);
    }
    return out;
}

LevelClassification classify_levels(const TripleGraphSpec& spec) {
    validate_spec(spec);
    LevelClassification out;
    out.remaining = remaining_levels(spec.main_len, spec.attach);
    if (spec.attach > 1 && spec.attach < spec.main_len)
        out.shifted = shifted_levels_large_j(spec.main_len, spec.attach);
    if (spec.side_len % 2 == 1) out.detached = std::make_pair(-spec.coupling, spec.coupling);
    return out;
}

double lambda_s(int side_len) {
    if (side_len < 2 || side_len % 2 != 0) {
        std::ostringstream msg;
        msg << "lambda_S is defined for even S >= 2 (got S=" << side_len << ")";
        throw Error(ErrorCode::invalid_argument, msg.str());
    }
    double sum = 0.0;
    for (int n = 1; n <= side_len; ++n) {
        const double t = std::tan(n * kPi / (side_len + 1));
        sum += t * t;
    }
    return sum / (2.0 * (side_len + 1));
}

cplx side_chain_g_diag(cplx z, int side_len, double coupling, SideChainWeights weights) {
    if (side_len < 1) throw Error(ErrorCode::invalid_argument, "side chain length must be >= 1");
    if (!(coupling > 0.0)) throw Error(ErrorCode::invalid_argument, "coupling must be positive");
    cplx sum{};
    for (int n = 1; n <= side_len; ++n) {
        const double angle = n * kPi / (side_len + 1);
        const double pole = -2.0 * coupling * std::cos(angle);
        if (std::abs(z - pole) < kPoleGuard) throw_on_spectrum(z, pole);
        const double s = std::sin(angle);
        const double w = weights == SideChainWeights::exact ? s * s : 1.0;
        sum += (2.0 / (side_len + 1)) * w / (z - pole);
    }
    return sum;
}

const char* to_string(RootMode mode) noexcept { return mode == RootMode::exact ? "exact" : "large_j"; }

double level_equation(double z, const TripleGraphSpec& spec, RootMode mode) {
    validate_spec(spec);
    if (spec.side_len < 1) throw Error(ErrorCode::invalid_argument, "level equation needs a side chain (S >= 1)");
    for (double pole : equation_poles(spec, mode))
        if (std::abs(z - pole) < kPoleGuard) throw_on_spectrum(z, pole);
    return level_equation_raw(z, spec, mode);
}

RootSet find_roots(const TripleGraphSpec& spec, RootMode mode) {
    validate_spec(spec);
    if (spec.side_len < 1) throw Error(ErrorCode::invalid_argument, "root equations need a side chain (S >= 1)");

    const auto poles = equation_poles(spec, mode);
    auto f = [&](double z) { return level_equation_raw(z, spec, mode); };
    // Exact mode increases between poles (+inf just left of a pole, -inf just
    // right); both large-J forms decrease.
    const double rise = mode == RootMode::exact ? 1.0 : -1.0;

    RootSet out;
    auto solve = [&](double lo, double hi, double sign_lo, double sign_hi) {
        if (sign_lo == sign_hi || sign_lo == 0.0 || sign_hi == 0.0) {
            out.inconclusive.emplace_back(lo, hi);
            return;
        }
        const double root = bisect(f, lo, hi, sign_lo);
        out.roots.push_back(root);
        out.residuals.push_back(std::abs(f(root)));
    };
    auto sign = [](double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); };

    const double edge = 3.0 + 2.0 * spec.coupling;
    if (mode == RootMode::exact) {
        if (poles.empty()) {
            solve(-edge, edge, sign(f(-edge)), sign(f(edge)));
        } else {
            solve(-edge, poles.front(), sign(f(-edge)), rise);
        }
    }
    for (std::size_t i = 0; i + 1 < poles.size(); ++i) solve(poles[i], poles[i + 1], -rise, rise);
    if (mode == RootMode::exact && !poles.empty()) solve(poles.back(), edge, -rise, sign(f(edge)));

    std::vector<std::size_t> order(out.roots.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return out.roots[a] < out.roots[b]; });
    RootSet sorted;
    for (std::size_t i : order) {
        sorted.roots.push_back(out.roots[i]);
        sorted.residuals.push_back(out.residuals[i]);
    }
    sorted.inconclusive = std::move(out.inconclusive);
    return sorted;
}

namespace {

double delta_unchecked(double z0, const TripleGraphSpec& spec) {
    const double j2 = spec.coupling * spec.coupling;
    return -z0 / (j2 * g0_diag_squared(z0, spec.attach, spec.main_len));
}

}  // namespace

double delta_shift(double z0, const TripleGraphSpec& spec) {
    validate_spec(spec);
    const double g = g0_diag(cplx(z0, 0.0), spec.attach, spec.main_len).real();
    if (std::abs(g) > kRootTolerance) {
        std::ostringstream msg;
        msg << "z0 = " << z0 << " is not a root of <l|g0|l> (value " << g << ")";
        throw Error(ErrorCode::not_a_root, msg.str());
    }
    return delta_unchecked(z0, spec);
}

cplx perturbative_amplitude(int j1, int j2, double t, const TripleGraphSpec& spec) {
    validate_spec(spec);
    if (spec.side_len % 2 == 0)
        throw Error(ErrorCode::invalid_argument, "perturbative amplitude applies to odd S only");
    require_site(j1, spec.main_len);
    require_site(j2, spec.main_len);
    const int l = spec.attach;
    const bool crossing = (j1 > l && j2 < l) || (j1 < l && j2 > l);
    if (!crossing)
        throw Error(ErrorCode::invalid_argument, "j1 and j2 must lie on opposite sides of the connection site");

    const int n = spec.main_len;
    cplx sum{};
    for (int m : remaining_modes(n, l)) {
        const double e = chain_energy(m, n);
        // theta(E) = arccos(-E/2) = m pi / (N+1)
        const double weight = (2.0 / (n + 1)) * sine(j1, m, n) * sine(j2, m, n);
        const double shift = delta_unchecked(e, spec);
        const cplx carrier = std::polar(1.0, -e * t);
        const cplx beat = std::polar(1.0, -shift * t) - 1.0;
        sum += weight * carrier * beat;
    }
    return sum;
}

double side_leak_residue(int j, const TripleGraphSpec& spec) {
    validate_spec(spec);
    if (spec.side_len != 1) throw Error(ErrorCode::invalid_argument, "side leakage residue is defined for S = 1");
    require_site(j, spec.main_len);
    if (j == spec.attach) return -0.5;
    if (std::abs(j - spec.attach) == 1) return 1.0 / (2.0 * spec.coupling);
    return 0.0;
}

}  // namespace triplewalk
