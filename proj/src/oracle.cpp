// Copyright 2026 The murlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "murlab/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "murlab/compat.hpp"
#include "murlab/povm.hpp"
#include "murlab/yuoh.hpp"

namespace murlab::oracle {

namespace {

constexpr double kTwoPi = 6.283185307179586;
constexpr double kHalfPi = 1.5707963267948966;
constexpr int kRefinePasses = 3;  // halve the grid step three times

void require_grid_res(double grid_res) {
    if (!(grid_res > 0.0) || grid_res > 0.5) {
        throw_domain(errkind::domain_error,
                     "grid resolution must be positive and small, got " +
                         std::to_string(grid_res));
    }
}

// Strictly-better comparison with the deterministic tie-break: smallest
// objective first, then smallest |d|.
bool better(double eb, double d_norm2, double best_eb, double best_d_norm2) {
    if (eb < best_eb) {
        return true;
    }
    return eb == best_eb && d_norm2 < best_d_norm2;
}

}  // namespace

MinEbResult min_eb_for_c(const BlochVector& c, const BlochVector& b, double grid_res) {
    require_grid_res(grid_res);
    require_unit(b, "target direction");
    if (c.norm() > 1.0 + tolerances().arithmetic) {
        throw_domain(errkind::out_of_ball, "approximator c leaves the Bloch ball");
    }
    // If b itself is compatible with c, nothing beats a perfect partner.
    if (is_jointly_measurable(c, b, tolerances().structural)) {
        return MinEbResult{0.0, c, b};
    }

    // Search plane span(c, b); the compatibility region is rotationally
    // symmetric about c, so the optimum lies in this plane.
    const BlochVector axis = c.normalized();
    const double minor = std::sqrt(std::max(0.0, 1.0 - c.norm2()));
    const BlochVector transv = b - axis * b.dot(axis);
    const BlochVector e2 = transv.normalized();  // nonzero: b incompatible => b not parallel to c
    const double b1 = b.dot(axis);
    const double b2 = b.dot(e2);

    // d(beta, t) = t * (cos beta, minor * sin beta) in (axis, e2) coordinates.
    // Every such point has f(c, d) <= 2 since t <= 1 scales the boundary
    // toward the origin, which is interior.
    auto objective = [&](double beta, double t, double& d_norm2) {
        const double d1 = t * std::cos(beta);
        const double d2 = t * minor * std::sin(beta);
        d_norm2 = d1 * d1 + d2 * d2;
        const double dx = b1 - d1;
        const double dy = b2 - d2;
        return std::sqrt(dx * dx + dy * dy);
    };

    double best_eb = std::numeric_limits<double>::infinity();
    double best_d2 = std::numeric_limits<double>::infinity();
    double best_beta = 0.0;
    double best_t = 1.0;
    auto consider = [&](double beta, double t) {
        double d2 = 0.0;
        const double eb = objective(beta, t, d2);
        if (better(eb, d2, best_eb, best_d2)) {
            best_eb = eb;
            best_d2 = d2;
            best_beta = beta;
            best_t = t;
        }
    };

    double beta_step = grid_res * (1 << kRefinePasses);
    const int n_beta = std::max(16, static_cast<int>(std::ceil(kTwoPi / beta_step)));
    beta_step = kTwoPi / n_beta;
    double t_step = 0.25;
    for (int i = 0; i < n_beta; ++i) {
        for (int j = 1; j <= 4; ++j) {
            consider(i * beta_step, j * t_step);
        }
    }
    for (int pass = 0; pass < kRefinePasses; ++pass) {
        beta_step *= 0.5;
        t_step *= 0.5;
        const double beta0 = best_beta;
        const double t0 = best_t;
        for (int i = -2; i <= 2; ++i) {
            for (int j = -2; j <= 2; ++j) {
                const double t = std::clamp(t0 + j * t_step, 0.0, 1.0);
                consider(beta0 + i * beta_step, t);
            }
        }
    }

    MinEbResult r;
    r.min_eps_b = best_eb;
    r.c = c;
    const double d1 = best_t * std::cos(best_beta);
    const double d2 = best_t * minor * std::sin(best_beta);
    r.d = axis * d1 + e2 * d2;
    return r;
}

MinEbResult min_eb_given_ea(const BlochVector& a, const BlochVector& b, double target_ea,
                            double grid_res) {
    require_grid_res(grid_res);
    require_unit(a, "first target direction");
    require_unit(b, "second target direction");
    const double tol = tolerances().structural;
    const double sc = a.cross(b).norm();
    if (target_ea < -tol || target_ea > sc + tol) {
        throw_domain(errkind::domain_error,
                     "target eps_a must lie in [0, sin chi]; beyond sin chi the boundary "
                     "continues along eps_b = 0");
    }
    target_ea = std::clamp(target_ea, 0.0, std::max(sc, 0.0));
    if (sc < tol) {
        // Parallel targets: only eps_a = 0 is admissible, answered by b itself.
        return min_eb_for_c(a, b, grid_res);
    }

    // Circle of c candidates with |a - c| = target_ea inside the a-b plane.
    const BlochVector u2 = (b - a * a.dot(b)).normalized();
    auto c_at = [&](double alpha) {
        return a + (a * std::cos(alpha) + u2 * std::sin(alpha)) * target_ea;
    };

    double best_eb = std::numeric_limits<double>::infinity();
    double best_d2 = std::numeric_limits<double>::infinity();
    double best_alpha = 0.0;
    MinEbResult best;
    auto consider = [&](double alpha) {
        const BlochVector c = c_at(alpha);
        if (c.norm() > 1.0) {
            return;
        }
        const MinEbResult r = min_eb_for_c(c, b, grid_res);
        if (better(r.min_eps_b, r.d.norm2(), best_eb, best_d2)) {
            best_eb = r.min_eps_b;
            best_d2 = r.d.norm2();
            best_alpha = alpha;
            best = r;
        }
    };

    double alpha_step = grid_res * (1 << kRefinePasses);
    const int n_alpha = std::max(16, static_cast<int>(std::ceil(kTwoPi / alpha_step)));
    alpha_step = kTwoPi / n_alpha;
    for (int i = 0; i < n_alpha; ++i) {
        consider(i * alpha_step);
    }
    if (!std::isfinite(best_eb)) {
        throw_domain(errkind::domain_error, "no admissible approximator c found");
    }
    for (int pass = 0; pass < kRefinePasses; ++pass) {
        alpha_step *= 0.5;
        const double alpha0 = best_alpha;
        for (int i = -2; i <= 2; ++i) {
            if (i != 0) {
                consider(alpha0 + i * alpha_step);
            }
        }
    }
    return best;
}

RegionScan scan_region(const BlochVector& a, const BlochVector& b, int n_ea, double grid_res) {
    if (n_ea < 2) {
        throw_domain(errkind::domain_error, "need at least 2 eps_a samples");
    }
    require_grid_res(grid_res);
    const double sc = sin_chi(a, b);
    RegionScan scan;
    scan.sin_chi = sc;
    scan.resolution = grid_res;
    if (sc < tolerances().structural) {
        // Compatible targets: the admissible region touches the origin.
        scan.boundary.push_back(ScanPoint{0.0, 0.0, a, b});
        return scan;
    }
    scan.boundary.reserve(static_cast<size_t>(n_ea));
    for (int i = 0; i < n_ea; ++i) {
        const double target = sc * static_cast<double>(i) / (n_ea - 1);
        const MinEbResult r = min_eb_given_ea(a, b, target, grid_res);
        scan.boundary.push_back(ScanPoint{target, r.min_eps_b, r.c, r.d});
    }
    return scan;
}

double analytic_eps_b_for_eps_a(double sin_chi, double eps_a) {
    const double tol = tolerances().structural;
    if (eps_a < -tol || eps_a > sin_chi + tol) {
        throw_domain(errkind::domain_error, "eps_a outside [0, sin chi]");
    }
    eps_a = std::clamp(eps_a, 0.0, sin_chi);
    // eps_a(phi) decreases monotonically from sin chi to 0; bisect.
    double lo = 0.0;
    double hi = kHalfPi;
    for (int i = 0; i < 100; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (owc_errors(sin_chi, mid).first > eps_a) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return owc_errors(sin_chi, 0.5 * (lo + hi)).second;
}

WassersteinMax max_wasserstein_over_states(const BlochVector& x, const BlochVector& y,
                                           int n_samples, std::uint64_t seed) {
    if (n_samples < 1) {
        throw_domain(errkind::domain_error, "need at least one sample");
    }
    std::mt19937_64 rng(seed);
    auto unit = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    WassersteinMax m;
    for (int i = 0; i < n_samples; ++i) {
        const double z = 1.0 - 2.0 * unit();
        const double az = kTwoPi * unit();
        const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
        const BlochVector r{s * std::cos(az), s * std::sin(az), z};
        const double v = wasserstein2_sq(x, y, QubitState{r});
        if (v > m.value || i == 0) {
            m.value = v;
            m.argmax = r;
        }
    }
    return m;
}

}  // namespace murlab::oracle
