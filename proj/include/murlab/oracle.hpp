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

#ifndef MURLAB_ORACLE_HPP
#define MURLAB_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "murlab/bloch.hpp"

namespace murlab::oracle {

/// Result of one constrained minimization: the smallest reachable |b - d|
/// together with the approximator pair that achieves it.
struct MinEbResult {
    double min_eps_b = 0.0;
    BlochVector c;
    BlochVector d;
};

struct ScanPoint {
    double eps_a = 0.0;
    double min_eps_b = 0.0;
    BlochVector witness_c;
    BlochVector witness_d;
};

/// Brute-force trace of the lower boundary of the admissible error region.
struct RegionScan {
    double sin_chi = 0.0;
    double resolution = 0.0;
    std::vector<ScanPoint> boundary;
};

/// Smallest |b - d| over all d compatible with a FIXED c (grid over the
/// compatibility ellipse plus local refinement). The search plane
/// span(c, b) is exact: reflecting any d across it preserves both the
/// constraint and the objective, so no optimum is lost.
MinEbResult min_eb_for_c(const BlochVector& c, const BlochVector& b, double grid_res);

/// Smallest eps_b achievable when the first error is pinned to
/// |a - c| = target_ea: exhaustive circle of c in the a-b plane, and for
/// each c a 2-parameter grid of compatible d. Throws DomainError for
/// target_ea beyond the incompatibility (nothing new is learned there).
MinEbResult min_eb_given_ea(const BlochVector& a, const BlochVector& b, double target_ea,
                            double grid_res);

/// Trace the whole boundary with n_ea equally spaced eps_a targets.
RegionScan scan_region(const BlochVector& a, const BlochVector& b, int n_ea, double grid_res);

/// Analytic eps_b on the optimal curve at a given eps_a (monotone
/// inversion of the closed-form trade-off); used to compare scans against
/// the construction they are meant to verify.
double analytic_eps_b_for_eps_a(double sin_chi, double eps_a);

struct WassersteinMax {
    double value = 0.0;
    BlochVector argmax;
};

/// Maximum of the squared Wasserstein-2 distance 2 |(x-y).r| over uniformly
/// sampled pure states; converges to 2 |x - y| from below.
WassersteinMax max_wasserstein_over_states(const BlochVector& x, const BlochVector& y,
                                           int n_samples, std::uint64_t seed = 0x5EED);

}  // namespace murlab::oracle

#endif
