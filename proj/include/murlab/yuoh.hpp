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

#ifndef MURLAB_YUOH_HPP
#define MURLAB_YUOH_HPP

#include <utility>

#include "murlab/bloch.hpp"

namespace murlab {

/// One point on the optimal worst-case error curve. The mixing angle phi in
/// [0, pi/2] parametrizes the trade-off: phi = 0 approximates the second
/// target perfectly, phi = pi/2 the first.
struct TradeoffPoint {
    double phi = 0.0;
    double h = 0.0;          // weight asymmetry of the joint measurement
    BlochVector c;           // optimal approximator of the first target
    BlochVector d;           // optimal approximator of the second target
    double eps_a = 0.0;      // worst-case error |a - c|
    double eps_b = 0.0;      // worst-case error |b - d|
    double u_c = 0.0;        // unsharpness sqrt(1 - |c|^2)
    double u_d = 0.0;        // unsharpness sqrt(1 - |d|^2)
};

/// Optimal worst-case error pair for incompatibility sinChi at mixing angle
/// phi:
///   eps_a = (sin phi + sin chi cos phi) / sqrt(1 + sin chi sin 2phi) - sin phi
///   eps_b = same with sin and cos swapped.
std::pair<double, double> owc_errors(double sin_chi, double phi);

/// Tight lower bound of the error trade-off family at mixing angle phi:
///   eps_a sin phi + eps_b cos phi >= sqrt(1 + sin chi sin 2phi) - 1.
/// owc_errors saturates it identically.
double mur_lower_bound(double sin_chi, double phi);

/// Additive bound sqrt(2) (sqrt(1 + sin chi) - 1) <= eps_a + eps_b, the
/// phi = pi/4 member of the family; touched at the equal-error point.
double additive_bound(double sin_chi);

/// Weight asymmetry h = cos chi / sqrt(1 + sin chi sin 2phi) of the optimal
/// joint measurement (cosChi signed).
double optimal_h(double cos_chi, double sin_chi, double phi);

/// Construct the optimal approximator pair (c, d) for unit targets a, b at
/// mixing angle phi. c and d lie in span(a, b), saturate the compatibility
/// boundary f(c,d) = 2, and realize the owc_errors pair as |a-c|, |b-d|.
/// Throws DegenerateTargets when a and b are (anti)parallel.
TradeoffPoint optimal_vectors(const BlochVector& a, const BlochVector& b, double phi);

/// Recover the mixing angle from a boundary pair:
///   sin phi = sqrt((1 - |d|^2) / (1 - (c.d)^2)),
///   cos phi = sqrt((1 - |c|^2) / (1 - (c.d)^2)).
/// Requires f(c,d) = 2 within 1e-6 and (c.d)^2 < 1.
double phi_from_vectors(const BlochVector& c, const BlochVector& d);

}  // namespace murlab

#endif
