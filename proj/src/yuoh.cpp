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

#include "murlab/yuoh.hpp"

#include <cmath>
#include <string>

#include "murlab/compat.hpp"

namespace murlab {

namespace {

constexpr double kHalfPi = 1.5707963267948966;

void require_ranges(double sin_chi, double phi) {
    const double tol = tolerances().arithmetic;
    if (!(sin_chi >= -tol && sin_chi <= 1.0 + tol)) {
        throw_domain(errkind::domain_error,
                     "sin chi must lie in [0,1], got " + std::to_string(sin_chi));
    }
    if (!(phi >= -tol && phi <= kHalfPi + tol)) {
        throw_domain(errkind::domain_error,
                     "phi must lie in [0, pi/2], got " + std::to_string(phi));
    }
}

}  // namespace

std::pair<double, double> owc_errors(double sin_chi, double phi) {
    require_ranges(sin_chi, phi);
    const double sp = std::sin(phi);
    const double cp = std::cos(phi);
    const double root = std::sqrt(1.0 + sin_chi * std::sin(2.0 * phi));
    const double eps_a = (sp + sin_chi * cp) / root - sp;
    const double eps_b = (cp + sin_chi * sp) / root - cp;
    return {eps_a, eps_b};
}

double mur_lower_bound(double sin_chi, double phi) {
    require_ranges(sin_chi, phi);
    return std::sqrt(1.0 + sin_chi * std::sin(2.0 * phi)) - 1.0;
}

double additive_bound(double sin_chi) {
    require_ranges(sin_chi, 0.0);
    return std::sqrt(2.0) * (std::sqrt(1.0 + sin_chi) - 1.0);
}

double optimal_h(double cos_chi, double sin_chi, double phi) {
    require_ranges(sin_chi, phi);
    return cos_chi / std::sqrt(1.0 + sin_chi * std::sin(2.0 * phi));
}

TradeoffPoint optimal_vectors(const BlochVector& a, const BlochVector& b, double phi) {
    const double sc = sin_chi(a, b);
    if (sc < tolerances().structural) {
        throw_domain(errkind::degenerate_targets,
                     "targets are (anti)parallel; the construction divides by sin chi");
    }
    require_ranges(sc, phi);

    const double cc = a.dot(b);  // signed cos chi
    const auto [eps_a, eps_b] = owc_errors(sc, phi);
    const double h = optimal_h(cc, sc, phi);
    const double sp = std::sin(phi);
    const double cp = std::cos(phi);
    const double one_minus_h2 = 1.0 - h * h;

    TradeoffPoint tp;
    tp.phi = phi;
    tp.h = h;
    tp.eps_a = eps_a;
    tp.eps_b = eps_b;
    tp.c = (a * (sp * (eps_b + one_minus_h2 * cp)) + b * (h * eps_a * cp)) * (1.0 / sc);
    tp.d = (b * (cp * (eps_a + one_minus_h2 * sp)) + a * (h * eps_b * sp)) * (1.0 / sc);
    tp.u_c = std::sqrt(std::max(0.0, 1.0 - tp.c.norm2()));
    tp.u_d = std::sqrt(std::max(0.0, 1.0 - tp.d.norm2()));
    return tp;
}

double phi_from_vectors(const BlochVector& c, const BlochVector& d) {
    const double f = compat_functional(c, d);
    if (std::abs(f - 2.0) > 1e-6) {
        throw_domain(errkind::not_on_boundary,
                     "pair is not on the compatibility boundary, f = " + std::to_string(f));
    }
    const double cd = c.dot(d);
    const double denom = 1.0 - cd * cd;
    if (denom < tolerances().arithmetic) {
        throw_domain(errkind::degenerate_dot, "(c.d)^2 is too close to 1");
    }
    const double s = std::sqrt(std::max(0.0, (1.0 - d.norm2()) / denom));
    const double co = std::sqrt(std::max(0.0, (1.0 - c.norm2()) / denom));
    return std::atan2(s, co);
}

}  // namespace murlab
