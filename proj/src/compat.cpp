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

#include "murlab/compat.hpp"

#include <string>

namespace murlab {

namespace {

void require_in_ball(const BlochVector& v, const char* what) {
    const double n = v.norm();
    if (n > 1.0 + tolerances().arithmetic) {
        throw_domain(errkind::out_of_ball,
                     std::string(what) + " has norm " + std::to_string(n) + " > 1");
    }
}

// Any unit vector orthogonal to v (|v| > 0): cross v with its least-aligned
// coordinate axis.
BlochVector any_orthogonal(const BlochVector& v) {
    const double ax = std::abs(v.x), ay = std::abs(v.y), az = std::abs(v.z);
    BlochVector axis{1.0, 0.0, 0.0};
    if (ay <= ax && ay <= az) {
        axis = {0.0, 1.0, 0.0};
    } else if (az <= ax && az <= ay) {
        axis = {0.0, 0.0, 1.0};
    }
    return v.cross(axis).normalized();
}

}  // namespace

double compat_functional(const BlochVector& c, const BlochVector& d) {
    require_in_ball(c, "first mean vector");
    require_in_ball(d, "second mean vector");
    return (c + d).norm() + (c - d).norm();
}

bool is_jointly_measurable(const BlochVector& c, const BlochVector& d, double tol) {
    return compat_functional(c, d) <= 2.0 + tol;
}

CompatEllipsoid ellipsoid_for(const BlochVector& fixed) {
    require_in_ball(fixed, "focus vector");
    const double n2 = fixed.norm2();
    CompatEllipsoid e;
    e.focus = fixed;
    e.major_semi_axis = 1.0;
    e.minor_semi_axis = std::sqrt(std::max(0.0, 1.0 - n2));
    return e;
}

BlochVector CompatEllipsoid::surface_point(double theta, double psi) const {
    const double n = focus.norm();
    if (n < tolerances().structural) {
        // Foci coincide at the origin; the surface is the unit sphere.
        const double st = std::sin(theta);
        return {st * std::cos(psi), st * std::sin(psi), std::cos(theta)};
    }
    const BlochVector axis = focus * (1.0 / n);
    const BlochVector e1 = any_orthogonal(axis);
    const BlochVector e2 = axis.cross(e1);
    const double transverse = minor_semi_axis * std::sin(theta);
    return axis * std::cos(theta) + e1 * (transverse * std::cos(psi)) +
           e2 * (transverse * std::sin(psi));
}

}  // namespace murlab
