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

#ifndef MURLAB_BLOCH_HPP
#define MURLAB_BLOCH_HPP

#include <cmath>

#include "murlab/errors.hpp"
#include "murlab/tolerances.hpp"

namespace murlab {

/// Real 3-vector on (or in) the Bloch ball. Serves both as a state vector r
/// of a qubit density operator (I + r.sigma)/2 and as the direction of a
/// dichotomic observable.
struct BlochVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double norm2() const { return x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm2()); }

    BlochVector operator+(const BlochVector& o) const { return {x + o.x, y + o.y, z + o.z}; }
    BlochVector operator-(const BlochVector& o) const { return {x - o.x, y - o.y, z - o.z}; }
    BlochVector operator-() const { return {-x, -y, -z}; }
    BlochVector operator*(double s) const { return {x * s, y * s, z * s}; }

    double dot(const BlochVector& o) const { return x * o.x + y * o.y + z * o.z; }

    BlochVector cross(const BlochVector& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }

    /// Unit vector in the same direction; throws on (near-)zero input.
    BlochVector normalized() const {
        const double n = norm();
        if (n < tolerances().structural) {
            throw_domain(errkind::domain_error, "cannot normalize a near-zero vector");
        }
        return {x / n, y / n, z / n};
    }
};

inline BlochVector operator*(double s, const BlochVector& v) { return v * s; }

/// Requires that `v` is a unit vector within the structural tolerance.
void require_unit(const BlochVector& v, const char* what);

/// Qubit effect in coefficient form, E = c0 * I + m.sigma. Valid effects
/// satisfy 0 <= E <= I, i.e. c0 - |m| >= 0 and c0 + |m| <= 1.
struct Effect {
    double c0 = 0.0;
    BlochVector m;

    /// Smaller eigenvalue c0 - |m|; nonnegative for a valid effect.
    double min_eigenvalue() const { return c0 - m.norm(); }
    /// Larger eigenvalue c0 + |m|; at most 1 for a valid effect.
    double max_eigenvalue() const { return c0 + m.norm(); }

    bool is_valid(double tol) const {
        return min_eigenvalue() >= -tol && max_eigenvalue() <= 1.0 + tol;
    }

    /// Sharp projector test: c0 = 1/2 and |m| = 1/2.
    bool is_sharp(double tol) const {
        return std::abs(c0 - 0.5) <= tol && std::abs(m.norm() - 0.5) <= tol;
    }
};

/// Qubit state rho = (I + r.sigma)/2 with |r| <= 1.
struct QubitState {
    BlochVector r;
};

/// Complementary effect I - E.
inline Effect complement(const Effect& e) { return Effect{1.0 - e.c0, -e.m}; }

/// Sharp two-outcome effect (I +/- x.sigma)/2 for a unit direction x.
Effect sharp_effect(const BlochVector& x, int sign);

/// Outcome probability Tr[E rho] = c0 + m.r, clamped to [0,1] only when the
/// excursion is within the arithmetic tolerance.
double prob(const Effect& e, const QubitState& s);

/// Incompatibility measure of two unit directions, |a x b|.
double sin_chi(const BlochVector& a, const BlochVector& b);

}  // namespace murlab

#endif
