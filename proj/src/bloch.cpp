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

#include "murlab/bloch.hpp"

#include <string>

namespace murlab {

void require_unit(const BlochVector& v, const char* what) {
    const double n = v.norm();
    if (std::abs(n - 1.0) > tolerances().structural) {
        throw_domain(errkind::not_unit,
                     std::string(what) + " must be a unit vector, got norm " + std::to_string(n));
    }
}

Effect sharp_effect(const BlochVector& x, int sign) {
    require_unit(x, "effect direction");
    if (sign != 1 && sign != -1) {
        throw_domain(errkind::domain_error, "sign must be +1 or -1");
    }
    return Effect{0.5, x * (0.5 * sign)};
}

double prob(const Effect& e, const QubitState& s) {
    const double tol = tolerances().arithmetic;
    if (!e.is_valid(tol)) {
        throw_domain(errkind::invalid_effect, "effect violates 0 <= E <= I");
    }
    const double rn = s.r.norm();
    if (rn > 1.0 + tol) {
        throw_domain(errkind::invalid_state, "state vector leaves the Bloch ball, norm " +
                                                 std::to_string(rn));
    }
    double p = e.c0 + e.m.dot(s.r);
    if (p < 0.0) {
        if (p < -tol) {
            throw_domain(errkind::domain_error, "probability below 0 beyond tolerance");
        }
        p = 0.0;
    } else if (p > 1.0) {
        if (p > 1.0 + tol) {
            throw_domain(errkind::domain_error, "probability above 1 beyond tolerance");
        }
        p = 1.0;
    }
    return p;
}

double sin_chi(const BlochVector& a, const BlochVector& b) {
    require_unit(a, "first observable direction");
    require_unit(b, "second observable direction");
    return a.cross(b).norm();
}

}  // namespace murlab
