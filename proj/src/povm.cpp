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

#include "murlab/povm.hpp"

#include <cmath>
#include <string>

#include "murlab/compat.hpp"

namespace murlab {

JointPovm build_joint_povm(const BlochVector& c, const BlochVector& d) {
    const double f = compat_functional(c, d);
    if (std::abs(f - 2.0) > 1e-6) {
        throw_domain(errkind::not_on_boundary,
                     "rank-1 joint POVM needs f(c,d) = 2, got f = " + std::to_string(f));
    }
    const double sum_norm = (c + d).norm();
    const double diff_norm = (c - d).norm();
    if (sum_norm < tolerances().structural || diff_norm < tolerances().structural) {
        throw_domain(errkind::degenerate_cd, "d = +/- c leaves the joint POVM underdetermined");
    }

    JointPovm p;
    p.c = c;
    p.d = d;
    p.h = 0.5 * (sum_norm - diff_norm);
    for (int mu : {+1, -1}) {
        for (int nu : {+1, -1}) {
            Effect e;
            e.c0 = 0.25 * (1.0 + mu * nu * p.h);
            e.m = (c * mu + d * nu) * 0.25;
            p.effects[static_cast<size_t>(JointPovm::index(mu, nu))] = e;
        }
    }
    return p;
}

Marginals marginals(const JointPovm& p) {
    auto add = [](const Effect& lhs, const Effect& rhs) {
        return Effect{lhs.c0 + rhs.c0, lhs.m + rhs.m};
    };
    Marginals m;
    m.c_plus = add(p.effect(+1, +1), p.effect(+1, -1));
    m.c_minus = add(p.effect(-1, +1), p.effect(-1, -1));
    m.d_plus = add(p.effect(+1, +1), p.effect(-1, +1));
    m.d_minus = add(p.effect(+1, -1), p.effect(-1, -1));
    return m;
}

SDecomposition s_decomposition(const BlochVector& c, const BlochVector& d) {
    const double sum_norm = (c + d).norm();
    const double diff_norm = (c - d).norm();
    if (sum_norm < tolerances().structural || diff_norm < tolerances().structural) {
        throw_domain(errkind::degenerate_cd, "c +/- d too short to define sharp directions");
    }
    SDecomposition s;
    s.s_plus = (c + d) * (1.0 / sum_norm);
    s.s_minus = (c - d) * (1.0 / diff_norm);
    const double h = 0.5 * (sum_norm - diff_norm);
    s.p_plus = 0.5 * (1.0 + h);
    s.p_minus = 0.5 * (1.0 - h);
    return s;
}

WorstCaseStates worst_case_states(const BlochVector& a, const BlochVector& b,
                                  const BlochVector& c, const BlochVector& d) {
    const double tol = tolerances().structural;
    WorstCaseStates w;
    const BlochVector da = a - c;
    const BlochVector db = b - d;
    if (da.norm() >= tol) {
        w.r1 = QubitState{da * (1.0 / da.norm())};
    }
    if (db.norm() >= tol) {
        w.r2 = QubitState{db * (1.0 / db.norm())};
    }
    return w;
}

double wasserstein2_sq(const BlochVector& x, const BlochVector& y, const QubitState& r) {
    if (r.r.norm() > 1.0 + tolerances().arithmetic) {
        throw_domain(errkind::invalid_state, "state vector leaves the Bloch ball");
    }
    return 2.0 * std::abs((x - y).dot(r.r));
}

double owc_from_statistics(double p_a, double p_s1, double p_s2, double h) {
    const double tol = tolerances().arithmetic;
    for (double p : {p_a, p_s1, p_s2}) {
        if (p < -tol || p > 1.0 + tol) {
            throw_domain(errkind::domain_error, "probability outside [0,1]");
        }
    }
    if (std::abs(h) > 1.0 + tol) {
        throw_domain(errkind::domain_error, "|h| must not exceed 1");
    }
    const double p_plus = 0.5 * (1.0 + h);
    const double p_minus = 0.5 * (1.0 - h);
    return 2.0 * std::abs(p_a - p_plus * p_s1 - p_minus * p_s2);
}

}  // namespace murlab
