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

#include "murlab/pulses.hpp"

#include <cmath>

#include "murlab/povm.hpp"
#include "murlab/yuoh.hpp"

namespace murlab::pulses {

namespace {

constexpr double kTwoPi = 6.283185307179586;

using cplx = std::complex<double>;

// Phase of the transverse Bloch components. The lower-level rotation
// U(theta, phase) reaches (sin theta sin phase, sin theta cos phase, ...),
// so the phase is the angle of (x, y) measured from +y toward +x. Zero when
// the transverse part vanishes (the phase is then immaterial).
double transverse_phase(double x, double y) {
    if (std::hypot(x, y) < tolerances().arithmetic) {
        return 0.0;
    }
    double p = std::atan2(x, y);
    if (p < 0.0) {
        p += kTwoPi;
    }
    return p;
}

}  // namespace

const char* setting_name(Setting s) {
    switch (s) {
        case Setting::a_plus: return "A+";
        case Setting::b_plus: return "B+";
        case Setting::s_plus_plus: return "S++";
        case Setting::s_plus_minus: return "S+-";
        case Setting::s_minus_minus: return "S--";
    }
    return "?";
}

const char* probe_name(Probe p) { return p == Probe::rho1 ? "rho1" : "rho2"; }

Mat2 Mat2::operator*(const Mat2& o) const {
    Mat2 r;
    r.a[0] = a[0] * o.a[0] + a[1] * o.a[2];
    r.a[1] = a[0] * o.a[1] + a[1] * o.a[3];
    r.a[2] = a[2] * o.a[0] + a[3] * o.a[2];
    r.a[3] = a[2] * o.a[1] + a[3] * o.a[3];
    return r;
}

Mat2 Mat2::adjoint() const {
    Mat2 r;
    r.a[0] = std::conj(a[0]);
    r.a[1] = std::conj(a[2]);
    r.a[2] = std::conj(a[1]);
    r.a[3] = std::conj(a[3]);
    return r;
}

Mat2 carrier_unitary(const CarrierPulse& p) {
    const double c = std::cos(0.5 * p.theta);
    const double s = std::sin(0.5 * p.theta);
    const double cp = std::cos(p.phase);
    const double sp = std::sin(p.phase);
    // cos(t/2) I - i sin(t/2) (sigma_x cos(phase) - sigma_y sin(phase))
    Mat2 u;
    u.a[0] = cplx(c, 0.0);
    u.a[1] = cplx(s * sp, -s * cp);
    u.a[2] = cplx(-s * sp, -s * cp);
    u.a[3] = cplx(c, 0.0);
    return u;
}

CarrierPulse prep_pulse(const BlochVector& r) {
    require_unit(r, "prepared state vector");
    const double arg = std::sqrt(std::min(1.0, std::max(0.0, 0.5 * (1.0 - r.z))));
    CarrierPulse p;
    p.theta = 2.0 * std::acos(arg);
    p.phase = transverse_phase(r.x, r.y);
    return p;
}

CarrierPulse measure_pulse(const BlochVector& e) {
    require_unit(e, "measured effect direction");
    const double arg = std::sqrt(std::min(1.0, std::max(0.0, 0.5 * (1.0 + e.z))));
    CarrierPulse p;
    p.theta = 2.0 * std::acos(arg);
    p.phase = transverse_phase(e.x, e.y);
    return p;
}

BlochVector prepared_bloch(const Mat2& u) {
    // psi = U |down> is the second column.
    const cplx up = u.a[1];
    const cplx dn = u.a[3];
    const cplx cross = std::conj(up) * dn;
    return {2.0 * cross.real(), 2.0 * cross.imag(), std::norm(up) - std::norm(dn)};
}

BlochVector measured_direction(const Mat2& u) {
    // U^dag |up><up| U = |psi><psi| with psi = U^dag |up|, the conjugated
    // first row of U.
    const cplx up = std::conj(u.a[0]);
    const cplx dn = std::conj(u.a[1]);
    const cplx cross = std::conj(up) * dn;
    return {2.0 * cross.real(), 2.0 * cross.imag(), std::norm(up) - std::norm(dn)};
}

double detect_up_probability(const PulseProgram& prog) {
    const Mat2 m = carrier_unitary(prog.measure) * carrier_unitary(prog.prep);
    return std::norm(m.a[1]);  // <up| U2 U1 |down>
}

std::vector<PulseProgram> compile_experiment(const BlochVector& a, const BlochVector& b,
                                             double phi) {
    const TradeoffPoint tp = optimal_vectors(a, b, phi);
    const SDecomposition sd = s_decomposition(tp.c, tp.d);
    const WorstCaseStates wcs = worst_case_states(a, b, tp.c, tp.d);

    std::vector<PulseProgram> programs;
    auto emit = [&programs](Setting label, Probe probe, const BlochVector& state,
                            const BlochVector& dir) {
        PulseProgram prog;
        prog.label = label;
        prog.probe = probe;
        prog.state_vec = state;
        prog.effect_dir = dir;
        prog.prep = prep_pulse(state);
        prog.measure = measure_pulse(dir);
        programs.push_back(prog);
    };

    if (wcs.r1) {
        const BlochVector r1 = wcs.r1->r;
        emit(Setting::a_plus, Probe::rho1, r1, a);
        emit(Setting::s_plus_plus, Probe::rho1, r1, sd.s_plus);
        emit(Setting::s_plus_minus, Probe::rho1, r1, sd.s_minus);
    }
    if (wcs.r2) {
        const BlochVector r2 = wcs.r2->r;
        emit(Setting::b_plus, Probe::rho2, r2, b);
        emit(Setting::s_plus_plus, Probe::rho2, r2, sd.s_plus);
        emit(Setting::s_plus_minus, Probe::rho2, r2, sd.s_minus);
    }
    return programs;
}

}  // namespace murlab::pulses
