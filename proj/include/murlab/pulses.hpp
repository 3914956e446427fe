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

#ifndef MURLAB_PULSES_HPP
#define MURLAB_PULSES_HPP

#include <array>
#include <complex>
#include <vector>

#include "murlab/bloch.hpp"

namespace murlab::pulses {

/// One resonant carrier pulse: rotation angle theta = Omega * t and laser
/// phase in [0, 2pi). A single pulse stays below a full Rabi period.
struct CarrierPulse {
    double theta = 0.0;
    double phase = 0.0;
};

/// Measurement settings of the experiment. The two complement settings
/// (s_minus_plus, s_minus_minus) are never compiled into pulses; their
/// statistics are taken as 1 - p of the compiled partner setting.
enum class Setting { a_plus, b_plus, s_plus_plus, s_plus_minus, s_minus_minus };

const char* setting_name(Setting s);

/// Which worst-case state a program probes.
enum class Probe { rho1, rho2 };

const char* probe_name(Probe p);

/// Preparation pulse + measurement pulse + detection on the upper level,
/// for one (setting, probe state) combination.
struct PulseProgram {
    Setting label = Setting::a_plus;
    Probe probe = Probe::rho1;
    CarrierPulse prep;
    CarrierPulse measure;
    BlochVector state_vec;   // Bloch vector prepared by `prep`
    BlochVector effect_dir;  // unit direction of the measured sharp effect
};

/// Complex 2x2 matrix, row-major storage.
struct Mat2 {
    std::array<std::complex<double>, 4> a{};  // [ a00 a01; a10 a11 ]

    Mat2 operator*(const Mat2& o) const;
    Mat2 adjoint() const;
};

/// Carrier-transition unitary
///   U(theta, phase) = cos(theta/2) I - i sin(theta/2)
///                     (sigma_x cos(phase) - sigma_y sin(phase)).
Mat2 carrier_unitary(const CarrierPulse& p);

/// Pulse that takes the lower level to the pure state with Bloch vector r:
///   theta = 2 arccos sqrt((1 - r_z)/2), phase from the transverse
/// components (0 when r_x = 0 and r_y >= 0).
CarrierPulse prep_pulse(const BlochVector& r);

/// Pulse whose inverse pulls the upper-level projector back to the sharp
/// effect (I + e.sigma)/2: theta = 2 arccos sqrt((1 + e_z)/2).
CarrierPulse measure_pulse(const BlochVector& e);

/// Bloch vector of U |down><down| U^dag.
BlochVector prepared_bloch(const Mat2& u);

/// Direction e of U^dag |up><up| U = (I + e.sigma)/2.
BlochVector measured_direction(const Mat2& u);

/// Detection probability of the upper level after prep then measure pulse.
double detect_up_probability(const PulseProgram& prog);

/// Compile the pulse programs of one optimal-trade-off setting: target
/// direction and both sharp joint-measurement directions, on each
/// non-degenerate worst-case state. At the phi endpoints the perfectly
/// approximated side has no witness state and its programs are omitted.
std::vector<PulseProgram> compile_experiment(const BlochVector& a, const BlochVector& b,
                                             double phi);

}  // namespace murlab::pulses

#endif
