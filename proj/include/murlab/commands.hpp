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

#ifndef MURLAB_COMMANDS_HPP
#define MURLAB_COMMANDS_HPP

#include <string>

#include "murlab/simlab.hpp"

namespace murlab::cmd {

/// Output options shared by the data-producing commands. Every command
/// writes a ".manifest.json" sidecar next to its CSV unless disabled.
struct OutputOptions {
    std::string out_path;
    bool svg = false;
    bool manifest = true;
};

/// Analytic optimal-error curve over a phi grid.
/// CSV columns: phi,eps_a,eps_b,bound_eq1,sum_ab,bound_eq2,h,u_c,u_d
void curve(double sin_chi, int phi_steps, const OutputOptions& out);

/// Shot-noise simulation of the sweep. Adds the estimated errors, their
/// standard errors, and the calibrated per-setting probabilities to the
/// curve columns; cells of a perfectly approximated side are left empty.
void simulate(double sin_chi, int phi_steps, const sim::NoiseModel& noise, bool exact,
              bool bootstrap, const OutputOptions& out);

/// Brute-force boundary scan with witness vectors.
/// CSV columns: eps_a,min_eps_b,analytic_eps_b,deviation,witness_cx..cz,
/// witness_dx..dz,witness_f
void oracle_scan(double sin_chi, int n_ea, double grid_res, const OutputOptions& out);

/// Pulse-angle table of the compiled programs, with a cross-validation pair
/// of probabilities (unitary simulation vs coefficient algebra).
/// CSV columns: phi,state,setting,status,theta1,phi1,theta2,phi2,
/// p_unitary,p_exact
void pulse_table(double sin_chi, int phi_steps, const OutputOptions& out);

}  // namespace murlab::cmd

#endif
