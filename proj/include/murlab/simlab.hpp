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

#ifndef MURLAB_SIMLAB_HPP
#define MURLAB_SIMLAB_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "murlab/bloch.hpp"
#include "murlab/yuoh.hpp"

namespace murlab::sim {

/// Imperfection model of the measurement pipeline. Preparation starts in
/// the wrong level with probability 1 - prep_fidelity (shrinking the
/// prepared Bloch vector by 2 prep_fidelity - 1), detection flips the
/// outcome with probability detection_flip, and an optional depolarizing
/// knob shrinks the state further by 1 - depolarize.
struct NoiseModel {
    double prep_fidelity = 0.987;
    double detection_flip = 0.0022;
    double depolarize = 0.0;
    std::uint64_t shots = 40000;
    std::uint64_t seed = 42;
};

/// Ideal pipeline: nothing shrinks, nothing flips.
inline NoiseModel ideal_noise(std::uint64_t shots = 40000, std::uint64_t seed = 42) {
    return NoiseModel{1.0, 0.0, 0.0, shots, seed};
}

/// Linear contrast the imperfections apply to every Bloch signal m.r:
/// (1 - 2 flip) (2 fidelity - 1) (1 - depolarize).
double signal_scale(const NoiseModel& noise);

/// Outcome record of one measured setting.
struct ShotSummary {
    std::string label;
    double true_p = 0.0;       // noise-adjusted probability actually sampled
    std::uint64_t counts = 0;  // successes out of `shots`
    std::uint64_t shots = 0;
    double est_p = 0.0;        // counts / shots
    double std_err = 0.0;      // sqrt(est_p (1 - est_p) / shots)

    double abs_dev() const;    // |est_p - true_p|, always reported
};

/// Deterministic seeded derivation of independent RNG streams.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t salt);

/// Probability the detector fires after the imperfections act:
/// flip + (1 - 2 flip) (1/2 + shrink * m.r / 2).
double noise_adjusted_probability(const Effect& effect, const QubitState& state,
                                  const NoiseModel& noise);

/// Sample one setting: binomial counts around the noise-adjusted
/// probability of `effect` on `state`. Deterministic given noise.seed.
ShotSummary run_setting(const Effect& effect, const QubitState& state, const NoiseModel& noise,
                        std::string label = {});

/// One estimated worst-case error with its standard error. A degenerate
/// entry marks a perfect approximation: the error is exactly zero by
/// construction and nothing was sampled.
struct ErrorEstimate {
    double value = 0.0;
    double std_err = 0.0;
    bool degenerate = false;
};

enum class ErrorBarMethod { analytic, bootstrap };

/// Raw and calibrated statistics of one worst-case-state channel. The
/// calibrated probabilities invert the known contrast of the noise model,
/// mirroring how calibrated experiments correct systematic imperfections.
struct ChannelStats {
    std::array<ShotSummary, 3> raw;  // target, s_plus, s_minus
    double p_target = 0.0;           // calibrated estimates
    double p_s_plus = 0.0;
    double p_s_minus = 0.0;
};

struct OwcEstimate {
    ErrorEstimate eps_a;
    ErrorEstimate eps_b;
    std::optional<ChannelStats> rho1;
    std::optional<ChannelStats> rho2;
    double h = 0.0;
};

/// Measure the five compiled settings with shot noise and feed the
/// statistics through the marginality reconstruction. `exact` bypasses
/// sampling (estimates equal the sampled probabilities themselves), which
/// reproduces the analytic curve bit-for-bit through the same code path.
OwcEstimate estimate_owc(const BlochVector& a, const BlochVector& b, double phi,
                         const NoiseModel& noise, bool exact = false,
                         ErrorBarMethod method = ErrorBarMethod::analytic);

struct SweepPoint {
    TradeoffPoint tp;
    OwcEstimate est;
};

struct SweepDataset {
    double sin_chi = 0.0;
    std::vector<SweepPoint> points;  // strictly increasing phi
};

/// Full sweep over a phi grid with per-point derived seeds, so the result
/// does not depend on evaluation order.
SweepDataset sweep(double sin_chi, const std::vector<double>& phi_grid, const NoiseModel& noise,
                   bool exact = false, ErrorBarMethod method = ErrorBarMethod::analytic);

/// Target pair used throughout the sweeps: a along +y, b tilted toward +z
/// by the incompatibility angle, both unit.
std::pair<BlochVector, BlochVector> canonical_targets(double sin_chi);

/// Uniformly spaced phi grid over [0, pi/2] with `steps` >= 2 points.
std::vector<double> phi_grid(int steps);

}  // namespace murlab::sim

#endif
