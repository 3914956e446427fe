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

#include "murlab/simlab.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "murlab/povm.hpp"

namespace murlab::sim {

namespace {

constexpr double kHalfPi = 1.5707963267948966;

// Uniform double in [0,1) from the top 53 bits; avoids the
// implementation-defined behavior of std::uniform_real_distribution so
// that counts are reproducible across standard libraries.
double next_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t sample_binomial(std::mt19937_64& rng, std::uint64_t n, double p) {
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
        if (next_unit(rng) < p) {
            ++hits;
        }
    }
    return hits;
}

void validate(const NoiseModel& noise) {
    if (noise.prep_fidelity < 0.0 || noise.prep_fidelity > 1.0 || noise.detection_flip < 0.0 ||
        noise.detection_flip > 1.0 || noise.depolarize < 0.0 || noise.depolarize > 1.0) {
        throw_domain(errkind::domain_error, "noise probabilities must lie in [0,1]");
    }
    if (noise.shots < 1) {
        throw_domain(errkind::domain_error, "shots must be at least 1");
    }
}

double binomial_std_err(double p, std::uint64_t shots) {
    return std::sqrt(std::max(0.0, p * (1.0 - p)) / static_cast<double>(shots));
}

// Invert the known contrast of the noise model on an estimated
// probability, clamped back into [0,1].
double calibrate(double est_p, double scale) {
    const double p = 0.5 + (est_p - 0.5) / scale;
    return std::clamp(p, 0.0, 1.0);
}

struct ChannelMeasurement {
    ChannelStats stats;
    double sigma_target = 0.0;  // standard errors of the calibrated estimates
    double sigma_s_plus = 0.0;
    double sigma_s_minus = 0.0;
};

ChannelMeasurement measure_channel(const QubitState& state, const BlochVector& target_dir,
                                   const BlochVector& s_plus, const BlochVector& s_minus,
                                   const NoiseModel& noise, std::uint64_t channel_salt,
                                   bool exact, const char* target_label) {
    const double scale = signal_scale(noise);
    if (scale <= 0.0) {
        throw_domain(errkind::domain_error,
                     "noise model has no signal contrast left to calibrate against");
    }
    ChannelMeasurement out;
    const std::array<BlochVector, 3> dirs{target_dir, s_plus, s_minus};
    const std::array<std::string, 3> labels{target_label, "S++", "S+-"};
    for (int k = 0; k < 3; ++k) {
        NoiseModel n = noise;
        n.seed = mix_seed(noise.seed, channel_salt * 8 + static_cast<std::uint64_t>(k));
        const Effect effect = sharp_effect(dirs[static_cast<size_t>(k)], +1);
        ShotSummary s;
        if (exact) {
            // sampling bypassed: the estimate is the sampled probability itself
            s.label = labels[static_cast<size_t>(k)];
            s.true_p = noise_adjusted_probability(effect, state, n);
            s.shots = n.shots;
            s.est_p = s.true_p;
            s.counts = static_cast<std::uint64_t>(
                std::llround(s.true_p * static_cast<double>(n.shots)));
            s.std_err = binomial_std_err(s.true_p, n.shots);
        } else {
            s = run_setting(effect, state, n, labels[static_cast<size_t>(k)]);
        }
        out.stats.raw[static_cast<size_t>(k)] = s;
    }
    out.stats.p_target = calibrate(out.stats.raw[0].est_p, scale);
    out.stats.p_s_plus = calibrate(out.stats.raw[1].est_p, scale);
    out.stats.p_s_minus = calibrate(out.stats.raw[2].est_p, scale);
    out.sigma_target = out.stats.raw[0].std_err / scale;
    out.sigma_s_plus = out.stats.raw[1].std_err / scale;
    out.sigma_s_minus = out.stats.raw[2].std_err / scale;
    return out;
}

double propagate_std_err(double h, double sigma_target, double sigma_1, double sigma_2) {
    const double p_plus = 0.5 * (1.0 + h);
    const double p_minus = 0.5 * (1.0 - h);
    return 2.0 * std::sqrt(sigma_target * sigma_target + p_plus * p_plus * sigma_1 * sigma_1 +
                           p_minus * p_minus * sigma_2 * sigma_2);
}

// Resample the three estimated probabilities of a channel and redo the
// reconstruction; returns the standard deviation of the resampled error.
double bootstrap_std_err(const ChannelMeasurement& ch, double h, bool complement_s_minus,
                         double scale, std::uint64_t shots, std::uint64_t seed) {
    constexpr int kResamples = 1000;
    std::mt19937_64 rng(mix_seed(seed, 0xB0075ull));
    double sum = 0.0;
    double sum_sq = 0.0;
    for (int i = 0; i < kResamples; ++i) {
        std::array<double, 3> p{};
        for (int k = 0; k < 3; ++k) {
            const double base = ch.stats.raw[static_cast<size_t>(k)].est_p;
            p[static_cast<size_t>(k)] =
                static_cast<double>(sample_binomial(rng, shots, base)) /
                static_cast<double>(shots);
        }
        const double pt = calibrate(p[0], scale);
        const double ps1 = calibrate(p[1], scale);
        double ps2 = calibrate(p[2], scale);
        if (complement_s_minus) {
            ps2 = 1.0 - ps2;
        }
        const double eps = owc_from_statistics(pt, ps1, ps2, h);
        sum += eps;
        sum_sq += eps * eps;
    }
    const double mean = sum / kResamples;
    return std::sqrt(std::max(0.0, (sum_sq - kResamples * mean * mean) / (kResamples - 1)));
}

}  // namespace

double signal_scale(const NoiseModel& noise) {
    return (1.0 - 2.0 * noise.detection_flip) * (2.0 * noise.prep_fidelity - 1.0) *
           (1.0 - noise.depolarize);
}

double ShotSummary::abs_dev() const { return std::abs(est_p - true_p); }

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t salt) {
    std::uint64_t x = base + 0x9e3779b97f4a7c15ull * (salt + 1);
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

double noise_adjusted_probability(const Effect& effect, const QubitState& state,
                                  const NoiseModel& noise) {
    validate(noise);
    // Preparation imperfection and the depolarizing knob shrink the state;
    // the detection flip mixes the outcome toward 1/2.
    const double shrink = (2.0 * noise.prep_fidelity - 1.0) * (1.0 - noise.depolarize);
    const QubitState degraded{state.r * shrink};
    const double p_state = prob(effect, degraded);
    return noise.detection_flip + (1.0 - 2.0 * noise.detection_flip) * p_state;
}

ShotSummary run_setting(const Effect& effect, const QubitState& state, const NoiseModel& noise,
                        std::string label) {
    const double p = noise_adjusted_probability(effect, state, noise);

    ShotSummary s;
    s.label = std::move(label);
    s.true_p = p;
    s.shots = noise.shots;
    std::mt19937_64 rng(noise.seed);
    s.counts = sample_binomial(rng, noise.shots, p);
    s.est_p = static_cast<double>(s.counts) / static_cast<double>(noise.shots);
    s.std_err = binomial_std_err(s.est_p, noise.shots);
    return s;
}

OwcEstimate estimate_owc(const BlochVector& a, const BlochVector& b, double phi,
                         const NoiseModel& noise, bool exact, ErrorBarMethod method) {
    validate(noise);
    const TradeoffPoint tp = optimal_vectors(a, b, phi);
    const SDecomposition sd = s_decomposition(tp.c, tp.d);
    const WorstCaseStates wcs = worst_case_states(a, b, tp.c, tp.d);
    const double scale = signal_scale(noise);

    OwcEstimate est;
    est.h = tp.h;
    if (wcs.r1) {
        ChannelMeasurement ch =
            measure_channel(*wcs.r1, a, sd.s_plus, sd.s_minus, noise, 0, exact, "A+");
        est.eps_a.value =
            owc_from_statistics(ch.stats.p_target, ch.stats.p_s_plus, ch.stats.p_s_minus, tp.h);
        est.eps_a.std_err =
            method == ErrorBarMethod::bootstrap
                ? bootstrap_std_err(ch, tp.h, false, scale, noise.shots, mix_seed(noise.seed, 1))
                : propagate_std_err(tp.h, ch.sigma_target, ch.sigma_s_plus, ch.sigma_s_minus);
        est.rho1 = ch.stats;
    } else {
        est.eps_a.degenerate = true;  // c = a, the error is exactly zero
    }
    if (wcs.r2) {
        ChannelMeasurement ch =
            measure_channel(*wcs.r2, b, sd.s_plus, sd.s_minus, noise, 1, exact, "B+");
        // The second reconstruction uses the complement direction; its
        // probability is 1 - p(S+-) by completeness.
        est.eps_b.value = owc_from_statistics(ch.stats.p_target, ch.stats.p_s_plus,
                                              1.0 - ch.stats.p_s_minus, tp.h);
        est.eps_b.std_err =
            method == ErrorBarMethod::bootstrap
                ? bootstrap_std_err(ch, tp.h, true, scale, noise.shots, mix_seed(noise.seed, 2))
                : propagate_std_err(tp.h, ch.sigma_target, ch.sigma_s_plus, ch.sigma_s_minus);
        est.rho2 = ch.stats;
    } else {
        est.eps_b.degenerate = true;  // d = b
    }
    return est;
}

SweepDataset sweep(double sin_chi, const std::vector<double>& phi_grid, const NoiseModel& noise,
                   bool exact, ErrorBarMethod method) {
    validate(noise);
    for (size_t i = 0; i + 1 < phi_grid.size(); ++i) {
        if (!(phi_grid[i] < phi_grid[i + 1])) {
            throw_domain(errkind::domain_error, "phi grid must be strictly increasing");
        }
    }
    const auto [a, b] = canonical_targets(sin_chi);
    SweepDataset ds;
    ds.sin_chi = sin_chi;
    ds.points.reserve(phi_grid.size());
    for (size_t i = 0; i < phi_grid.size(); ++i) {
        NoiseModel point_noise = noise;
        point_noise.seed = mix_seed(noise.seed, 0x5EEDull + i);
        SweepPoint p;
        p.tp = optimal_vectors(a, b, phi_grid[i]);
        p.est = estimate_owc(a, b, phi_grid[i], point_noise, exact, method);
        ds.points.push_back(std::move(p));
    }
    return ds;
}

std::pair<BlochVector, BlochVector> canonical_targets(double sin_chi) {
    if (sin_chi < 0.0 || sin_chi > 1.0 + tolerances().arithmetic) {
        throw_domain(errkind::domain_error, "sin chi must lie in [0,1]");
    }
    sin_chi = std::min(sin_chi, 1.0);
    const double cos_chi = std::sqrt(std::max(0.0, 1.0 - sin_chi * sin_chi));
    return {BlochVector{0.0, 1.0, 0.0}, BlochVector{0.0, cos_chi, sin_chi}};
}

std::vector<double> phi_grid(int steps) {
    if (steps < 2) {
        throw_domain(errkind::domain_error, "phi grid needs at least 2 points");
    }
    std::vector<double> grid(static_cast<size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        grid[static_cast<size_t>(i)] = kHalfPi * static_cast<double>(i) / (steps - 1);
    }
    return grid;
}

}  // namespace murlab::sim
