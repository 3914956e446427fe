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

#include "murlab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <random>
#include <sstream>

#include "murlab/compat.hpp"
#include "murlab/io.hpp"
#include "murlab/oracle.hpp"
#include "murlab/povm.hpp"
#include "murlab/pulses.hpp"
#include "murlab/simlab.hpp"
#include "murlab/yuoh.hpp"

namespace murlab::verify {

namespace {

constexpr double kPi = 3.141592653589793;
constexpr double kHalfPi = 1.5707963267948966;
const double kSinChis[4] = {1.0, std::sqrt(2.0) / 2.0, 0.5, 1.0 / 3.0};

struct Tols {
    double arithmetic = 1e-12;
    double structural = 1e-9;
};

Tols tols_from_env() {
    Tols t;
    if (const char* v = std::getenv("MURLAB_TOL")) {
        t.arithmetic = t.structural = std::atof(v);
    }
    if (const char* v = std::getenv("MURLAB_TOL_ARITHMETIC")) {
        t.arithmetic = std::atof(v);
    }
    if (const char* v = std::getenv("MURLAB_TOL_STRUCTURAL")) {
        t.structural = std::atof(v);
    }
    return t;
}

class Timer {
  public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt(double v) { return io::format_double(v); }

double next_unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

BlochVector random_unit(std::mt19937_64& rng) {
    const double z = 1.0 - 2.0 * next_unit(rng);
    const double az = 2.0 * kPi * next_unit(rng);
    const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
    return {s * std::cos(az), s * std::sin(az), z};
}

BlochVector random_in_ball(std::mt19937_64& rng) {
    return random_unit(rng) * std::cbrt(next_unit(rng));
}

CriterionResult criterion_bound_saturation(const Tols& t) {
    Timer timer;
    double worst = 0.0;
    for (double sc : kSinChis) {
        for (int i = 0; i < 200; ++i) {
            const double phi = kHalfPi * i / 199.0;
            const auto [ea, eb] = owc_errors(sc, phi);
            const double lhs = ea * std::sin(phi) + eb * std::cos(phi);
            worst = std::max(worst, std::abs(lhs - mur_lower_bound(sc, phi)));
        }
    }
    const double secs = timer.seconds();
    CriterionResult r;
    r.name = "bound saturation across the trade-off family";
    r.pass = worst <= t.arithmetic && secs < 1.0;
    r.detail = "max |lhs - bound| = " + fmt(worst) + " (tol " + fmt(t.arithmetic) + ")";
    r.seconds = secs;
    return r;
}

CriterionResult criterion_endpoints(const Tols& t) {
    Timer timer;
    double worst = 0.0;
    for (double sc : kSinChis) {
        const auto [ea0, eb0] = owc_errors(sc, 0.0);
        const auto [ea1, eb1] = owc_errors(sc, kHalfPi);
        worst = std::max(
            {worst, std::abs(ea0 - sc), std::abs(eb0), std::abs(ea1), std::abs(eb1 - sc)});
    }
    double peak = 0.0;
    for (int i = 0; i < 200; ++i) {
        peak = std::max(peak, owc_errors(0.5, kHalfPi * i / 199.0).first);
    }
    const double peak_dev = std::abs(peak - 0.5);
    CriterionResult r;
    r.name = "endpoint errors and peak error = sin chi";
    r.pass = worst <= t.arithmetic && peak_dev <= t.arithmetic;
    r.detail = "max endpoint dev = " + fmt(worst) + ", peak dev = " + fmt(peak_dev);
    r.seconds = timer.seconds();
    return r;
}

CriterionResult criterion_additive_bound(const Tols& t) {
    Timer timer;
    double worst = 0.0;
    bool argmin_ok = true;
    for (double sc : kSinChis) {
        double best = 1e300;
        int best_i = -1;
        for (int i = 0; i <= 200; ++i) {  // grid contains pi/4 at i = 100
            const double phi = kHalfPi * i / 200.0;
            const auto [ea, eb] = owc_errors(sc, phi);
            if (ea + eb < best) {
                best = ea + eb;
                best_i = i;
            }
        }
        worst = std::max(worst, std::abs(best - additive_bound(sc)));
        argmin_ok = argmin_ok && best_i == 100;
    }
    const double secs = timer.seconds();
    CriterionResult r;
    r.name = "additive bound attained at the symmetric point";
    r.pass = worst <= t.structural && argmin_ok && secs < 1.0;
    r.detail = "max |min sum - bound| = " + fmt(worst) +
               std::string(argmin_ok ? ", argmin at pi/4" : ", argmin NOT at pi/4");
    r.seconds = secs;
    return r;
}

CriterionResult criterion_pipeline_identity(const Tols& t) {
    Timer timer;
    double worst = 0.0;
    for (double sc : kSinChis) {
        const auto [a, b] = sim::canonical_targets(sc);
        for (int i = 0; i < 50; ++i) {
            const double phi = kHalfPi * i / 49.0;
            const TradeoffPoint tp = optimal_vectors(a, b, phi);
            const SDecomposition sd = s_decomposition(tp.c, tp.d);
            const WorstCaseStates wcs = worst_case_states(a, b, tp.c, tp.d);
            if (wcs.r1) {
                const double pa = prob(sharp_effect(a, +1), *wcs.r1);
                const double p1 = prob(sharp_effect(sd.s_plus, +1), *wcs.r1);
                const double p2 = prob(sharp_effect(sd.s_minus, +1), *wcs.r1);
                worst = std::max(worst,
                                 std::abs(owc_from_statistics(pa, p1, p2, tp.h) - tp.eps_a));
            }
            if (wcs.r2) {
                const double pb = prob(sharp_effect(b, +1), *wcs.r2);
                const double p1 = prob(sharp_effect(sd.s_plus, +1), *wcs.r2);
                const double p2 = 1.0 - prob(sharp_effect(sd.s_minus, +1), *wcs.r2);
                worst = std::max(worst,
                                 std::abs(owc_from_statistics(pb, p1, p2, tp.h) - tp.eps_b));
            }
        }
    }
    const double secs = timer.seconds();
    CriterionResult r;
    r.name = "measured-statistics pipeline reproduces closed-form errors";
    r.pass = worst <= t.arithmetic && secs < 1.0;
    r.detail = "max |pipeline - closed form| = " + fmt(worst);
    r.seconds = secs;
    return r;
}

CriterionResult criterion_oracle(const Tols&) {
    Timer timer;
    double worst_dev = 0.0;
    double worst_below = 0.0;
    double worst_secs = 0.0;
    constexpr double kGridRes = 1e-3;
    constexpr double kSlack = 2.0 * kGridRes;
    for (double sc : kSinChis) {
        Timer per_scan;
        const auto [a, b] = sim::canonical_targets(sc);
        const oracle::RegionScan scan = oracle::scan_region(a, b, 20, kGridRes);
        for (const oracle::ScanPoint& p : scan.boundary) {
            const double analytic = oracle::analytic_eps_b_for_eps_a(sc, p.eps_a);
            worst_dev = std::max(worst_dev, std::abs(p.min_eps_b - analytic));
            for (int i = 0; i < 100; ++i) {
                const double phi = kHalfPi * i / 99.0;
                const double lhs = p.eps_a * std::sin(phi) + p.min_eps_b * std::cos(phi);
                worst_below = std::max(worst_below, mur_lower_bound(sc, phi) - lhs);
            }
        }
        worst_secs = std::max(worst_secs, per_scan.seconds());
    }
    CriterionResult r;
    r.name = "brute-force boundary scan matches the construction";
    r.pass = worst_dev <= kSlack && worst_below <= kSlack && worst_secs < 60.0;
    r.detail = "sup |scan - analytic| = " + fmt(worst_dev) + ", worst bound deficit = " +
               fmt(worst_below) + " (slack " + fmt(kSlack) + "), slowest scan " +
               fmt(worst_secs) + " s";
    r.seconds = timer.seconds();
    return r;
}

CriterionResult criterion_povm_structure(const Tols& t) {
    Timer timer;
    std::mt19937_64 rng(0x70B3ull);
    double worst = 0.0;
    int built = 0;
    while (built < 1000) {
        const BlochVector c = random_in_ball(rng);
        const CompatEllipsoid ell = ellipsoid_for(c);
        const BlochVector d = ell.surface_point(kPi * next_unit(rng), 2.0 * kPi * next_unit(rng));
        if ((c + d).norm() < 1e-6 || (c - d).norm() < 1e-6) {
            continue;
        }
        ++built;
        const JointPovm p = build_joint_povm(c, d);
        // completeness
        double sum_c0 = 0.0;
        BlochVector sum_m{};
        for (const Effect& e : p.effects) {
            sum_c0 += e.c0;
            sum_m = sum_m + e.m;
            // positivity with rank-1 saturation
            worst = std::max(worst, std::abs(e.min_eigenvalue()));
        }
        worst = std::max({worst, std::abs(sum_c0 - 1.0), sum_m.norm()});
        // marginality
        const Marginals m = marginals(p);
        worst = std::max({worst, std::abs(m.c_plus.c0 - 0.5), (m.c_plus.m - c * 0.5).norm(),
                          std::abs(m.d_plus.c0 - 0.5), (m.d_plus.m - d * 0.5).norm(),
                          std::abs(m.c_minus.c0 - 0.5), (m.c_minus.m + c * 0.5).norm()});
    }
    CriterionResult r;
    r.name = "joint POVM completeness, rank-1 positivity, marginality";
    r.pass = worst <= t.structural;
    r.detail = "max structure deviation over 1000 boundary pairs = " + fmt(worst);
    r.seconds = timer.seconds();
    return r;
}

CriterionResult criterion_pulse_compiler(const Tols& t) {
    Timer timer;
    const BlochVector b{0.0, std::sqrt(3.0) / 2.0, 0.5};
    const pulses::CarrierPulse mb = pulses::measure_pulse(b);
    const double theta2_dev = std::abs(mb.theta - kPi / 3.0);
    const double phi2_dev = std::abs(mb.phase);
    // equatorial direction: the inversion formula gives pi/2
    const pulses::CarrierPulse ma = pulses::measure_pulse(BlochVector{0.0, 1.0, 0.0});
    const double theta2_a_dev = std::abs(ma.theta - kHalfPi);

    std::mt19937_64 rng(0x9A15Eull);
    double worst_rt = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const BlochVector r = random_unit(rng);
        const BlochVector back =
            pulses::prepared_bloch(pulses::carrier_unitary(pulses::prep_pulse(r)));
        worst_rt = std::max(worst_rt, (back - r).norm());
        const BlochVector e = random_unit(rng);
        const BlochVector eback =
            pulses::measured_direction(pulses::carrier_unitary(pulses::measure_pulse(e)));
        worst_rt = std::max(worst_rt, (eback - e).norm());
    }
    CriterionResult r;
    r.name = "pulse compiler angles and unitary round trips";
    r.pass = theta2_dev <= t.arithmetic && phi2_dev <= t.arithmetic &&
             theta2_a_dev <= t.arithmetic && worst_rt <= t.structural;
    r.detail = "|theta2(B+) - pi/3| = " + fmt(theta2_dev) + ", phi2(B+) = " + fmt(phi2_dev) +
               ", |theta2(A+) - pi/2| = " + fmt(theta2_a_dev) + ", worst round trip = " +
               fmt(worst_rt);
    r.seconds = timer.seconds();
    return r;
}

CriterionResult criterion_statistics(const Tols&) {
    Timer timer;
    const double stderr_half = std::sqrt(0.25 / 40000.0);
    const double stderr_dev = std::abs(stderr_half - 0.0025);

    // Spread of the reconstructed errors over many seeded repetitions.
    const auto [a, b] = sim::canonical_targets(0.5);
    double sum_a = 0.0, sum_a2 = 0.0, sum_b = 0.0, sum_b2 = 0.0;
    constexpr int kReps = 1000;
    for (int i = 0; i < kReps; ++i) {
        sim::NoiseModel noise = sim::ideal_noise();
        noise.seed = sim::mix_seed(0xCAFEull, static_cast<std::uint64_t>(i));
        const sim::OwcEstimate est = sim::estimate_owc(a, b, kPi / 4.0, noise);
        sum_a += est.eps_a.value;
        sum_a2 += est.eps_a.value * est.eps_a.value;
        sum_b += est.eps_b.value;
        sum_b2 += est.eps_b.value * est.eps_b.value;
    }
    const double std_a = std::sqrt(std::max(0.0, (sum_a2 - sum_a * sum_a / kReps) / (kReps - 1)));
    const double std_b = std::sqrt(std::max(0.0, (sum_b2 - sum_b * sum_b / kReps) / (kReps - 1)));
    const double secs = timer.seconds();
    CriterionResult r;
    r.name = "shot-noise deviation claims at 40000 shots";
    r.pass = stderr_dev < 1e-15 && std_a < 0.01 && std_b < 0.01 && secs < 120.0;
    r.detail = "|stderr(0.5) - 0.0025| = " + fmt(stderr_dev) + ", std(eps_a) = " + fmt(std_a) +
               ", std(eps_b) = " + fmt(std_b) + " over 1000 seeds";
    r.seconds = secs;
    return r;
}

CriterionResult criterion_simulated_bound(const Tols&) {
    Timer timer;
    double worst_violation = -1e300;  // positive = below the bound beyond 3 sigma
    for (double sc : kSinChis) {
        const sim::NoiseModel noise;  // default imperfections
        const sim::SweepDataset ds = sim::sweep(sc, sim::phi_grid(13), noise);
        for (const sim::SweepPoint& p : ds.points) {
            if (p.est.eps_a.degenerate || p.est.eps_b.degenerate) {
                continue;  // endpoint rows are exact zeros on both sides of the bound
            }
            const double sp = std::sin(p.tp.phi);
            const double cp = std::cos(p.tp.phi);
            const double lhs = p.est.eps_a.value * sp + p.est.eps_b.value * cp;
            const double combined =
                std::sqrt(sp * sp * p.est.eps_a.std_err * p.est.eps_a.std_err +
                          cp * cp * p.est.eps_b.std_err * p.est.eps_b.std_err);
            const double deficit = mur_lower_bound(sc, p.tp.phi) - lhs;
            worst_violation = std::max(worst_violation, deficit - 3.0 * combined);
        }
    }
    CriterionResult r;
    r.name = "simulated sweeps respect the bound within 3 sigma";
    r.pass = worst_violation <= 0.0;
    r.detail = "worst (deficit - 3 sigma) = " + fmt(worst_violation);
    r.seconds = timer.seconds();
    return r;
}

}  // namespace

Report run_all() {
    const Tols t = tols_from_env();
    Report report;
    report.criteria.push_back(criterion_bound_saturation(t));
    report.criteria.push_back(criterion_endpoints(t));
    report.criteria.push_back(criterion_additive_bound(t));
    report.criteria.push_back(criterion_pipeline_identity(t));
    report.criteria.push_back(criterion_oracle(t));
    report.criteria.push_back(criterion_povm_structure(t));
    report.criteria.push_back(criterion_pulse_compiler(t));
    report.criteria.push_back(criterion_statistics(t));
    report.criteria.push_back(criterion_simulated_bound(t));
    report.all_pass = true;
    for (size_t i = 0; i < report.criteria.size(); ++i) {
        report.criteria[i].index = static_cast<int>(i) + 1;
        report.all_pass = report.all_pass && report.criteria[i].pass;
    }
    return report;
}

std::string to_table(const Report& report) {
    std::ostringstream out;
    for (const CriterionResult& c : report.criteria) {
        out << "[" << c.index << "/" << report.criteria.size() << "] "
            << (c.pass ? "PASS" : "FAIL") << "  " << c.name << ": " << c.detail << " ("
            << fmt(c.seconds) << " s)\n";
    }
    out << (report.all_pass ? "RESULT: PASS" : "RESULT: FAIL") << "\n";
    return out.str();
}

std::string to_json(const Report& report) {
    std::ostringstream out;
    out << "{\n  \"criteria\": [\n";
    for (size_t i = 0; i < report.criteria.size(); ++i) {
        const CriterionResult& c = report.criteria[i];
        out << "    {\"index\": " << c.index << ", \"name\": \"" << c.name << "\", \"pass\": "
            << (c.pass ? "true" : "false") << ", \"detail\": \"" << c.detail
            << "\", \"seconds\": " << fmt(c.seconds) << "}"
            << (i + 1 < report.criteria.size() ? "," : "") << "\n";
    }
    out << "  ],\n  \"all_pass\": " << (report.all_pass ? "true" : "false") << "\n}\n";
    return out.str();
}

}  // namespace murlab::verify
