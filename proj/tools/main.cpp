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

// Command-line front end; all functionality lives behind the C API of the
// shared library.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "murlab.h"

namespace {

constexpr double kHalfPi = 1.5707963267948966;
constexpr double kRadToDeg = 57.29577951308232;

int exit_code(murlab_status status) {
    switch (status) {
        case MURLAB_OK:
            return 0;
        case MURLAB_ERR_DOMAIN:
            return 1;
        case MURLAB_ERR_IO:
            return 2;
        case MURLAB_ERR_VERIFY:
            return 3;
        case MURLAB_ERR_INTERNAL:
            return 1;
    }
    return 1;
}

int finish(murlab_status status) {
    if (status != MURLAB_OK) {
        std::fprintf(stderr, "error: %s\n", murlab_last_error());
    }
    return exit_code(status);
}

struct TargetAngle {
    double sin_chi = 1.0;
    double chi = 0.0;
    CLI::Option* sc = nullptr;
    CLI::Option* ch = nullptr;

    void add_options(CLI::App* cmd) {
        sc = cmd->add_option("--sin-chi", sin_chi, "incompatibility sin(chi) in [0,1]")
                 ->check(CLI::Range(0.0, 1.0));
        ch = cmd->add_option("--chi", chi, "angle between the targets, radians in [0, pi/2]")
                 ->check(CLI::Range(0.0, kHalfPi));
        sc->excludes(ch);
        ch->excludes(sc);
    }

    double resolve() const { return ch->count() > 0 ? std::sin(chi) : sin_chi; }

    bool present() const { return sc->count() > 0 || ch->count() > 0; }
};

void print_summary(const char* what, const std::string& out, int rows_hint, bool degrees) {
    if (degrees) {
        std::printf("%s: wrote %s (%d phi points over [0, %.6g] deg)\n", what, out.c_str(),
                    rows_hint, kHalfPi * kRadToDeg);
    } else {
        std::printf("%s: wrote %s (%d phi points over [0, %.6g] rad)\n", what, out.c_str(),
                    rows_hint, kHalfPi);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"optimal joint-measurement error trade-offs: analytics, brute-force "
                 "verification, pulse compilation, and shot-noise simulation"};
    app.set_version_flag("--version", std::string(murlab_version()));
    app.require_subcommand(1);

    // curve ----------------------------------------------------------------
    auto* curve = app.add_subcommand("curve", "analytic optimal error curve as CSV");
    TargetAngle curve_angle;
    curve_angle.add_options(curve);
    int curve_steps = 13;
    std::string curve_out;
    bool curve_svg = false, curve_degrees = false;
    curve->add_option("--phi-steps", curve_steps, "number of phi grid points")->check(CLI::Range(2, 1000000));
    curve->add_option("--out", curve_out, "output CSV path")->required();
    curve->add_flag("--svg", curve_svg, "also write a line plot next to the CSV");
    curve->add_flag("--degrees", curve_degrees, "print the console summary in degrees");

    // simulate ---------------------------------------------------------------
    auto* simulate = app.add_subcommand("simulate", "shot-noise simulation of the sweep as CSV");
    TargetAngle sim_angle;
    sim_angle.add_options(simulate);
    int sim_steps = 13;
    std::string sim_out, sim_config;
    std::uint64_t sim_shots = 0, sim_seed = 0;
    bool sim_exact = false, sim_svg = false, sim_degrees = false, sim_bootstrap = false;
    simulate->add_option("--phi-steps", sim_steps, "number of phi grid points")->check(CLI::Range(2, 1000000));
    simulate->add_option("--out", sim_out, "output CSV path")->required();
    auto* shots_opt = simulate->add_option("--shots", sim_shots, "measurements per setting");
    auto* seed_opt = simulate->add_option("--seed", sim_seed, "base RNG seed");
    simulate->add_option("--config", sim_config,
                         "key=value noise file (prep_fidelity, detection_flip, depolarize, "
                         "shots, seed)");
    simulate->add_flag("--exact", sim_exact, "bypass sampling; estimates equal exact values");
    simulate->add_flag("--bootstrap", sim_bootstrap,
                       "bootstrap error bars (1000 resamples) instead of binomial propagation");
    simulate->add_flag("--svg", sim_svg, "also write a line plot next to the CSV");
    simulate->add_flag("--degrees", sim_degrees, "print the console summary in degrees");

    // oracle -----------------------------------------------------------------
    auto* oracle = app.add_subcommand("oracle", "brute-force boundary scan as CSV");
    TargetAngle oracle_angle;
    oracle_angle.add_options(oracle);
    int oracle_n_ea = 20;
    double oracle_grid_res = 1e-3;
    std::string oracle_out;
    bool oracle_svg = false;
    oracle->add_option("--n-ea", oracle_n_ea, "number of eps_a targets")->check(CLI::Range(2, 100000));
    oracle->add_option("--grid-res", oracle_grid_res, "search grid resolution");
    oracle->add_option("--out", oracle_out, "output CSV path")->required();
    oracle->add_flag("--svg", oracle_svg, "also write a line plot next to the CSV");

    // pulses -----------------------------------------------------------------
    auto* pulses = app.add_subcommand("pulses", "compiled pulse-angle table as CSV");
    TargetAngle pulses_angle;
    pulses_angle.add_options(pulses);
    int pulses_steps = 13;
    std::string pulses_out;
    bool pulses_svg = false, pulses_degrees = false;
    pulses->add_option("--phi-steps", pulses_steps, "number of phi grid points")->check(CLI::Range(2, 1000000));
    pulses->add_option("--out", pulses_out, "output CSV path")->required();
    pulses->add_flag("--svg", pulses_svg, "also write a line plot next to the CSV");
    pulses->add_flag("--degrees", pulses_degrees, "print the console summary in degrees");

    // verify -----------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "run the verification suite");
    bool verify_json = false;
    std::string verify_out;
    verify->add_flag("--json", verify_json, "machine-readable report");
    verify->add_option("--out", verify_out, "write the report to a file instead of stdout");

    CLI11_PARSE(app, argc, argv);

    murlab_cmd_options options;
    murlab_cmd_options_defaults(&options);

    if (curve->parsed()) {
        if (!curve_angle.present()) {
            std::fprintf(stderr, "error: one of --sin-chi or --chi is required\n");
            return 1;
        }
        options.out_path = curve_out.c_str();
        options.svg = curve_svg ? 1 : 0;
        const murlab_status s = murlab_cmd_curve(curve_angle.resolve(), curve_steps, &options);
        if (s == MURLAB_OK) {
            print_summary("curve", curve_out, curve_steps, curve_degrees);
        }
        return finish(s);
    }

    if (simulate->parsed()) {
        if (!sim_angle.present()) {
            std::fprintf(stderr, "error: one of --sin-chi or --chi is required\n");
            return 1;
        }
        murlab_noise noise;
        murlab_noise_defaults(&noise);
        if (!sim_config.empty()) {
            const murlab_status s = murlab_noise_load(sim_config.c_str(), &noise);
            if (s != MURLAB_OK) {
                return finish(s);
            }
        }
        // flags outrank the config file
        if (shots_opt->count() > 0) {
            noise.shots = sim_shots;
        }
        if (seed_opt->count() > 0) {
            noise.seed = sim_seed;
        }
        options.out_path = sim_out.c_str();
        options.svg = sim_svg ? 1 : 0;
        const murlab_status s = murlab_cmd_simulate(sim_angle.resolve(), sim_steps, &noise,
                                                    sim_exact ? 1 : 0, sim_bootstrap ? 1 : 0,
                                                    &options);
        if (s == MURLAB_OK) {
            print_summary("simulate", sim_out, sim_steps, sim_degrees);
        }
        return finish(s);
    }

    if (oracle->parsed()) {
        if (!oracle_angle.present()) {
            std::fprintf(stderr, "error: one of --sin-chi or --chi is required\n");
            return 1;
        }
        options.out_path = oracle_out.c_str();
        options.svg = oracle_svg ? 1 : 0;
        const murlab_status s =
            murlab_cmd_oracle(oracle_angle.resolve(), oracle_n_ea, oracle_grid_res, &options);
        if (s == MURLAB_OK) {
            std::printf("oracle: wrote %s (%d eps_a targets at resolution %g)\n",
                        oracle_out.c_str(), oracle_n_ea, oracle_grid_res);
        }
        return finish(s);
    }

    if (pulses->parsed()) {
        if (!pulses_angle.present()) {
            std::fprintf(stderr, "error: one of --sin-chi or --chi is required\n");
            return 1;
        }
        options.out_path = pulses_out.c_str();
        options.svg = pulses_svg ? 1 : 0;
        const murlab_status s = murlab_cmd_pulses(pulses_angle.resolve(), pulses_steps, &options);
        if (s == MURLAB_OK) {
            print_summary("pulses", pulses_out, pulses_steps, pulses_degrees);
        }
        return finish(s);
    }

    // verify
    const murlab_status s =
        murlab_cmd_verify(verify_json ? 1 : 0, verify_out.empty() ? nullptr : verify_out.c_str());
    if (s == MURLAB_ERR_VERIFY) {
        std::fprintf(stderr, "verification failed\n");
        return 3;
    }
    return finish(s);
}
