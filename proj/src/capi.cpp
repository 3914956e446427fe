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

#include "murlab.h"

#include <cmath>
#include <cstdio>
#include <memory>
#include <string>

#include "murlab/commands.hpp"
#include "murlab/compat.hpp"
#include "murlab/io.hpp"
#include "murlab/oracle.hpp"
#include "murlab/povm.hpp"
#include "murlab/pulses.hpp"
#include "murlab/simlab.hpp"
#include "murlab/verify.hpp"
#include "murlab/version.hpp"
#include "murlab/yuoh.hpp"

namespace {

thread_local std::string g_last_error;

murlab_status set_error(murlab_status status, const std::string& message) {
    g_last_error = message;
    return status;
}

murlab_status from_exception() {
    try {
        throw;
    } catch (const murlab::Error& e) {
        switch (e.code()) {
            case murlab::ErrorCode::domain:
                return set_error(MURLAB_ERR_DOMAIN, e.what());
            case murlab::ErrorCode::io:
                return set_error(MURLAB_ERR_IO, e.what());
            case murlab::ErrorCode::verification:
                return set_error(MURLAB_ERR_VERIFY, e.what());
        }
        return set_error(MURLAB_ERR_INTERNAL, e.what());
    } catch (const std::exception& e) {
        return set_error(MURLAB_ERR_INTERNAL, e.what());
    } catch (...) {
        return set_error(MURLAB_ERR_INTERNAL, "unknown error");
    }
}

template <typename Fn>
murlab_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return MURLAB_OK;
    } catch (...) {
        return from_exception();
    }
}

murlab_status require(bool ok, const char* what) {
    return ok ? MURLAB_OK : set_error(MURLAB_ERR_DOMAIN, std::string("null argument: ") + what);
}

murlab::BlochVector to_vec(const double v[3]) { return {v[0], v[1], v[2]}; }

void from_vec(const murlab::BlochVector& v, double out[3]) {
    out[0] = v.x;
    out[1] = v.y;
    out[2] = v.z;
}

murlab::sim::NoiseModel to_noise(const murlab_noise* noise) {
    murlab::sim::NoiseModel n;
    if (noise != nullptr) {
        n.prep_fidelity = noise->prep_fidelity;
        n.detection_flip = noise->detection_flip;
        n.depolarize = noise->depolarize;
        n.shots = noise->shots;
        n.seed = noise->seed;
    }
    return n;
}

murlab::cmd::OutputOptions to_output(const murlab_cmd_options* options) {
    if (options == nullptr || options->out_path == nullptr) {
        murlab::throw_domain(murlab::errkind::domain_error, "output path is required");
    }
    murlab::cmd::OutputOptions out;
    out.out_path = options->out_path;
    out.svg = options->svg != 0;
    out.manifest = options->manifest != 0;
    return out;
}

}  // namespace

extern "C" {

struct murlab_sweep {
    murlab::sim::SweepDataset data;
};

struct murlab_scan {
    murlab::oracle::RegionScan data;
    double sin_chi = 0.0;
};

const char* murlab_version(void) { return murlab::version_string(); }

const char* murlab_last_error(void) { return g_last_error.c_str(); }

murlab_status murlab_sin_chi(const double a[3], const double b[3], double* out) {
    if (auto s = require(a && b && out, "a/b/out"); s != MURLAB_OK) return s;
    return guarded([&] { *out = murlab::sin_chi(to_vec(a), to_vec(b)); });
}

murlab_status murlab_compat_functional(const double c[3], const double d[3], double* out) {
    if (auto s = require(c && d && out, "c/d/out"); s != MURLAB_OK) return s;
    return guarded([&] { *out = murlab::compat_functional(to_vec(c), to_vec(d)); });
}

murlab_status murlab_jointly_measurable(const double c[3], const double d[3], double tol,
                                        int* out) {
    if (auto s = require(c && d && out, "c/d/out"); s != MURLAB_OK) return s;
    return guarded(
        [&] { *out = murlab::is_jointly_measurable(to_vec(c), to_vec(d), tol) ? 1 : 0; });
}

murlab_status murlab_owc_errors(double sin_chi, double phi, double* eps_a, double* eps_b) {
    if (auto s = require(eps_a && eps_b, "eps_a/eps_b"); s != MURLAB_OK) return s;
    return guarded([&] {
        const auto [ea, eb] = murlab::owc_errors(sin_chi, phi);
        *eps_a = ea;
        *eps_b = eb;
    });
}

murlab_status murlab_mur_lower_bound(double sin_chi, double phi, double* out) {
    if (auto s = require(out != nullptr, "out"); s != MURLAB_OK) return s;
    return guarded([&] { *out = murlab::mur_lower_bound(sin_chi, phi); });
}

murlab_status murlab_additive_bound(double sin_chi, double* out) {
    if (auto s = require(out != nullptr, "out"); s != MURLAB_OK) return s;
    return guarded([&] { *out = murlab::additive_bound(sin_chi); });
}

murlab_status murlab_effect_prob(double c0, const double m[3], const double r[3], double* out) {
    if (auto s = require(m && r && out, "m/r/out"); s != MURLAB_OK) return s;
    return guarded([&] {
        *out = murlab::prob(murlab::Effect{c0, to_vec(m)}, murlab::QubitState{to_vec(r)});
    });
}

murlab_status murlab_optimal_vectors(const double a[3], const double b[3], double phi,
                                     murlab_tradeoff* out) {
    if (auto s = require(a && b && out, "a/b/out"); s != MURLAB_OK) return s;
    return guarded([&] {
        const murlab::TradeoffPoint tp = murlab::optimal_vectors(to_vec(a), to_vec(b), phi);
        out->phi = tp.phi;
        out->h = tp.h;
        out->eps_a = tp.eps_a;
        out->eps_b = tp.eps_b;
        out->u_c = tp.u_c;
        out->u_d = tp.u_d;
        from_vec(tp.c, out->c);
        from_vec(tp.d, out->d);
    });
}

murlab_status murlab_phi_from_vectors(const double c[3], const double d[3], double* out) {
    if (auto s = require(c && d && out, "c/d/out"); s != MURLAB_OK) return s;
    return guarded([&] { *out = murlab::phi_from_vectors(to_vec(c), to_vec(d)); });
}

murlab_status murlab_build_joint_povm(const double c[3], const double d[3],
                                      murlab_joint_povm* out) {
    if (auto s = require(c && d && out, "c/d/out"); s != MURLAB_OK) return s;
    return guarded([&] {
        const murlab::JointPovm p = murlab::build_joint_povm(to_vec(c), to_vec(d));
        out->h = p.h;
        for (size_t i = 0; i < 4; ++i) {
            out->c0[i] = p.effects[i].c0;
            from_vec(p.effects[i].m, out->m[i]);
        }
    });
}

murlab_status murlab_wasserstein2_sq(const double x[3], const double y[3], const double r[3],
                                     double* out) {
    if (auto s = require(x && y && r && out, "x/y/r/out"); s != MURLAB_OK) return s;
    return guarded([&] {
        *out = murlab::wasserstein2_sq(to_vec(x), to_vec(y), murlab::QubitState{to_vec(r)});
    });
}

murlab_status murlab_owc_from_statistics(double p_a, double p_s1, double p_s2, double h,
                                         double* out) {
    if (auto s = require(out != nullptr, "out"); s != MURLAB_OK) return s;
    return guarded([&] { *out = murlab::owc_from_statistics(p_a, p_s1, p_s2, h); });
}

murlab_status murlab_prep_pulse(const double r[3], double* theta, double* phase) {
    if (auto s = require(r && theta && phase, "r/theta/phase"); s != MURLAB_OK) return s;
    return guarded([&] {
        const murlab::pulses::CarrierPulse p = murlab::pulses::prep_pulse(to_vec(r));
        *theta = p.theta;
        *phase = p.phase;
    });
}

murlab_status murlab_measure_pulse(const double e[3], double* theta, double* phase) {
    if (auto s = require(e && theta && phase, "e/theta/phase"); s != MURLAB_OK) return s;
    return guarded([&] {
        const murlab::pulses::CarrierPulse p = murlab::pulses::measure_pulse(to_vec(e));
        *theta = p.theta;
        *phase = p.phase;
    });
}

murlab_status murlab_carrier_unitary(double theta, double phase, double out_re[4],
                                     double out_im[4]) {
    if (auto s = require(out_re && out_im, "out_re/out_im"); s != MURLAB_OK) return s;
    return guarded([&] {
        const murlab::pulses::Mat2 u =
            murlab::pulses::carrier_unitary(murlab::pulses::CarrierPulse{theta, phase});
        for (size_t i = 0; i < 4; ++i) {
            out_re[i] = u.a[i].real();
            out_im[i] = u.a[i].imag();
        }
    });
}

void murlab_noise_defaults(murlab_noise* noise) {
    if (noise == nullptr) {
        return;
    }
    const murlab::sim::NoiseModel defaults;
    noise->prep_fidelity = defaults.prep_fidelity;
    noise->detection_flip = defaults.detection_flip;
    noise->depolarize = defaults.depolarize;
    noise->shots = defaults.shots;
    noise->seed = defaults.seed;
}

murlab_status murlab_noise_load(const char* path, murlab_noise* noise) {
    if (auto s = require(path && noise, "path/noise"); s != MURLAB_OK) return s;
    return guarded([&] {
        murlab::sim::NoiseModel n = to_noise(noise);
        murlab::io::load_noise_config(path, n);
        noise->prep_fidelity = n.prep_fidelity;
        noise->detection_flip = n.detection_flip;
        noise->depolarize = n.depolarize;
        noise->shots = n.shots;
        noise->seed = n.seed;
    });
}

murlab_status murlab_sweep_run(double sin_chi, int phi_steps, const murlab_noise* noise,
                               int exact, murlab_sweep** out) {
    if (auto s = require(out != nullptr, "out"); s != MURLAB_OK) return s;
    return guarded([&] {
        auto handle = std::make_unique<murlab_sweep>();
        handle->data = murlab::sim::sweep(sin_chi, murlab::sim::phi_grid(phi_steps),
                                          to_noise(noise), exact != 0);
        *out = handle.release();
    });
}

size_t murlab_sweep_size(const murlab_sweep* sweep) {
    return sweep == nullptr ? 0 : sweep->data.points.size();
}

murlab_status murlab_sweep_get(const murlab_sweep* sweep, size_t index, murlab_sweep_row* out) {
    if (auto s = require(sweep && out, "sweep/out"); s != MURLAB_OK) return s;
    if (index >= sweep->data.points.size()) {
        return set_error(MURLAB_ERR_DOMAIN, "sweep row index out of range");
    }
    const murlab::sim::SweepPoint& p = sweep->data.points[index];
    out->phi = p.tp.phi;
    out->h = p.tp.h;
    out->eps_a = p.tp.eps_a;
    out->eps_b = p.tp.eps_b;
    out->u_c = p.tp.u_c;
    out->u_d = p.tp.u_d;
    out->est_eps_a = p.est.eps_a.value;
    out->est_eps_b = p.est.eps_b.value;
    out->stderr_a = p.est.eps_a.std_err;
    out->stderr_b = p.est.eps_b.std_err;
    out->degenerate_a = p.est.eps_a.degenerate ? 1 : 0;
    out->degenerate_b = p.est.eps_b.degenerate ? 1 : 0;
    const double nan = std::nan("");
    out->p_a = p.est.rho1 ? p.est.rho1->p_target : nan;
    out->p_s_pp = p.est.rho1 ? p.est.rho1->p_s_plus : nan;
    out->p_s_pm = p.est.rho1 ? p.est.rho1->p_s_minus : nan;
    out->p_b = p.est.rho2 ? p.est.rho2->p_target : nan;
    out->p_s_mp = p.est.rho2 ? 1.0 - p.est.rho2->p_s_minus : nan;
    out->p_s_pp_r2 = p.est.rho2 ? p.est.rho2->p_s_plus : nan;
    g_last_error.clear();
    return MURLAB_OK;
}

void murlab_sweep_free(murlab_sweep* sweep) { delete sweep; }

murlab_status murlab_scan_run(double sin_chi, int n_ea, double grid_res, murlab_scan** out) {
    if (auto s = require(out != nullptr, "out"); s != MURLAB_OK) return s;
    return guarded([&] {
        const auto [a, b] = murlab::sim::canonical_targets(sin_chi);
        auto handle = std::make_unique<murlab_scan>();
        handle->data = murlab::oracle::scan_region(a, b, n_ea, grid_res);
        handle->sin_chi = handle->data.sin_chi;
        *out = handle.release();
    });
}

size_t murlab_scan_size(const murlab_scan* scan) {
    return scan == nullptr ? 0 : scan->data.boundary.size();
}

murlab_status murlab_scan_get(const murlab_scan* scan, size_t index, murlab_scan_row* out) {
    if (auto s = require(scan && out, "scan/out"); s != MURLAB_OK) return s;
    if (index >= scan->data.boundary.size()) {
        return set_error(MURLAB_ERR_DOMAIN, "scan row index out of range");
    }
    return guarded([&] {
        const murlab::oracle::ScanPoint& p = scan->data.boundary[index];
        out->eps_a = p.eps_a;
        out->min_eps_b = p.min_eps_b;
        out->analytic_eps_b = murlab::oracle::analytic_eps_b_for_eps_a(scan->sin_chi, p.eps_a);
        from_vec(p.witness_c, out->witness_c);
        from_vec(p.witness_d, out->witness_d);
    });
}

void murlab_scan_free(murlab_scan* scan) { delete scan; }

void murlab_cmd_options_defaults(murlab_cmd_options* options) {
    if (options == nullptr) {
        return;
    }
    options->out_path = nullptr;
    options->svg = 0;
    options->manifest = 1;
}

murlab_status murlab_cmd_curve(double sin_chi, int phi_steps,
                               const murlab_cmd_options* options) {
    return guarded([&] { murlab::cmd::curve(sin_chi, phi_steps, to_output(options)); });
}

murlab_status murlab_cmd_simulate(double sin_chi, int phi_steps, const murlab_noise* noise,
                                  int exact, int bootstrap,
                                  const murlab_cmd_options* options) {
    return guarded([&] {
        murlab::cmd::simulate(sin_chi, phi_steps, to_noise(noise), exact != 0, bootstrap != 0,
                              to_output(options));
    });
}

murlab_status murlab_cmd_oracle(double sin_chi, int n_ea, double grid_res,
                                const murlab_cmd_options* options) {
    return guarded([&] { murlab::cmd::oracle_scan(sin_chi, n_ea, grid_res, to_output(options)); });
}

murlab_status murlab_cmd_pulses(double sin_chi, int phi_steps,
                                const murlab_cmd_options* options) {
    return guarded([&] { murlab::cmd::pulse_table(sin_chi, phi_steps, to_output(options)); });
}

murlab_status murlab_cmd_verify(int json_format, const char* report_path) {
    bool all_pass = false;
    const murlab_status status = guarded([&] {
        const murlab::verify::Report report = murlab::verify::run_all();
        const std::string text =
            json_format != 0 ? murlab::verify::to_json(report) : murlab::verify::to_table(report);
        if (report_path != nullptr) {
            murlab::io::write_file(report_path, text);
            murlab::io::write_manifest(
                "verify", {murlab::io::ManifestParam::boolean("json", json_format != 0)},
                {report_path});
        } else {
            std::fputs(text.c_str(), stdout);
            std::fflush(stdout);
        }
        all_pass = report.all_pass;
    });
    if (status != MURLAB_OK) {
        return status;
    }
    if (!all_pass) {
        return set_error(MURLAB_ERR_VERIFY, "one or more verification criteria failed");
    }
    return MURLAB_OK;
}

}  // extern "C"
