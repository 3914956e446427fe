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

#include "murlab/commands.hpp"

#include <cmath>
#include <vector>

#include "murlab/compat.hpp"
#include "murlab/io.hpp"
#include "murlab/oracle.hpp"
#include "murlab/povm.hpp"
#include "murlab/pulses.hpp"
#include "murlab/yuoh.hpp"

namespace murlab::cmd {

namespace {

void require_sin_chi(double sin_chi) {
    if (sin_chi < 0.0 || sin_chi > 1.0 + tolerances().arithmetic) {
        throw_domain(errkind::domain_error, "sin chi must lie in [0,1]");
    }
}

struct CurveRow {
    double phi, eps_a, eps_b, bound_eq1, sum_ab, bound_eq2, h, u_c, u_d;
};

CurveRow curve_row(double sin_chi, double phi) {
    CurveRow row{};
    row.phi = phi;
    const auto [ea, eb] = owc_errors(sin_chi, phi);
    row.eps_a = ea;
    row.eps_b = eb;
    row.bound_eq1 = mur_lower_bound(sin_chi, phi);
    row.sum_ab = ea + eb;
    row.bound_eq2 = additive_bound(sin_chi);
    const double cos_chi = std::sqrt(std::max(0.0, 1.0 - sin_chi * sin_chi));
    row.h = optimal_h(cos_chi, sin_chi, phi);
    if (sin_chi < tolerances().structural) {
        // Commuting targets: sharp perfect approximators, no unsharpness.
        row.u_c = 0.0;
        row.u_d = 0.0;
    } else {
        const auto [a, b] = sim::canonical_targets(sin_chi);
        const TradeoffPoint tp = optimal_vectors(a, b, phi);
        row.u_c = tp.u_c;
        row.u_d = tp.u_d;
    }
    return row;
}

void emit_curve_cells(io::CsvWriter& csv, const CurveRow& row) {
    csv.value(row.phi)
        .value(row.eps_a)
        .value(row.eps_b)
        .value(row.bound_eq1)
        .value(row.sum_ab)
        .value(row.bound_eq2)
        .value(row.h)
        .value(row.u_c)
        .value(row.u_d);
}

const std::vector<std::string> kCurveHeader = {"phi",    "eps_a",     "eps_b", "bound_eq1",
                                               "sum_ab", "bound_eq2", "h",     "u_c",
                                               "u_d"};

}  // namespace

void curve(double sin_chi, int phi_steps, const OutputOptions& out) {
    require_sin_chi(sin_chi);
    const std::vector<double> grid = sim::phi_grid(phi_steps);

    io::CsvWriter csv(kCurveHeader);
    io::SvgSeries s_ea{"eps_a", "black", {}};
    io::SvgSeries s_eb{"eps_b", "red", {}};
    io::SvgSeries s_bound{"bound", "gray", {}};
    for (double phi : grid) {
        const CurveRow row = curve_row(sin_chi, phi);
        emit_curve_cells(csv, row);
        csv.end_row();
        s_ea.points.emplace_back(phi, row.eps_a);
        s_eb.points.emplace_back(phi, row.eps_b);
        s_bound.points.emplace_back(phi, row.bound_eq1);
    }
    csv.write_file(out.out_path);

    std::vector<std::string> outputs{out.out_path};
    if (out.svg) {
        io::write_svg(out.out_path + ".svg", "optimal error trade-off", {s_ea, s_eb, s_bound});
        outputs.push_back(out.out_path + ".svg");
    }
    if (out.manifest) {
        io::write_manifest("curve",
                           {io::ManifestParam::number("sin_chi", sin_chi),
                            io::ManifestParam::integer("phi_steps", static_cast<std::uint64_t>(phi_steps)),
                            io::ManifestParam::boolean("svg", out.svg)},
                           outputs);
    }
}

void simulate(double sin_chi, int phi_steps, const sim::NoiseModel& noise, bool exact,
              bool bootstrap, const OutputOptions& out) {
    require_sin_chi(sin_chi);
    const std::vector<double> grid = sim::phi_grid(phi_steps);
    const auto method = bootstrap ? sim::ErrorBarMethod::bootstrap : sim::ErrorBarMethod::analytic;

    std::vector<std::string> header = kCurveHeader;
    for (const char* extra : {"est_eps_a", "est_eps_b", "stderr_a", "stderr_b", "pA", "pB",
                              "pS_pp", "pS_pm", "pS_mp", "pS_pp_r2"}) {
        header.emplace_back(extra);
    }
    io::CsvWriter csv(header);
    io::SvgSeries s_ea{"eps_a", "black", {}};
    io::SvgSeries s_eb{"eps_b", "red", {}};
    io::SvgSeries s_est_a{"est_eps_a", "blue", {}};
    io::SvgSeries s_est_b{"est_eps_b", "orange", {}};

    if (sin_chi < tolerances().structural) {
        // Degenerate sweep: both approximations are perfect everywhere.
        for (double phi : grid) {
            emit_curve_cells(csv, curve_row(sin_chi, phi));
            csv.value(0.0).value(0.0).value(0.0).value(0.0);
            for (int i = 0; i < 6; ++i) {
                csv.empty();
            }
            csv.end_row();
        }
    } else {
        const sim::SweepDataset ds = sim::sweep(sin_chi, grid, noise, exact, method);
        for (const sim::SweepPoint& p : ds.points) {
            const CurveRow row = curve_row(sin_chi, p.tp.phi);
            emit_curve_cells(csv, row);
            csv.value(p.est.eps_a.value)
                .value(p.est.eps_b.value)
                .value(p.est.eps_a.std_err)
                .value(p.est.eps_b.std_err);
            if (p.est.rho1) {
                csv.value(p.est.rho1->p_target);
            } else {
                csv.empty();
            }
            if (p.est.rho2) {
                csv.value(p.est.rho2->p_target);
            } else {
                csv.empty();
            }
            if (p.est.rho1) {
                csv.value(p.est.rho1->p_s_plus).value(p.est.rho1->p_s_minus);
            } else {
                csv.empty().empty();
            }
            if (p.est.rho2) {
                csv.value(1.0 - p.est.rho2->p_s_minus).value(p.est.rho2->p_s_plus);
            } else {
                csv.empty().empty();
            }
            csv.end_row();
            s_ea.points.emplace_back(p.tp.phi, p.tp.eps_a);
            s_eb.points.emplace_back(p.tp.phi, p.tp.eps_b);
            s_est_a.points.emplace_back(p.tp.phi, p.est.eps_a.value);
            s_est_b.points.emplace_back(p.tp.phi, p.est.eps_b.value);
        }
    }
    csv.write_file(out.out_path);

    std::vector<std::string> outputs{out.out_path};
    if (out.svg) {
        io::write_svg(out.out_path + ".svg", "simulated error trade-off",
                      {s_ea, s_eb, s_est_a, s_est_b});
        outputs.push_back(out.out_path + ".svg");
    }
    if (out.manifest) {
        io::write_manifest(
            "simulate",
            {io::ManifestParam::number("sin_chi", sin_chi),
             io::ManifestParam::integer("phi_steps", static_cast<std::uint64_t>(phi_steps)),
             io::ManifestParam::number("prep_fidelity", noise.prep_fidelity),
             io::ManifestParam::number("detection_flip", noise.detection_flip),
             io::ManifestParam::number("depolarize", noise.depolarize),
             io::ManifestParam::integer("shots", noise.shots),
             io::ManifestParam::integer("seed", noise.seed),
             io::ManifestParam::boolean("exact", exact),
             io::ManifestParam::boolean("bootstrap", bootstrap),
             io::ManifestParam::boolean("svg", out.svg)},
            outputs);
    }
}

void oracle_scan(double sin_chi, int n_ea, double grid_res, const OutputOptions& out) {
    require_sin_chi(sin_chi);
    const auto [a, b] = sim::canonical_targets(sin_chi);
    const oracle::RegionScan scan = oracle::scan_region(a, b, n_ea, grid_res);

    io::CsvWriter csv({"eps_a", "min_eps_b", "analytic_eps_b", "deviation", "witness_cx",
                       "witness_cy", "witness_cz", "witness_dx", "witness_dy", "witness_dz",
                       "witness_f"});
    io::SvgSeries s_scan{"scan", "blue", {}};
    io::SvgSeries s_analytic{"analytic", "black", {}};
    for (const oracle::ScanPoint& p : scan.boundary) {
        const double analytic = oracle::analytic_eps_b_for_eps_a(scan.sin_chi, p.eps_a);
        csv.value(p.eps_a)
            .value(p.min_eps_b)
            .value(analytic)
            .value(p.min_eps_b - analytic)
            .value(p.witness_c.x)
            .value(p.witness_c.y)
            .value(p.witness_c.z)
            .value(p.witness_d.x)
            .value(p.witness_d.y)
            .value(p.witness_d.z)
            .value(compat_functional(p.witness_c, p.witness_d));
        csv.end_row();
        s_scan.points.emplace_back(p.eps_a, p.min_eps_b);
        s_analytic.points.emplace_back(p.eps_a, analytic);
    }
    csv.write_file(out.out_path);

    std::vector<std::string> outputs{out.out_path};
    if (out.svg) {
        io::write_svg(out.out_path + ".svg", "admissible-region boundary scan",
                      {s_scan, s_analytic});
        outputs.push_back(out.out_path + ".svg");
    }
    if (out.manifest) {
        io::write_manifest("oracle",
                           {io::ManifestParam::number("sin_chi", sin_chi),
                            io::ManifestParam::integer("n_ea", static_cast<std::uint64_t>(n_ea)),
                            io::ManifestParam::number("grid_res", grid_res),
                            io::ManifestParam::boolean("svg", out.svg)},
                           outputs);
    }
}

void pulse_table(double sin_chi, int phi_steps, const OutputOptions& out) {
    require_sin_chi(sin_chi);
    const auto [a, b] = sim::canonical_targets(sin_chi);
    const std::vector<double> grid = sim::phi_grid(phi_steps);

    io::CsvWriter csv({"phi", "state", "setting", "status", "theta1", "phi1", "theta2", "phi2",
                       "p_unitary", "p_exact"});
    io::SvgSeries s_theta1{"theta1(rho1)", "black", {}};
    io::SvgSeries s_theta2{"theta2(S++)", "blue", {}};
    for (double phi : grid) {
        const std::vector<pulses::PulseProgram> programs = pulses::compile_experiment(a, b, phi);
        bool have_rho1 = false;
        bool have_rho2 = false;
        for (const pulses::PulseProgram& prog : programs) {
            have_rho1 = have_rho1 || prog.probe == pulses::Probe::rho1;
            have_rho2 = have_rho2 || prog.probe == pulses::Probe::rho2;
            const double p_unitary = pulses::detect_up_probability(prog);
            const double p_exact =
                prob(sharp_effect(prog.effect_dir, +1), QubitState{prog.state_vec});
            csv.value(phi)
                .text(pulses::probe_name(prog.probe))
                .text(pulses::setting_name(prog.label))
                .text("ok")
                .value(prog.prep.theta)
                .value(prog.prep.phase)
                .value(prog.measure.theta)
                .value(prog.measure.phase)
                .value(p_unitary)
                .value(p_exact);
            csv.end_row();
            if (prog.probe == pulses::Probe::rho1 && prog.label == pulses::Setting::a_plus) {
                s_theta1.points.emplace_back(phi, prog.prep.theta);
            }
            if (prog.probe == pulses::Probe::rho1 &&
                prog.label == pulses::Setting::s_plus_plus) {
                s_theta2.points.emplace_back(phi, prog.measure.theta);
            }
        }
        // A perfectly approximated side has no witness state; its settings
        // are marked instead of compiled.
        auto emit_degenerate = [&csv, phi](const char* state, const char* setting) {
            csv.value(phi).text(state).text(setting).text("degenerate");
            for (int i = 0; i < 6; ++i) {
                csv.empty();
            }
            csv.end_row();
        };
        if (!have_rho1) {
            for (const char* setting : {"A+", "S++", "S+-"}) {
                emit_degenerate("rho1", setting);
            }
        }
        if (!have_rho2) {
            for (const char* setting : {"B+", "S++", "S+-"}) {
                emit_degenerate("rho2", setting);
            }
        }
    }
    csv.write_file(out.out_path);

    std::vector<std::string> outputs{out.out_path};
    if (out.svg) {
        io::write_svg(out.out_path + ".svg", "compiled pulse angles", {s_theta1, s_theta2});
        outputs.push_back(out.out_path + ".svg");
    }
    if (out.manifest) {
        io::write_manifest(
            "pulses",
            {io::ManifestParam::number("sin_chi", sin_chi),
             io::ManifestParam::integer("phi_steps", static_cast<std::uint64_t>(phi_steps)),
             io::ManifestParam::boolean("svg", out.svg),
             // Physical scale of the angles: theta = Omega t at this Rabi rate.
             io::ManifestParam::number("rabi_frequency_khz", 54.0)},
            outputs);
    }
}

}  // namespace murlab::cmd
