/* Copyright 2026 The murlab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface of the murlab shared library.
 *
 * Conventions:
 *   - Every fallible function returns a murlab_status; results go through
 *     out-parameters. MURLAB_OK is 0.
 *   - On failure, murlab_last_error() returns a thread-local description of
 *     the most recent error on the calling thread.
 *   - Bloch vectors are double[3] in (x, y, z) order.
 *   - Datasets produced by the sweep and scan runners are returned as
 *     opaque handles that must be released with the matching _free call.
 */

#ifndef MURLAB_H
#define MURLAB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum murlab_status {
    MURLAB_OK = 0,
    MURLAB_ERR_DOMAIN = 1,   /* bad parameters or violated preconditions */
    MURLAB_ERR_IO = 2,       /* file system failure */
    MURLAB_ERR_VERIFY = 3,   /* a verification criterion failed */
    MURLAB_ERR_INTERNAL = 4  /* unexpected failure; see murlab_last_error() */
} murlab_status;

/* Library version, e.g. "0.1.0". */
const char* murlab_version(void);

/* Description of the last error raised on this thread; empty string if the
 * last call succeeded. The pointer stays valid until the next failing call
 * on the same thread. */
const char* murlab_last_error(void);

/* ---- closed-form analytics ------------------------------------------- */

/* Incompatibility |a x b| of two unit directions. */
murlab_status murlab_sin_chi(const double a[3], const double b[3], double* out);

/* Joint-measurability functional |c+d| + |c-d| (compatible iff <= 2). */
murlab_status murlab_compat_functional(const double c[3], const double d[3], double* out);

/* 1 if the pair is jointly measurable within tol, else 0. */
murlab_status murlab_jointly_measurable(const double c[3], const double d[3], double tol,
                                        int* out);

/* Optimal worst-case error pair at mixing angle phi in [0, pi/2]. */
murlab_status murlab_owc_errors(double sin_chi, double phi, double* eps_a, double* eps_b);

/* Tight lower bound sqrt(1 + sin_chi sin 2phi) - 1 of the trade-off family. */
murlab_status murlab_mur_lower_bound(double sin_chi, double phi, double* out);

/* Additive bound sqrt(2) (sqrt(1 + sin_chi) - 1) on eps_a + eps_b. */
murlab_status murlab_additive_bound(double sin_chi, double* out);

/* Outcome probability c0 + m.r of the effect (c0, m) on the state r. */
murlab_status murlab_effect_prob(double c0, const double m[3], const double r[3], double* out);

/* One point of the optimal trade-off construction. */
typedef struct murlab_tradeoff {
    double phi;
    double h;
    double eps_a;
    double eps_b;
    double u_c;
    double u_d;
    double c[3];
    double d[3];
} murlab_tradeoff;

murlab_status murlab_optimal_vectors(const double a[3], const double b[3], double phi,
                                     murlab_tradeoff* out);

/* Mixing angle of a boundary pair (f(c,d) = 2 required). */
murlab_status murlab_phi_from_vectors(const double c[3], const double d[3], double* out);

/* ---- joint measurement ------------------------------------------------ */

/* Rank-1 joint POVM of a boundary pair; effects ordered (+,+), (+,-),
 * (-,+), (-,-) with effect k equal to c0[k] I + m[k].sigma. */
typedef struct murlab_joint_povm {
    double h;
    double c0[4];
    double m[4][3];
} murlab_joint_povm;

murlab_status murlab_build_joint_povm(const double c[3], const double d[3],
                                      murlab_joint_povm* out);

/* Squared Wasserstein-2 distance 2 |(x-y).r|. */
murlab_status murlab_wasserstein2_sq(const double x[3], const double y[3], const double r[3],
                                     double* out);

/* Worst-case error from measured statistics:
 * 2 |p_a - (1+h)/2 p_s1 - (1-h)/2 p_s2|. */
murlab_status murlab_owc_from_statistics(double p_a, double p_s1, double p_s2, double h,
                                         double* out);

/* ---- pulse compilation ------------------------------------------------ */

/* Preparation pulse reaching the pure state r from the lower level. */
murlab_status murlab_prep_pulse(const double r[3], double* theta, double* phase);

/* Measurement pulse realizing the sharp effect along e. */
murlab_status murlab_measure_pulse(const double e[3], double* theta, double* phase);

/* Carrier-transition unitary as re/im parts, row-major 2x2. */
murlab_status murlab_carrier_unitary(double theta, double phase, double out_re[4],
                                     double out_im[4]);

/* ---- shot-noise simulation -------------------------------------------- */

typedef struct murlab_noise {
    double prep_fidelity;  /* default 0.987 */
    double detection_flip; /* default 0.0022 */
    double depolarize;     /* default 0 */
    uint64_t shots;        /* default 40000 */
    uint64_t seed;         /* default 42 */
} murlab_noise;

void murlab_noise_defaults(murlab_noise* noise);

/* Overlay key=value settings (prep_fidelity, detection_flip, depolarize,
 * shots, seed) from a plain-text config file. */
murlab_status murlab_noise_load(const char* path, murlab_noise* noise);

typedef struct murlab_sweep murlab_sweep; /* opaque */

typedef struct murlab_sweep_row {
    double phi;
    double h;
    double eps_a;     /* analytic curve */
    double eps_b;
    double u_c;
    double u_d;
    double est_eps_a; /* reconstructed from (simulated) statistics */
    double est_eps_b;
    double stderr_a;
    double stderr_b;
    int degenerate_a; /* 1 when the side is a perfect approximation */
    int degenerate_b;
    /* calibrated probability estimates; NAN on a degenerate side */
    double p_a;
    double p_b;
    double p_s_pp;    /* S++ on the first worst-case state */
    double p_s_pm;    /* S+- on the first worst-case state */
    double p_s_mp;    /* S-+ on the second worst-case state (complement) */
    double p_s_pp_r2; /* S++ on the second worst-case state */
} murlab_sweep_row;

/* Run a full sweep over a uniform phi grid. exact != 0 bypasses sampling. */
murlab_status murlab_sweep_run(double sin_chi, int phi_steps, const murlab_noise* noise,
                               int exact, murlab_sweep** out);
size_t murlab_sweep_size(const murlab_sweep* sweep);
murlab_status murlab_sweep_get(const murlab_sweep* sweep, size_t index, murlab_sweep_row* out);
void murlab_sweep_free(murlab_sweep* sweep);

/* ---- brute-force boundary scan ----------------------------------------- */

typedef struct murlab_scan murlab_scan; /* opaque */

typedef struct murlab_scan_row {
    double eps_a;
    double min_eps_b;
    double analytic_eps_b;
    double witness_c[3];
    double witness_d[3];
} murlab_scan_row;

murlab_status murlab_scan_run(double sin_chi, int n_ea, double grid_res, murlab_scan** out);
size_t murlab_scan_size(const murlab_scan* scan);
murlab_status murlab_scan_get(const murlab_scan* scan, size_t index, murlab_scan_row* out);
void murlab_scan_free(murlab_scan* scan);

/* ---- command layer (CSV + manifest sidecars) --------------------------- */

typedef struct murlab_cmd_options {
    const char* out_path;  /* required */
    int svg;               /* also write <out>.svg */
    int manifest;          /* write <out>.manifest.json (default on) */
} murlab_cmd_options;

void murlab_cmd_options_defaults(murlab_cmd_options* options);

murlab_status murlab_cmd_curve(double sin_chi, int phi_steps, const murlab_cmd_options* options);
murlab_status murlab_cmd_simulate(double sin_chi, int phi_steps, const murlab_noise* noise,
                                  int exact, int bootstrap,
                                  const murlab_cmd_options* options);
murlab_status murlab_cmd_oracle(double sin_chi, int n_ea, double grid_res,
                                const murlab_cmd_options* options);
murlab_status murlab_cmd_pulses(double sin_chi, int phi_steps,
                                const murlab_cmd_options* options);

/* Run the verification suite. Writes the report to report_path (or stdout
 * when NULL), as JSON when json_format != 0. Returns MURLAB_OK when every
 * criterion passes, MURLAB_ERR_VERIFY otherwise. */
murlab_status murlab_cmd_verify(int json_format, const char* report_path);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* MURLAB_H */
