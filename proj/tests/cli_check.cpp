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

// End-to-end checks of the installed CLI: spawns the real binary, inspects
// exit codes, CSV bytes, and manifest sidecars.
// Usage: cli_check <murlab-binary> <scratch-dir> fast|verify

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

int g_failures = 0;
std::string g_bin;
fs::path g_dir;

void check(bool ok, const std::string& what) {
    std::printf("[cli] %s  %s\n", ok ? "PASS" : "FAIL", what.c_str());
    if (!ok) {
        ++g_failures;
    }
}

int run(const std::string& args) {
    const std::string cmd = g_bin + " " + args + " > " + (g_dir / "stdout.txt").string() +
                            " 2> " + (g_dir / "stderr.txt").string();
    const int rc = std::system(cmd.c_str());
    if (rc == -1) {
        return -1;
    }
    return WEXITSTATUS(rc);
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Csv {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    int col(const std::string& name) const {
        for (size_t i = 0; i < header.size(); ++i) {
            if (header[i] == name) {
                return static_cast<int>(i);
            }
        }
        return -1;
    }
    double num(size_t row, const std::string& name) const {
        return std::stod(rows[row][static_cast<size_t>(col(name))]);
    }
    const std::string& cell(size_t row, const std::string& name) const {
        return rows[row][static_cast<size_t>(col(name))];
    }
};

Csv parse_csv(const fs::path& path) {
    Csv csv;
    std::ifstream in(path);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            cells.push_back(cell);
        }
        if (line.size() && line.back() == ',') {
            cells.push_back("");
        }
        if (first) {
            csv.header = cells;
            first = false;
        } else {
            csv.rows.push_back(cells);
        }
    }
    return csv;
}

void check_curve() {
    const fs::path out = g_dir / "curve.csv";
    check(run("curve --sin-chi 1 --phi-steps 201 --out " + out.string()) == 0,
          "curve exits 0");
    Csv csv = parse_csv(out);
    check(csv.header ==
              std::vector<std::string>{"phi", "eps_a", "eps_b", "bound_eq1", "sum_ab",
                                       "bound_eq2", "h", "u_c", "u_d"},
          "curve header matches the schema");
    check(csv.rows.size() == 201, "curve row count equals phi steps");
    // the row at phi = pi/4 carries the additive-bound value
    const double sum_mid = csv.num(100, "sum_ab");
    check(std::abs(sum_mid - 0.585786437626905) < 1e-9, "sum at pi/4 equals 2 - sqrt(2)");

    // locale-independent formatting: no decimal commas anywhere
    check(slurp(out).find(",,") == std::string::npos, "no empty numeric cells in curve output");

    const fs::path two = g_dir / "curve2.csv";
    check(run("curve --sin-chi 0.5 --phi-steps 2 --out " + two.string()) == 0,
          "two-step curve exits 0");
    Csv c2 = parse_csv(two);
    check(c2.rows.size() == 2 && std::abs(c2.num(0, "eps_a") - 0.5) < 1e-12 &&
              std::abs(c2.num(0, "eps_b")) < 1e-12 && std::abs(c2.num(1, "eps_b") - 0.5) < 1e-12,
          "two-step curve is exactly the endpoints");

    // peak of eps_a equals sin chi
    const fs::path half = g_dir / "curve_half.csv";
    run("curve --sin-chi 0.5 --phi-steps 101 --out " + half.string());
    Csv ch = parse_csv(half);
    double peak = 0.0;
    for (size_t i = 0; i < ch.rows.size(); ++i) {
        peak = std::max(peak, ch.num(i, "eps_a"));
    }
    check(std::abs(peak - 0.5) < 1e-12, "peak eps_a column equals 0.5 at sin chi = 0.5");

    // --chi spelling and mutual exclusion
    check(run("curve --chi 0.5235987755982988 --phi-steps 3 --out " + (g_dir / "c3.csv").string()) == 0,
          "--chi spelling accepted");
    Csv c3 = parse_csv(g_dir / "c3.csv");
    check(std::abs(c3.num(0, "eps_a") - 0.5) < 1e-9, "--chi pi/6 maps to sin chi 0.5");
    check(run("curve --chi 0.5 --sin-chi 0.5 --out " + (g_dir / "c4.csv").string()) != 0,
          "--chi and --sin-chi are mutually exclusive");
    check(run("curve --phi-steps 3 --out " + (g_dir / "c5.csv").string()) == 1,
          "missing angle is a domain error (exit 1)");
}

void check_simulate() {
    const fs::path out1 = g_dir / "sim1.csv";
    const fs::path out2 = g_dir / "sim2.csv";
    check(run("simulate --sin-chi 0.5 --phi-steps 13 --seed 7 --out " + out1.string()) == 0,
          "simulate exits 0");
    check(run("simulate --sin-chi 0.5 --phi-steps 13 --seed 7 --out " + out2.string()) == 0,
          "simulate rerun exits 0");
    check(slurp(out1) == slurp(out2), "fixed seed gives identical bytes");

    const fs::path out3 = g_dir / "sim3.csv";
    run("simulate --sin-chi 0.5 --phi-steps 13 --seed 8 --out " + out3.string());
    check(slurp(out1) != slurp(out3), "different seed changes the dataset");

    Csv csv = parse_csv(out1);
    check(csv.col("est_eps_a") >= 0 && csv.col("stderr_b") >= 0 && csv.col("pA") >= 0 &&
              csv.col("pB") >= 0 && csv.col("pS_pp") >= 0 && csv.col("pS_pm") >= 0 &&
              csv.col("pS_mp") >= 0,
          "simulate header carries the estimate columns");
    // degenerate endpoints: exact zero error, empty probability cells
    check(csv.cell(0, "pB").empty() && csv.num(0, "est_eps_b") == 0.0 &&
              csv.num(0, "stderr_b") == 0.0,
          "phi = 0 reports the perfect side as exact zero");
    check(csv.cell(12, "pA").empty() && csv.num(12, "est_eps_a") == 0.0,
          "phi = pi/2 reports the perfect side as exact zero");
    // propagated standard errors stay under the binomial envelope
    bool stderr_ok = true;
    for (size_t i = 0; i < csv.rows.size(); ++i) {
        const double h = csv.num(i, "h");
        const double cap = 0.0025 * 2.0 * (1.0 + std::abs(h));
        stderr_ok = stderr_ok && csv.num(i, "stderr_a") <= cap && csv.num(i, "stderr_b") <= cap;
    }
    check(stderr_ok, "stderr columns stay below 2(1+|h|) x 0.0025");

    // exact mode equals the analytic columns
    const fs::path exact = g_dir / "sim_exact.csv";
    run("simulate --sin-chi 0.5 --phi-steps 13 --exact --out " + exact.string());
    Csv ce = parse_csv(exact);
    bool equal = true;
    for (size_t i = 0; i < ce.rows.size(); ++i) {
        equal = equal && std::abs(ce.num(i, "est_eps_a") - ce.num(i, "eps_a")) < 1e-12 &&
                std::abs(ce.num(i, "est_eps_b") - ce.num(i, "eps_b")) < 1e-12;
    }
    check(equal, "--exact reproduces the analytic columns");

    // config file and flag precedence
    const fs::path cfg = g_dir / "noise.cfg";
    std::ofstream(cfg) << "shots = 1000\nseed = 5\nprep_fidelity = 0.95\n";
    const fs::path out4 = g_dir / "sim4.csv";
    check(run("simulate --sin-chi 0.5 --phi-steps 3 --config " + cfg.string() +
              " --shots 500 --out " + out4.string()) == 0,
          "simulate with config exits 0");
    const auto manifest = nlohmann::json::parse(slurp(out4.string() + ".manifest.json"));
    check(manifest["parameters"]["shots"] == 500, "flags override the config file");
    check(manifest["parameters"]["seed"] == 5, "config overrides the defaults");
    check(std::abs(manifest["parameters"]["prep_fidelity"].get<double>() - 0.95) < 1e-12,
          "noise values reach the manifest");

    // bootstrap error bars stay in the same range as the analytic ones
    const fs::path boot = g_dir / "sim_boot.csv";
    check(run("simulate --sin-chi 0.5 --phi-steps 5 --seed 7 --bootstrap --out " +
              boot.string()) == 0,
          "bootstrap simulate exits 0");
    Csv cb = parse_csv(boot);
    const double ratio = cb.num(2, "stderr_a") / csv.num(6, "stderr_a");
    check(ratio > 0.3 && ratio < 3.0, "bootstrap error bars are the same scale as analytic");
}

void check_manifest_rerun() {
    const fs::path out = g_dir / "rerun1.csv";
    run("simulate --sin-chi 1 --phi-steps 7 --seed 11 --out " + out.string());
    const auto manifest = nlohmann::json::parse(slurp(out.string() + ".manifest.json"));
    check(manifest["outputs"][0]["path"] == out.string(), "manifest lists its output");

    // reconstruct the command line from the manifest parameters
    const auto& p = manifest["parameters"];
    std::ostringstream cmd;
    cmd << "simulate --sin-chi " << p["sin_chi"].get<double>() << " --phi-steps "
        << p["phi_steps"].get<int>() << " --seed " << p["seed"].get<std::uint64_t>()
        << " --shots " << p["shots"].get<std::uint64_t>();
    const fs::path out2 = g_dir / "rerun2.csv";
    check(run(cmd.str() + " --out " + out2.string()) == 0, "manifest rerun exits 0");
    check(slurp(out) == slurp(out2), "manifest rerun reproduces identical bytes");
}

void check_pulses() {
    const fs::path out = g_dir / "pulses.csv";
    check(run("pulses --sin-chi 0.5 --phi-steps 5 --out " + out.string()) == 0,
          "pulses exits 0");
    Csv csv = parse_csv(out);
    bool b_rows_ok = true;
    bool saw_b = false;
    bool round_trip_ok = true;
    int degenerate_rows = 0;
    for (size_t i = 0; i < csv.rows.size(); ++i) {
        if (csv.cell(i, "status") == "degenerate") {
            ++degenerate_rows;
            continue;
        }
        if (csv.cell(i, "setting") == "B+") {
            saw_b = true;
            b_rows_ok = b_rows_ok &&
                        std::abs(csv.num(i, "theta2") - 1.0471975511965976) < 1e-9 &&
                        std::abs(csv.num(i, "phi2")) < 1e-12;
        }
        round_trip_ok =
            round_trip_ok && std::abs(csv.num(i, "p_unitary") - csv.num(i, "p_exact")) < 1e-9;
    }
    check(saw_b && b_rows_ok, "B+ rows carry theta2 = pi/3 and phi2 = 0");
    check(round_trip_ok, "unitary and coefficient probabilities agree row by row");
    check(degenerate_rows == 6, "both phi endpoints mark one skipped side each");
}

void check_oracle() {
    const fs::path out = g_dir / "oracle.csv";
    check(run("oracle --sin-chi 0.33333333333333331 --n-ea 8 --grid-res 0.002 --out " +
              out.string()) == 0,
          "oracle exits 0");
    Csv csv = parse_csv(out);
    check(csv.rows.size() == 8, "oracle row count equals n_ea");
    bool dev_ok = true;
    for (size_t i = 0; i < csv.rows.size(); ++i) {
        dev_ok = dev_ok && std::abs(csv.num(i, "deviation")) < 0.004;
    }
    check(dev_ok, "scan deviation column stays within 2 x grid resolution");

    const fs::path deg = g_dir / "oracle0.csv";
    check(run("oracle --sin-chi 0 --n-ea 8 --grid-res 0.002 --out " + deg.string()) == 0,
          "degenerate oracle exits 0");
    check(parse_csv(deg).rows.size() == 1, "compatible targets give a single boundary row");

    const fs::path o2 = g_dir / "oracle_rerun.csv";
    run("oracle --sin-chi 0.33333333333333331 --n-ea 8 --grid-res 0.002 --out " + o2.string());
    check(slurp(out) == slurp(o2), "oracle reruns are byte-identical");
}

void check_svg_and_exit_codes() {
    const fs::path out = g_dir / "with_plot.csv";
    check(run("curve --sin-chi 1 --phi-steps 9 --svg --out " + out.string()) == 0,
          "curve --svg exits 0");
    check(slurp(out.string() + ".svg").rfind("<svg", 0) == 0, "svg sidecar written");

    check(run("--version") == 0, "--version exits 0");
    check(run("curve --sin-chi 2 --out " + (g_dir / "bad.csv").string()) != 0,
          "out-of-range sin chi rejected");
    check(run("frobnicate") != 0, "unknown subcommand rejected");
    check(run("curve --sin-chi 1 --out /nonexistent_dir_for_murlab/x.csv") == 2,
          "unwritable output path exits 2");
    check(run("simulate --sin-chi 1 --config " + (g_dir / "missing.cfg").string() + " --out " +
              (g_dir / "x.csv").string()) == 2,
          "missing config file exits 2");
}

void check_verify() {
    const fs::path report = g_dir / "verify.json";
    check(run("verify --json --out " + report.string()) == 0, "verify exits 0");
    const auto parsed = nlohmann::json::parse(slurp(report));
    check(parsed["all_pass"] == true, "verify report says all_pass");
    check(parsed["criteria"].size() == 9, "verify report covers all nine criteria");

    // absurdly tight tolerance must fail with named criteria and exit 3
    const std::string env_cmd = "MURLAB_TOL=1e-18 " + g_bin + " verify --json --out " +
                                (g_dir / "verify_tight.json").string() + " > /dev/null 2>&1";
    const int rc = std::system(env_cmd.c_str());
    check(WEXITSTATUS(rc) == 3, "tightened tolerance makes verify exit 3");
    const auto tight = nlohmann::json::parse(slurp(g_dir / "verify_tight.json"));
    bool named_failure = false;
    for (const auto& c : tight["criteria"]) {
        if (c["pass"] == false && !c["name"].get<std::string>().empty()) {
            named_failure = true;
        }
    }
    check(named_failure, "failing criteria are reported by name");
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 4) {
        std::fprintf(stderr, "usage: cli_check <murlab-binary> <scratch-dir> fast|verify\n");
        return 2;
    }
    g_bin = argv[1];
    g_dir = argv[2];
    fs::create_directories(g_dir);
    const std::string mode = argv[3];

    if (mode == "fast") {
        check_curve();
        check_simulate();
        check_manifest_rerun();
        check_pulses();
        check_oracle();
        check_svg_and_exit_codes();
    } else if (mode == "verify") {
        check_verify();
    } else {
        std::fprintf(stderr, "unknown mode '%s'\n", mode.c_str());
        return 2;
    }

    if (g_failures > 0) {
        std::printf("cli_check %s: FAILED (%d)\n", mode.c_str(), g_failures);
        return 1;
    }
    std::printf("cli_check %s: OK\n", mode.c_str());
    return 0;
}
