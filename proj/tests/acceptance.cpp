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

// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. The criteria are implemented in the verification module; a few
// frozen reference values are additionally pinned here through the C API so
// the shared-library surface is exercised end to end.

#include <cmath>
#include <cstdio>
#include <string>

#include "murlab.h"
#include "murlab/verify.hpp"

namespace {

int g_failures = 0;

void check(bool ok, const std::string& what) {
    std::printf("[capi] %s  %s\n", ok ? "PASS" : "FAIL", what.c_str());
    if (!ok) {
        ++g_failures;
    }
}

void pinned_values_through_capi() {
    const double a[3] = {0.0, 1.0, 0.0};
    const double b[3] = {0.0, 0.8660254037844386, 0.5};
    const double pi4 = 0.7853981633974483;

    double sc = 0.0;
    check(murlab_sin_chi(a, b, &sc) == MURLAB_OK && std::abs(sc - 0.5) < 1e-12,
          "sin chi of the reference pair is 0.5");

    double ea = 0.0, eb = 0.0;
    murlab_owc_errors(0.5, pi4, &ea, &eb);
    check(std::abs(ea - 0.158918622597891) < 1e-12 && std::abs(eb - ea) < 1e-12,
          "equal-error point at sin chi = 0.5 is 0.158918622597891");

    double bound = 0.0;
    murlab_additive_bound(1.0, &bound);
    check(std::abs(bound - (2.0 - std::sqrt(2.0))) < 1e-12,
          "maximal additive bound is 2 - sqrt(2)");

    murlab_tradeoff tp;
    murlab_optimal_vectors(a, b, pi4, &tp);
    check(std::abs(tp.h - std::sqrt(0.5)) < 1e-12, "h at the equal-error point is sqrt(2)/2");

    double theta = 0.0, phase = 0.0;
    murlab_measure_pulse(b, &theta, &phase);
    check(std::abs(theta - 1.0471975511965976) < 1e-12 && phase == 0.0,
          "measurement pulse of the tilted target is (pi/3, 0)");
}

}  // namespace

int main() {
    pinned_values_through_capi();

    const murlab::verify::Report report = murlab::verify::run_all();
    std::fputs(murlab::verify::to_table(report).c_str(), stdout);

    if (!report.all_pass || g_failures > 0) {
        std::printf("acceptance: FAILED\n");
        return 1;
    }
    std::printf("acceptance: OK\n");
    return 0;
}
