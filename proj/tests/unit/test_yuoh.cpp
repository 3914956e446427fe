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

#include <doctest.h>

#include "murlab/compat.hpp"
#include "murlab/yuoh.hpp"
#include "test_util.hpp"

using namespace murlab;

namespace {
const BlochVector kA{0.0, 1.0, 0.0};
const BlochVector kB{0.0, std::sqrt(3.0) / 2.0, 0.5};  // chi = pi/6 against kA
const double kSinChis[4] = {1.0, std::sqrt(2.0) / 2.0, 0.5, 1.0 / 3.0};
}  // namespace

TEST_CASE("error pair endpoints and frozen interior value") {
    auto [ea0, eb0] = owc_errors(0.5, 0.0);
    CHECK(ea0 == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(eb0 == doctest::Approx(0.0).epsilon(1e-14));

    // equal-error point, cross-checked against (sqrt(1 + sin chi) - 1)/sqrt(2)
    auto [ea, eb] = owc_errors(0.5, test::kPi / 4.0);
    CHECK(ea == doctest::Approx(0.158918622597891).epsilon(1e-12));
    CHECK(eb == doctest::Approx(0.158918622597891).epsilon(1e-12));
    CHECK(ea == doctest::Approx((std::sqrt(1.5) - 1.0) / std::sqrt(2.0)).epsilon(1e-14));

    auto [za, zb] = owc_errors(0.0, 0.7);
    CHECK(za == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(zb == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("lower bound values") {
    CHECK(mur_lower_bound(1.0, test::kPi / 4.0) ==
          doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-14));
    CHECK(mur_lower_bound(0.7, 0.0) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(mur_lower_bound(0.5, test::kPi / 4.0) ==
          doctest::Approx(0.224744871391589).epsilon(1e-12));
}

TEST_CASE("additive bound values") {
    CHECK(additive_bound(1.0) == doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-14));
    CHECK(additive_bound(0.0) == doctest::Approx(0.0));
    CHECK(additive_bound(0.5) == doctest::Approx(0.317837245195782).epsilon(1e-12));
}

TEST_CASE("optimal vectors at the perfect-approximation endpoint") {
    const TradeoffPoint tp = optimal_vectors(kA, kB, 0.0);
    const double cos_chi = std::sqrt(3.0) / 2.0;
    CHECK((tp.c - kB * cos_chi).norm() < 1e-15);
    CHECK(tp.d.x == kB.x);
    CHECK(tp.d.y == kB.y);  // d = b exactly at phi = 0
    CHECK(tp.d.z == kB.z);
    CHECK(tp.eps_a == doctest::Approx(0.5).epsilon(1e-14));
    CHECK((kA - tp.c).norm() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(tp.u_d == doctest::Approx(0.0));
}

TEST_CASE("optimal vectors at the orthogonal symmetric point") {
    const TradeoffPoint tp = optimal_vectors(kA, {0.0, 0.0, 1.0}, test::kPi / 4.0);
    CHECK(tp.eps_a == doctest::Approx(1.0 - std::sqrt(2.0) / 2.0).epsilon(1e-12));
    CHECK(tp.eps_b == doctest::Approx(tp.eps_a).epsilon(1e-12));
    CHECK(tp.h == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("h at chi = pi/6 and phi = pi/4") {
    const TradeoffPoint tp = optimal_vectors(kA, kB, test::kPi / 4.0);
    CHECK(tp.h == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-12));
}

TEST_CASE("phi recovery from vectors") {
    // |b|^2 carries one ulp of error, which the square root near the
    // endpoint amplifies to ~1e-8
    const double cos_chi = std::sqrt(3.0) / 2.0;
    CHECK(std::abs(phi_from_vectors(kB * cos_chi, kB)) < 1e-7);

    for (int i = 0; i < 50; ++i) {
        const double phi = test::kHalfPi * (i + 0.5) / 51.0;
        const TradeoffPoint tp = optimal_vectors(kA, kB, phi);
        CHECK(phi_from_vectors(tp.c, tp.d) == doctest::Approx(phi).epsilon(1e-9));
    }

    // equal unsharpness lands on pi/4
    const TradeoffPoint sym = optimal_vectors(kA, {0.0, 0.0, 1.0}, test::kPi / 4.0);
    CHECK(phi_from_vectors(sym.c, sym.d) == doctest::Approx(test::kPi / 4.0).epsilon(1e-12));
}

TEST_CASE("trade-off relation saturates exactly along the curve") {
    for (double sc : kSinChis) {
        for (int i = 0; i < 200; ++i) {
            const double phi = test::kHalfPi * i / 199.0;
            const auto [ea, eb] = owc_errors(sc, phi);
            const double lhs = ea * std::sin(phi) + eb * std::cos(phi);
            CHECK(std::abs(lhs - mur_lower_bound(sc, phi)) < 1e-12);
        }
    }
}

TEST_CASE("peak error equals the incompatibility") {
    for (double sc : kSinChis) {
        double peak = 0.0;
        for (int i = 0; i < 200; ++i) {
            peak = std::max(peak, owc_errors(sc, test::kHalfPi * i / 199.0).first);
        }
        CHECK(std::abs(peak - sc) < 1e-9);
        CHECK(owc_errors(sc, 0.0).first == doctest::Approx(sc).epsilon(1e-14));
    }
}

TEST_CASE("sum of errors touches the additive bound at pi/4") {
    for (double sc : kSinChis) {
        double best = 1e300;
        int best_i = -1;
        for (int i = 0; i <= 200; ++i) {
            const auto [ea, eb] = owc_errors(sc, test::kHalfPi * i / 200.0);
            if (ea + eb < best) {
                best = ea + eb;
                best_i = i;
            }
        }
        CHECK(best_i == 100);
        CHECK(std::abs(best - additive_bound(sc)) < 1e-9);
    }
}

TEST_CASE("geometry of the constructed pair") {
    std::mt19937_64 rng(31);
    int checked = 0;
    while (checked < 100) {
        const BlochVector a = test::random_unit(rng);
        const BlochVector b = test::random_unit(rng);
        if (sin_chi(a, b) < 0.05) {
            continue;
        }
        ++checked;
        const double phi = test::kHalfPi * (0.05 + 0.9 * test::next_unit(rng));
        const TradeoffPoint tp = optimal_vectors(a, b, phi);

        // worst-case displacement directions are orthogonal
        CHECK(std::abs((a - tp.c).dot(b - tp.d)) < 1e-9);
        // c and d stay in span(a, b)
        const BlochVector n = a.cross(b).normalized();
        CHECK(std::abs(tp.c.dot(n)) < 1e-12);
        CHECK(std::abs(tp.d.dot(n)) < 1e-12);
        // h from norms equals the closed form
        CHECK(std::abs(0.5 * ((tp.c + tp.d).norm() - (tp.c - tp.d).norm()) - tp.h) < 1e-9);
        // errors match the vector distances
        CHECK((a - tp.c).norm() == doctest::Approx(tp.eps_a).epsilon(1e-9));
        CHECK((b - tp.d).norm() == doctest::Approx(tp.eps_b).epsilon(1e-9));
        // unsharpness angle relation
        CHECK(std::sin(phi) ==
              doctest::Approx(tp.u_d / std::hypot(tp.u_c, tp.u_d)).epsilon(1e-9));
    }
}

TEST_CASE("errors trade off monotonically") {
    for (double sc : {1.0, 0.5, 1.0 / 3.0}) {
        double prev_a = owc_errors(sc, 0.0).first;
        double prev_b = owc_errors(sc, 0.0).second;
        for (int i = 1; i <= 100; ++i) {
            const auto [ea, eb] = owc_errors(sc, test::kHalfPi * i / 100.0);
            CHECK(ea < prev_a);
            CHECK(eb > prev_b);
            prev_a = ea;
            prev_b = eb;
        }
    }
}

TEST_CASE("degenerate and out-of-range inputs") {
    try {
        optimal_vectors(kA, kA, 0.3);
        FAIL("expected DegenerateTargets");
    } catch (const Error& e) {
        CHECK(e.kind() == errkind::degenerate_targets);
    }
    CHECK_THROWS_AS(owc_errors(1.5, 0.0), Error);
    CHECK_THROWS_AS(owc_errors(0.5, -0.2), Error);
    CHECK_THROWS_AS(owc_errors(0.5, 2.0), Error);
    try {
        phi_from_vectors({0.2, 0, 0}, {0, 0.2, 0});  // far inside the boundary
        FAIL("expected NotOnBoundary");
    } catch (const Error& e) {
        CHECK(e.kind() == errkind::not_on_boundary);
    }
    try {
        phi_from_vectors({0, 1, 0}, {0, 1, 0});  // f = 2 but (c.d)^2 = 1
        FAIL("expected DegenerateDot");
    } catch (const Error& e) {
        CHECK(e.kind() == errkind::degenerate_dot);
    }
}
