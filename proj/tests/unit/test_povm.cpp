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
#include "murlab/povm.hpp"
#include "murlab/simlab.hpp"
#include "murlab/yuoh.hpp"
#include "test_util.hpp"

using namespace murlab;

namespace {
const BlochVector kA{0.0, 1.0, 0.0};
const BlochVector kB{0.0, std::sqrt(3.0) / 2.0, 0.5};
const double kSinChis[4] = {1.0, std::sqrt(2.0) / 2.0, 0.5, 1.0 / 3.0};

// f = 2 pairs with no special structure: random focus plus a random point
// of its compatibility ellipsoid surface.
std::pair<BlochVector, BlochVector> random_boundary_pair(std::mt19937_64& rng) {
    while (true) {
        const BlochVector c = test::random_in_ball(rng);
        const BlochVector d = ellipsoid_for(c).surface_point(
            test::kPi * test::next_unit(rng), 2.0 * test::kPi * test::next_unit(rng));
        if ((c + d).norm() > 1e-6 && (c - d).norm() > 1e-6) {
            return {c, d};
        }
    }
}
}  // namespace

TEST_CASE("joint POVM of the equal-error point is rank-1 with h = sqrt(2)/2") {
    const TradeoffPoint tp = optimal_vectors(kA, kB, test::kPi / 4.0);
    const JointPovm p = build_joint_povm(tp.c, tp.d);
    CHECK(p.h == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-12));
    CHECK(p.h == doctest::Approx(tp.h).epsilon(1e-12));
    for (const Effect& e : p.effects) {
        CHECK(std::abs(e.min_eigenvalue()) < 1e-9);  // rank-1: smaller eigenvalue 0
        CHECK(e.max_eigenvalue() <= 1.0 + 1e-12);
    }
}

TEST_CASE("marginals recover the approximator pair exactly") {
    const TradeoffPoint tp = optimal_vectors(kA, kB, 0.7);
    const Marginals m = marginals(build_joint_povm(tp.c, tp.d));
    CHECK(m.c_plus.c0 == doctest::Approx(0.5).epsilon(1e-14));
    CHECK((m.c_plus.m - tp.c * 0.5).norm() < 1e-14);
    CHECK((m.d_plus.m - tp.d * 0.5).norm() < 1e-14);
    CHECK(m.c_plus.c0 + m.c_minus.c0 == doctest::Approx(1.0).epsilon(1e-14));
    CHECK((m.c_plus.m + m.c_minus.m).norm() < 1e-14);
}

TEST_CASE("phi = 0 marginal is the sharp second target") {
    const TradeoffPoint tp = optimal_vectors(kA, kB, 0.0);
    const Marginals m = marginals(build_joint_povm(tp.c, tp.d));
    const Effect sharp_b = sharp_effect(kB, +1);
    CHECK(m.d_plus.c0 == doctest::Approx(sharp_b.c0).epsilon(1e-14));
    CHECK((m.d_plus.m - sharp_b.m).norm() < 1e-12);
}

TEST_CASE("outcome weights on the maximally mixed state are (1 +/- h)/4") {
    const TradeoffPoint tp = optimal_vectors(kA, kB, 0.9);
    const JointPovm p = build_joint_povm(tp.c, tp.d);
    const QubitState mixed{{0.0, 0.0, 0.0}};
    CHECK(prob(p.effect(+1, +1), mixed) == doctest::Approx(0.25 * (1.0 + p.h)).epsilon(1e-14));
    CHECK(prob(p.effect(+1, -1), mixed) == doctest::Approx(0.25 * (1.0 - p.h)).epsilon(1e-14));
    CHECK(prob(p.effect(-1, +1), mixed) == doctest::Approx(0.25 * (1.0 - p.h)).epsilon(1e-14));
    CHECK(prob(p.effect(-1, -1), mixed) == doctest::Approx(0.25 * (1.0 + p.h)).epsilon(1e-14));
}

TEST_CASE("sharp-direction decomposition") {
    SUBCASE("perpendicular equal norms give the diagonals") {
        const SDecomposition s = s_decomposition({0.5, 0, 0}, {0, 0.5, 0});
        CHECK((s.s_plus - BlochVector{std::sqrt(0.5), std::sqrt(0.5), 0.0}).norm() < 1e-12);
        CHECK((s.s_minus - BlochVector{std::sqrt(0.5), -std::sqrt(0.5), 0.0}).norm() < 1e-12);
    }
    SUBCASE("h = 0 splits the weights evenly") {
        const TradeoffPoint tp = optimal_vectors(kA, {0.0, 0.0, 1.0}, test::kPi / 4.0);
        const SDecomposition s = s_decomposition(tp.c, tp.d);
        CHECK(s.p_plus == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(s.p_minus == doctest::Approx(0.5).epsilon(1e-12));
    }
    SUBCASE("equal-error weight at chi = pi/6") {
        const TradeoffPoint tp = optimal_vectors(kA, kB, test::kPi / 4.0);
        const SDecomposition s = s_decomposition(tp.c, tp.d);
        CHECK(s.p_plus == doctest::Approx(0.853553390593274).epsilon(1e-12));
        CHECK(s.p_plus + s.p_minus == doctest::Approx(1.0));
    }
}

TEST_CASE("outcome probabilities factor through the sharp directions") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 200; ++i) {
        const auto [c, d] = random_boundary_pair(rng);
        const JointPovm p = build_joint_povm(c, d);
        const SDecomposition s = s_decomposition(c, d);
        const QubitState state{test::random_in_ball(rng)};
        for (int mu : {+1, -1}) {
            for (int nu : {+1, -1}) {
                const BlochVector dir = mu * nu > 0 ? s.s_plus : s.s_minus;
                const double weight = mu * nu > 0 ? (1.0 + p.h) : (1.0 - p.h);
                const double via_s = 0.5 * weight * prob(sharp_effect(dir, mu), state);
                CHECK(std::abs(prob(p.effect(mu, nu), state) - via_s) < 1e-12);
            }
        }
    }
}

TEST_CASE("worst-case states") {
    const TradeoffPoint tp = optimal_vectors(kA, kB, test::kPi / 4.0);
    const WorstCaseStates w = worst_case_states(kA, kB, tp.c, tp.d);
    REQUIRE(w.r1.has_value());
    REQUIRE(w.r2.has_value());
    CHECK(std::abs(w.r1->r.dot(w.r2->r)) < 1e-9);
    CHECK(w.r1->r.norm() == doctest::Approx(1.0).epsilon(1e-12));

    const WorstCaseStates perfect = worst_case_states(kA, kB, kA, kB * 0.5);
    CHECK(perfect.first_perfect());
    CHECK_FALSE(perfect.second_perfect());

    // phi = 0: r1 = (a - cos(chi) b)/sin(chi)
    const TradeoffPoint tp0 = optimal_vectors(kA, kB, 0.0);
    const WorstCaseStates w0 = worst_case_states(kA, kB, tp0.c, tp0.d);
    REQUIRE(w0.r1.has_value());
    CHECK(w0.second_perfect());
    const BlochVector expected = (kA - kB * (std::sqrt(3.0) / 2.0)) * (1.0 / 0.5);
    CHECK((w0.r1->r - expected).norm() < 1e-12);
}

TEST_CASE("squared Wasserstein-2 distance") {
    const BlochVector x{0.0, 1.0, 0.0};
    const BlochVector y{0.0, 0.6, 0.3};
    CHECK(wasserstein2_sq(x, x, QubitState{{0, 0, 1}}) == doctest::Approx(0.0));
    const BlochVector diff = x - y;
    const BlochVector perp = diff.cross({1, 0, 0}).normalized();
    CHECK(wasserstein2_sq(x, y, QubitState{perp}) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(wasserstein2_sq(x, y, QubitState{diff.normalized()}) ==
          doctest::Approx(2.0 * diff.norm()).epsilon(1e-12));
}

TEST_CASE("error extraction from statistics") {
    CHECK(owc_from_statistics(0.6, 0.8, 0.4, 0.0) ==
          doctest::Approx(2.0 * std::abs(0.6 - 0.5 * 0.8 - 0.5 * 0.4)).epsilon(1e-14));
    CHECK(owc_from_statistics(0.5 * 1.2 * 0.8 + 0.5 * 0.8 * 0.3, 0.8, 0.3, 0.2) ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK(owc_from_statistics(1.0, 0.0, 0.0, 0.0) == doctest::Approx(2.0));
    CHECK_THROWS_AS(owc_from_statistics(1.2, 0.5, 0.5, 0.0), Error);
    CHECK_THROWS_AS(owc_from_statistics(0.5, 0.5, 0.5, 1.5), Error);
}

TEST_CASE("exact statistics reproduce the closed-form errors across the grids") {
    for (double sc : kSinChis) {
        const auto [a, b] = sim::canonical_targets(sc);
        for (int i = 0; i < 50; ++i) {
            const double phi = test::kHalfPi * i / 49.0;
            const TradeoffPoint tp = optimal_vectors(a, b, phi);
            const SDecomposition s = s_decomposition(tp.c, tp.d);
            const WorstCaseStates w = worst_case_states(a, b, tp.c, tp.d);
            if (w.r1) {
                const double pa = prob(sharp_effect(a, +1), *w.r1);
                const double p1 = prob(sharp_effect(s.s_plus, +1), *w.r1);
                const double p2 = prob(sharp_effect(s.s_minus, +1), *w.r1);
                CHECK(std::abs(owc_from_statistics(pa, p1, p2, tp.h) - tp.eps_a) < 1e-12);
            }
            if (w.r2) {
                const double pb = prob(sharp_effect(b, +1), *w.r2);
                const double p1 = prob(sharp_effect(s.s_plus, +1), *w.r2);
                const double p2 = 1.0 - prob(sharp_effect(s.s_minus, +1), *w.r2);
                CHECK(std::abs(owc_from_statistics(pb, p1, p2, tp.h) - tp.eps_b) < 1e-12);
            }
        }
    }
}

TEST_CASE("statistics route equals the marginal route") {
    // 2 |p(A+) - p(C+)| on the worst-case state equals |a - c|
    const TradeoffPoint tp = optimal_vectors(kA, kB, 0.6);
    const Marginals m = marginals(build_joint_povm(tp.c, tp.d));
    const WorstCaseStates w = worst_case_states(kA, kB, tp.c, tp.d);
    REQUIRE(w.r1.has_value());
    const double pa = prob(sharp_effect(kA, +1), *w.r1);
    const double pc = prob(m.c_plus, *w.r1);
    CHECK(std::abs(2.0 * std::abs(pa - pc) - (kA - tp.c).norm()) < 1e-12);
}

TEST_CASE("structure holds on random boundary pairs") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 1000; ++i) {
        const auto [c, d] = random_boundary_pair(rng);
        const JointPovm p = build_joint_povm(c, d);
        double sum_c0 = 0.0;
        BlochVector sum_m{};
        for (const Effect& e : p.effects) {
            sum_c0 += e.c0;
            sum_m = sum_m + e.m;
            CHECK(e.min_eigenvalue() > -1e-9);
            CHECK(std::abs(e.min_eigenvalue()) < 1e-9);  // rank-1 saturation on f = 2
        }
        CHECK(std::abs(sum_c0 - 1.0) < 1e-12);
        CHECK(sum_m.norm() < 1e-12);
        const Marginals m = marginals(p);
        CHECK((m.c_plus.m - c * 0.5).norm() < 1e-12);
        CHECK((m.d_plus.m - d * 0.5).norm() < 1e-12);
    }
}

TEST_CASE("degenerate pairs are rejected") {
    try {
        build_joint_povm({0.3, 0, 0}, {0, 0.3, 0});
        FAIL("expected NotOnBoundary");
    } catch (const Error& e) {
        CHECK(e.kind() == errkind::not_on_boundary);
    }
    try {
        build_joint_povm({0, 1, 0}, {0, 1, 0});
        FAIL("expected DegenerateCD");
    } catch (const Error& e) {
        CHECK(e.kind() == errkind::degenerate_cd);
    }
    CHECK_THROWS_AS(s_decomposition({0, 1, 0}, {0, -1, 0}), Error);
}
