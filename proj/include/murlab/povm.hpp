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

#ifndef MURLAB_POVM_HPP
#define MURLAB_POVM_HPP

#include <array>
#include <optional>

#include "murlab/bloch.hpp"

namespace murlab {

/// Four-outcome joint measurement whose marginals are the unsharp
/// observables with mean vectors c and d. Outcomes are indexed by a sign
/// pair (mu, nu); effect(mu, nu) = [(1 + mu nu h) I + (mu c + nu d).sigma]/4.
struct JointPovm {
    std::array<Effect, 4> effects;  // ordered (+,+), (+,-), (-,+), (-,-)
    double h = 0.0;
    BlochVector c;
    BlochVector d;

    static int index(int mu, int nu) { return (mu > 0 ? 0 : 2) + (nu > 0 ? 0 : 1); }
    const Effect& effect(int mu, int nu) const { return effects[static_cast<size_t>(index(mu, nu))]; }
};

/// The same joint measurement rewritten as two sharp directions with
/// weights: s_plus along c+d with weight p_plus = (1+h)/2, s_minus along
/// c-d with weight p_minus = (1-h)/2.
struct SDecomposition {
    BlochVector s_plus;
    BlochVector s_minus;
    double p_plus = 0.5;
    double p_minus = 0.5;
};

/// The two marginal observables of a joint POVM, in sharp-form pairs.
struct Marginals {
    Effect c_plus, c_minus;
    Effect d_plus, d_minus;
};

/// States that witness the worst-case errors: r1 along a-c, r2 along b-d.
/// A missing entry marks a perfect approximation on that side (the error is
/// exactly zero and no witness state exists).
struct WorstCaseStates {
    std::optional<QubitState> r1;
    std::optional<QubitState> r2;

    bool first_perfect() const { return !r1.has_value(); }
    bool second_perfect() const { return !r2.has_value(); }
};

/// Build the rank-1 joint POVM for a boundary pair (c,d). Requires
/// f(c,d) = 2 within 1e-6 and d != +/- c; h is recomputed from the pair as
/// (|c+d| - |c-d|)/2, the unique value making all four effects rank-1.
JointPovm build_joint_povm(const BlochVector& c, const BlochVector& d);

/// Marginal effects C+/- = M(+,+)+M(+,-) etc.; equal to (I +/- c.sigma)/2
/// and (I +/- d.sigma)/2 by construction.
Marginals marginals(const JointPovm& p);

/// Sharp-direction decomposition of the joint POVM for a pair (c,d) with
/// |c +/- d| bounded away from zero.
SDecomposition s_decomposition(const BlochVector& c, const BlochVector& d);

/// Worst-case witness states for target/approximator pairs.
WorstCaseStates worst_case_states(const BlochVector& a, const BlochVector& b,
                                  const BlochVector& c, const BlochVector& d);

/// Squared Wasserstein-2 distance between the outcome distributions of the
/// observables along x and y in state r: 2 |(x - y).r|.
double wasserstein2_sq(const BlochVector& x, const BlochVector& y, const QubitState& r);

/// Worst-case error from measured statistics:
///   eps = 2 | pA - (1+h)/2 pS1 - (1-h)/2 pS2 |.
/// pA is the target probability, pS1/pS2 the two sharp-direction
/// probabilities reconstructing the approximator marginal.
double owc_from_statistics(double p_a, double p_s1, double p_s2, double h);

}  // namespace murlab

#endif
