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

#ifndef MURLAB_TOLERANCES_HPP
#define MURLAB_TOLERANCES_HPP

namespace murlab {

/// Two tolerance classes cover the whole library: `structural` guards
/// geometric invariants (unit norms, boundary membership), `arithmetic`
/// guards identities that hold exactly in real arithmetic.
struct Tolerances {
    double structural = 1e-9;
    double arithmetic = 1e-12;
};

/// Process-wide tolerance record. Mutable so a harness can tighten it at
/// startup; not meant to be changed while worker threads are running.
inline Tolerances& tolerances() {
    static Tolerances t;
    return t;
}

}  // namespace murlab

#endif
