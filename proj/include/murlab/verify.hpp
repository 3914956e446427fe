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

#ifndef MURLAB_VERIFY_HPP
#define MURLAB_VERIFY_HPP

#include <string>
#include <vector>

namespace murlab::verify {

struct CriterionResult {
    int index = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct Report {
    std::vector<CriterionResult> criteria;
    bool all_pass = false;
};

/// Run the full verification suite. Identity-class checks default to the
/// arithmetic tolerance (1e-12) and geometry-class checks to the structural
/// tolerance (1e-9); the environment variables MURLAB_TOL_ARITHMETIC,
/// MURLAB_TOL_STRUCTURAL and MURLAB_TOL (both at once) override them.
/// Statistical thresholds are fixed by the claims they test.
Report run_all();

std::string to_table(const Report& report);
std::string to_json(const Report& report);

}  // namespace murlab::verify

#endif
