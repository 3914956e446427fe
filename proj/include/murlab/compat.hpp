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

#ifndef MURLAB_COMPAT_HPP
#define MURLAB_COMPAT_HPP

#include "murlab/bloch.hpp"

namespace murlab {

/// For a fixed mean vector, the set of partner vectors that remain jointly
/// measurable with it is a prolate spheroid with foci at +/- the fixed
/// vector: major semi-axis 1 along it, minor semi-axis sqrt(1 - |focus|^2).
struct CompatEllipsoid {
    BlochVector focus;
    double major_semi_axis = 1.0;
    double minor_semi_axis = 1.0;

    /// Surface point at polar angle `theta` (from the focus direction) and
    /// azimuth `psi`. Every surface point x satisfies
    /// compat_functional(x, focus) == 2 exactly in real arithmetic.
    BlochVector surface_point(double theta, double psi) const;
};

/// Joint-measurability functional f(c,d) = |c+d| + |c-d|. Two unsharp qubit
/// observables with mean vectors c, d admit a joint measurement iff
/// f(c,d) <= 2.
double compat_functional(const BlochVector& c, const BlochVector& d);

/// True iff f(c,d) <= 2 + tol. The optimum of the error trade-off lives
/// exactly on f = 2, so the default slack admits boundary-saturating pairs.
bool is_jointly_measurable(const BlochVector& c, const BlochVector& d, double tol = 1e-9);

/// The compatibility region of partners for `fixed`, as an ellipsoid.
CompatEllipsoid ellipsoid_for(const BlochVector& fixed);

}  // namespace murlab

#endif
