// Copyright 2026 The spinopto Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include <Eigen/Dense>

#include "spinopto/errors.hpp"

namespace spinopto {

/// Tolerances a DensityMatrix4 must meet after integration.
inline constexpr double kTraceTolerance = 1e-8;
inline constexpr double kPositivityTolerance = 1e-9;

/// Density matrix on the truncated basis
///   |1> = |up,0>, |2> = |up,1>, |3> = |down,0>, |4> = |down,1>.
/// Only the X-shaped support generated from |up,0> is stored: rho22 is
/// identically zero and rho41 = conj(rho14).
struct DensityMatrix4 {
    double rho11 = 1.0;
    double rho33 = 0.0;
    double rho44 = 0.0;
    std::complex<double> rho14{0.0, 0.0};
    double t = 0.0;

    std::complex<double> rho41() const { return std::conj(rho14); }
    double trace() const { return rho11 + rho33 + rho44; }

    /// Smaller eigenvalue of the coherent block [[rho11, rho14], [rho41, rho44]].
    double block_min_eigenvalue() const {
        const double mean = 0.5 * (rho11 + rho44);
        const double half_gap = 0.5 * (rho11 - rho44);
        return mean - std::sqrt(half_gap * half_gap + std::norm(rho14));
    }

    /// Full 4x4 matrix in the two-qubit ordering spin (x) {phonon 0, 1}.
    Eigen::Matrix4cd to_matrix() const {
        Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
        m(0, 0) = rho11;
        m(2, 2) = rho33;
        m(3, 3) = rho44;
        m(0, 3) = rho14;
        m(3, 0) = rho41();
        return m;
    }
};

/// True when trace and positivity hold at the standard tolerances.
inline bool is_physical(const DensityMatrix4& r) {
    return std::isfinite(r.rho11) && std::isfinite(r.rho33) && std::isfinite(r.rho44) &&
           std::isfinite(r.rho14.real()) && std::isfinite(r.rho14.imag()) &&
           std::abs(r.trace() - 1.0) <= kTraceTolerance &&
           r.block_min_eigenvalue() >= -kPositivityTolerance && r.rho33 >= -kPositivityTolerance;
}

inline std::string describe(const DensityMatrix4& r) {
    return "t=" + std::to_string(r.t) + " trace=" + std::to_string(r.trace()) +
           " min_block_eig=" + std::to_string(r.block_min_eigenvalue()) +
           " rho33=" + std::to_string(r.rho33);
}

} // namespace spinopto
