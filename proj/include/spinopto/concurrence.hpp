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

// Wootters concurrence of a two-qubit density matrix,
//
//     C = max(0, s1 - s2 - s3 - s4),
//
// where s_i are the descending square roots of the eigenvalues of
// rho (sy x sy) rho^* (sy x sy). Writing rho = B B^dagger, these s_i are
// exactly the singular values of the complex-symmetric matrix
// M = B^dagger (sy x sy) B^*, which is how they are computed here: forming
// the eigenvalues of the non-Hermitian product first and taking square roots
// turns roundoff of 1e-16 on a vanishing eigenvalue into 1e-8 in C.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Dense>

#include "spinopto/density_matrix.hpp"
#include "spinopto/errors.hpp"

namespace spinopto {

/// sy (x) sy in the computational basis |00>, |01>, |10>, |11>.
inline Eigen::Matrix4d spin_flip() {
    Eigen::Matrix4d y;
    y << 0, 0, 0, -1,
         0, 0, 1, 0,
         0, 1, 0, 0,
        -1, 0, 0, 0;
    return y;
}

/// Descending sqrt-eigenvalues of rho * rho~, the Wootters spectrum.
inline std::array<double, 4> wootters_spectrum(const Eigen::Matrix4cd& rho) {
    const Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> eig(rho);
    if (eig.info() != Eigen::Success)
        throw NotAState("eigen-decomposition of rho failed");
    const Eigen::Vector4d mu = eig.eigenvalues();
    // Eigenvalues at roundoff level are structural zeros; keeping them would
    // leak sqrt(1e-16) into the spectrum.
    const double floor = 64.0 * std::numeric_limits<double>::epsilon() *
                         std::max(1.0, mu.cwiseAbs().maxCoeff());
    Eigen::Matrix4cd factor = eig.eigenvectors();
    for (int i = 0; i < 4; ++i)
        factor.col(i) *= mu(i) > floor ? std::sqrt(mu(i)) : 0.0;
    const Eigen::Matrix4cd m =
        factor.adjoint() * spin_flip().cast<std::complex<double>>() * factor.conjugate();
    const Eigen::JacobiSVD<Eigen::Matrix4cd> svd(m);
    const Eigen::Vector4d s = svd.singularValues();
    std::array<double, 4> out{s(0), s(1), s(2), s(3)};
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

/// Concurrence of an arbitrary two-qubit density matrix. Throws NotAState
/// when rho is not Hermitian, not unit trace, or not positive semidefinite
/// within the DensityMatrix4 tolerances.
inline double wootters_concurrence(const Eigen::Matrix4cd& rho) {
    if (!rho.allFinite())
        throw NotAState("non-finite density matrix");
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > kTraceTolerance)
        throw NotAState("density matrix is not Hermitian");
    const double tr = rho.trace().real();
    if (std::abs(tr - 1.0) > kTraceTolerance)
        throw NotAState("trace " + std::to_string(tr));
    const Eigen::Matrix4cd herm = 0.5 * (rho + rho.adjoint());
    const Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> eig(herm, Eigen::EigenvaluesOnly);
    if (eig.eigenvalues().minCoeff() < -kPositivityTolerance)
        throw NotAState("negative eigenvalue " + std::to_string(eig.eigenvalues().minCoeff()));
    const auto s = wootters_spectrum(herm);
    return std::clamp(s[0] - s[1] - s[2] - s[3], 0.0, 1.0);
}

/// Concurrence of the truncated spin-phonon state, identifying the phonon
/// levels {0, 1} as the second qubit.
inline double concurrence_mixed(const DensityMatrix4& rho) {
    if (!is_physical(rho))
        throw NotAState(describe(rho));
    return wootters_concurrence(rho.to_matrix());
}

} // namespace spinopto
