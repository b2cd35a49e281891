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

// Brute-force reference for the truncated matrix-element equations: the full
// Lindblad master equation on spin (x) Fock{0..N},
//
//   d rho/dt = -i [H_I(t), rho] + kappa (n_th + 1) D[b] rho
//              + kappa n_th D[b^dagger] rho + gamma_a D[sigma_-] rho,
//
// with D[c] rho = c rho c^dagger - {c^dagger c, rho} / 2.
//
// H_I(t) = U(t) H' U(t)^dagger with H' = lambda_n (b^dagger sigma_- + b sigma_+)
// and U(t) = exp(i Delta t sigma_z / 2). All three dissipators are covariant
// under U, so rho_R = U^dagger rho U obeys the autonomous equation
// d rho_R/dt = L rho_R with Hamiltonian H' + Delta sigma_z / 2. The oracle
// propagates rho_R with the exact superoperator exponential exp(L h), sharing
// nothing with the Runge-Kutta route it checks.

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include "spinopto/density_matrix.hpp"
#include "spinopto/errors.hpp"
#include "spinopto/frame.hpp"

namespace spinopto {

/// Leakage bound on the highest retained Fock level.
inline constexpr double kCutoffLeakage = 1e-6;

struct OracleSample {
    DensityMatrix4 projected; ///< elements on {|up,0>, |down,0>, |down,1>}
    double rho22 = 0.0;       ///< population of |up,1>, outside the truncated support
    double top_level = 0.0;   ///< population of Fock level N (both spin states)
    double occupation = 0.0;  ///< <b^dagger b>
};

/// Full master equation on spin (x) Fock{0..cutoff}.
class FockLindblad {
public:
    using Matrix = Eigen::MatrixXcd;
    using Vector = Eigen::VectorXcd;

    FockLindblad(const SqueezedFrame& frame, const SystemParams& params, int fock_cutoff)
        : cutoff_(fock_cutoff), detuning_(frame.detuning) {
        if (fock_cutoff < 3)
            throw ParameterInvalid("fock_cutoff must be at least 3");
        if (!std::isfinite(params.mech_decay) || params.mech_decay < 0.0 ||
            !std::isfinite(params.spin_decay) || params.spin_decay < 0.0 ||
            !std::isfinite(params.thermal_occupation) || params.thermal_occupation < 0.0)
            throw ParameterInvalid("kappa, gamma_a and n_th must be finite and non-negative");
        const int levels = cutoff_ + 1;
        const int d = dim();
        Matrix b = Matrix::Zero(levels, levels);
        for (int k = 1; k < levels; ++k)
            b(k - 1, k) = std::sqrt(static_cast<double>(k));
        Matrix lower = Matrix::Zero(2, 2); // sigma_- = |down><up|, up = 0
        lower(1, 0) = 1.0;
        Matrix sz = Matrix::Zero(2, 2);
        sz(0, 0) = 1.0;
        sz(1, 1) = -1.0;
        const Matrix id_spin = Matrix::Identity(2, 2);
        const Matrix id_fock = Matrix::Identity(levels, levels);

        annihilate_ = Eigen::kroneckerProduct(id_spin, b).eval();
        const Matrix spin_lower = Eigen::kroneckerProduct(lower, id_fock).eval();
        const Matrix hamiltonian =
            frame.coupling * (annihilate_.adjoint() * spin_lower +
                              annihilate_ * spin_lower.adjoint()) +
            (0.5 * frame.detuning) * Eigen::kroneckerProduct(sz, id_fock).eval();

        const Matrix id = Matrix::Identity(d, d);
        // Column-major vec: vec(A X B) = (B^T (x) A) vec(X).
        liouvillian_ = std::complex<double>(0.0, -1.0) *
                       (Eigen::kroneckerProduct(id, hamiltonian).eval() -
                        Eigen::kroneckerProduct(hamiltonian.transpose(), id).eval());
        add_dissipator(params.mech_decay * (params.thermal_occupation + 1.0), annihilate_);
        add_dissipator(params.mech_decay * params.thermal_occupation, annihilate_.adjoint());
        add_dissipator(params.spin_decay, spin_lower);
    }

    int dim() const { return 2 * (cutoff_ + 1); }
    int cutoff() const { return cutoff_; }
    const Matrix& liouvillian() const { return liouvillian_; }

    /// Index of |spin, k> with spin 0 = up, 1 = down.
    int index(int spin, int k) const { return spin * (cutoff_ + 1) + k; }

    /// Embeds a truncated state in the full space (interaction picture).
    Matrix embed(const DensityMatrix4& r) const {
        Matrix rho = Matrix::Zero(dim(), dim());
        rho(index(0, 0), index(0, 0)) = r.rho11;
        rho(index(1, 0), index(1, 0)) = r.rho33;
        rho(index(1, 1), index(1, 1)) = r.rho44;
        rho(index(0, 0), index(1, 1)) = r.rho14;
        rho(index(1, 1), index(0, 0)) = std::conj(r.rho14);
        return rho;
    }

    /// Interaction-picture state -> rotating frame at time t, or back with
    /// `inverse`. Element (i, j) picks up u_i^* u_j with u_up = e^{i Delta t/2},
    /// u_down = e^{-i Delta t/2}.
    Matrix rotate(const Matrix& rho, double t, bool inverse) const {
        Matrix out = rho;
        const double sign = inverse ? 1.0 : -1.0;
        for (int j = 0; j < dim(); ++j)
            for (int i = 0; i < dim(); ++i) {
                const double si = i <= cutoff_ ? 1.0 : -1.0;
                const double sj = j <= cutoff_ ? 1.0 : -1.0;
                out(i, j) *= std::polar(1.0, sign * 0.5 * detuning_ * t * (si - sj));
            }
        return out;
    }

    OracleSample observe(const Matrix& rho, double t) const {
        OracleSample s;
        s.projected.rho11 = rho(index(0, 0), index(0, 0)).real();
        s.projected.rho33 = rho(index(1, 0), index(1, 0)).real();
        s.projected.rho44 = rho(index(1, 1), index(1, 1)).real();
        s.projected.rho14 = rho(index(0, 0), index(1, 1));
        s.projected.t = t;
        s.rho22 = rho(index(0, 1), index(0, 1)).real();
        s.top_level = rho(index(0, cutoff_), index(0, cutoff_)).real() +
                      rho(index(1, cutoff_), index(1, cutoff_)).real();
        s.occupation = (rho * annihilate_.adjoint() * annihilate_).trace().real();
        return s;
    }

    /// Propagates rho0 (at rho0.t) to each requested time (ascending,
    /// absolute). Throws CutoffTooSmall if the top Fock level ever holds more
    /// than kCutoffLeakage.
    std::vector<OracleSample> propagate(const DensityMatrix4& rho0,
                                        std::span<const double> times) const {
        const int d = dim();
        Matrix start = rotate(embed(rho0), rho0.t, false);
        Vector state = Eigen::Map<const Vector>(start.data(), d * d);
        std::vector<OracleSample> out;
        out.reserve(times.size());
        double now = rho0.t;
        double cached_step = -1.0;
        Matrix step;
        for (const double t : times) {
            const double h = t - now;
            if (h < 0.0)
                throw ParameterInvalid("oracle times must be ascending from rho0.t");
            if (h > 0.0) {
                // Grid times t0 + k h differ from a uniform step only by roundoff.
                if (std::abs(h - cached_step) > 1e-9 * h) {
                    step = (liouvillian_ * h).exp();
                    cached_step = h;
                }
                state = step * state;
            }
            now = t;
            const Matrix rho_r = Eigen::Map<const Matrix>(state.data(), d, d);
            OracleSample s = observe(rotate(rho_r, t, true), t);
            if (s.top_level > kCutoffLeakage) {
                char msg[128];
                std::snprintf(msg, sizeof msg, "population %.3g on Fock level %d at t=%.6g; raise fock_cutoff",
                              s.top_level, cutoff_, t);
                throw CutoffTooSmall(msg);
            }
            out.push_back(s);
        }
        return out;
    }

private:
    void add_dissipator(double rate, const Matrix& c) {
        if (rate == 0.0)
            return;
        const int d = dim();
        const Matrix id = Matrix::Identity(d, d);
        const Matrix cdc = c.adjoint() * c;
        liouvillian_ += rate * (Eigen::kroneckerProduct(c.conjugate(), c).eval() -
                                0.5 * Eigen::kroneckerProduct(id, cdc).eval() -
                                0.5 * Eigen::kroneckerProduct(cdc.transpose(), id).eval());
    }

    int cutoff_;
    double detuning_;
    Matrix annihilate_;
    Matrix liouvillian_;
};

/// Oracle samples at rho0.t + k * t_end / samples for k = 0..samples, the
/// same grid evolve() stores when its step count is `samples * stride`.
inline std::vector<OracleSample> fock_lindblad_oracle(const DensityMatrix4& rho0,
                                                      const SqueezedFrame& frame,
                                                      const SystemParams& params, double t_end,
                                                      int fock_cutoff, std::int64_t samples) {
    if (samples < 1 || !(t_end >= 0.0))
        throw ParameterInvalid("oracle needs at least one interval and t_end >= 0");
    const FockLindblad solver(frame, params, fock_cutoff);
    std::vector<double> times(static_cast<std::size_t>(samples + 1));
    const double h = t_end / static_cast<double>(samples);
    for (std::int64_t k = 0; k <= samples; ++k)
        times[static_cast<std::size_t>(k)] = rho0.t + static_cast<double>(k) * h;
    return solver.propagate(rho0, times);
}

} // namespace spinopto
