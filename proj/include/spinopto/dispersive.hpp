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

// Large-detuning regime. For |Delta| >> lambda_n sqrt(<b^dagger b>) the
// spin-up projection of the interaction is the frequency shift
// H_up = chi b^dagger b with chi = lambda_n^2 / Delta, and the phonon mode
// obeys the Langevin equation
//
//     db/dt = -(kappa + i chi) b + sqrt(2 kappa) b_in,
//     <b_in^dagger(t) b_in(t')> = n_th delta(t - t').
//
// Starting from vacuum, the squeezed-frame quadrature variances are
//
//     <dX_+-^2>(t) = [1 + 2 n_th (1 - e^{-2 kappa t})] e^{+-2 r_n}.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "spinopto/errors.hpp"
#include "spinopto/frame.hpp"
#include "spinopto/rk4.hpp"

namespace spinopto {

struct VariancePoint {
    double t = 0.0;
    double var_plus = 1.0;  ///< <dX_+^2>
    double var_minus = 1.0; ///< <dX_-^2>
};

/// First and second moments of the phonon mode.
struct MomentState {
    std::complex<double> mean{0.0, 0.0}; ///< <b>
    double occupation = 0.0;             ///< <b^dagger b>
    std::complex<double> anomalous{0.0, 0.0}; ///< <b^2>
    double t = 0.0;
};

inline double dispersive_shift(const SqueezedFrame& f) {
    if (f.detuning == 0.0)
        throw ResonantDivergence("chi = lambda_n^2 / Delta diverges at Delta = 0");
    return f.coupling * f.coupling / f.detuning;
}

/// Oscillator frequency of the spin-up projection H_up = chi b^dagger b.
inline double effective_frequency(const SqueezedFrame& f) { return dispersive_shift(f); }

/// |Delta| / (lambda_n sqrt(max(occupation, 1))). Infinite when the spin is
/// decoupled.
inline double dispersive_validity(const SqueezedFrame& f, double occupation_estimate) {
    if (!(occupation_estimate >= 0.0))
        throw ParameterInvalid("occupation estimate must be non-negative");
    if (f.coupling == 0.0)
        return std::numeric_limits<double>::infinity();
    return std::abs(f.detuning) / (f.coupling * std::sqrt(std::max(occupation_estimate, 1.0)));
}

/// Quadrature variances from first and second moments; the squeezing of the
/// frame enters through the e^{+-2 r_n} factors.
inline VariancePoint quadrature_variances(const MomentState& m, double squeezing) {
    const std::complex<double> mean_dag = std::conj(m.mean);
    const double anom_sum = 2.0 * m.anomalous.real(); // <b^2> + <b^dagger 2>
    const double plus_mean = (mean_dag + m.mean).real();
    const std::complex<double> minus_mean = mean_dag - m.mean; // purely imaginary
    VariancePoint v;
    v.t = m.t;
    v.var_plus = (1.0 + 2.0 * m.occupation + anom_sum - plus_mean * plus_mean) *
                 std::exp(2.0 * squeezing);
    v.var_minus = (1.0 + 2.0 * m.occupation - anom_sum + (minus_mean * minus_mean).real()) *
                  std::exp(-2.0 * squeezing);
    return v;
}

/// Closed-form variances for an oscillator starting in vacuum.
inline VariancePoint variance_analytic(const SystemParams& params, const SqueezedFrame& frame,
                                       double t) {
    if (!(t >= 0.0))
        throw ParameterInvalid("time must be non-negative");
    const double thermal =
        1.0 + 2.0 * params.thermal_occupation * -std::expm1(-2.0 * params.mech_decay * t);
    return {t, thermal * std::exp(2.0 * frame.squeezing), thermal * std::exp(-2.0 * frame.squeezing)};
}

struct SteadyVariance {
    double var_minus = 1.0;
    bool squeezed = false; ///< below the vacuum level of one
};

inline SteadyVariance variance_steady(const SystemParams& params, const SqueezedFrame& frame) {
    const double v = (1.0 + 2.0 * params.thermal_occupation) * std::exp(-2.0 * frame.squeezing);
    return {v, v < 1.0};
}

/// Smallest photon number above which the steady state is squeezed,
/// (omega_b / 4 g) (1 - (1 + 2 n_th)^{-2}), as a real number.
inline double squeezing_threshold(const SystemParams& params) {
    const double thermal = 1.0 + 2.0 * params.thermal_occupation;
    return params.mech_frequency / (4.0 * params.quadratic_coupling) * (1.0 - 1.0 / (thermal * thermal));
}

struct MomentSample {
    MomentState moments;
    VariancePoint variances;
};

/// Integrates the moment equations implied by the Langevin equation from
/// vacuum:
///   d<b>/dt   = -(kappa + i chi) <b>
///   d<b+b>/dt = -2 kappa <b+b> + 2 kappa n_th
///   d<b^2>/dt = -2 (kappa + i chi) <b^2>
/// and assembles the quadrature variances. chi is zero on resonance, where
/// it only enters phases anyway. Stores every `stride`-th step.
inline std::vector<MomentSample> moment_oracle(const SystemParams& params, const SqueezedFrame& frame,
                                               double t_end, double dt, std::int64_t stride = 1) {
    if (!(dt > 0.0) || dt > 1e-3 * (1.0 + 1e-12))
        throw StepTooLarge("moment integration needs 0 < dt <= 1e-3");
    if (!(t_end >= 0.0) || stride < 1)
        throw ParameterInvalid("t_end must be non-negative and stride positive");
    const double kappa = params.mech_decay;
    const double n_th = params.thermal_occupation;
    const double chi = frame.detuning != 0.0 ? dispersive_shift(frame) : 0.0;
    const std::complex<double> damp{kappa, chi};

    using State = Eigen::Matrix<double, 5, 1>; // Re<b>, Im<b>, <b+b>, Re<b^2>, Im<b^2>
    const auto rhs = [&](double, const State& y) {
        const std::complex<double> mean{y(0), y(1)};
        const std::complex<double> anom{y(3), y(4)};
        const std::complex<double> d_mean = -damp * mean;
        const std::complex<double> d_anom = -2.0 * damp * anom;
        State dy;
        dy << d_mean.real(), d_mean.imag(), -2.0 * kappa * y(2) + 2.0 * kappa * n_th,
            d_anom.real(), d_anom.imag();
        return dy;
    };

    std::vector<MomentSample> out;
    const std::int64_t total = step_count(t_end, dt);
    rk4_integrate(rhs, 0.0, State(State::Zero()), t_end, dt,
                  [&](std::int64_t k, double t, const State& y) {
                      if (k % stride != 0 && k != total)
                          return;
                      MomentState m{{y(0), y(1)}, y(2), {y(3), y(4)}, t};
                      out.push_back({m, quadrature_variances(m, frame.squeezing)});
                  });
    return out;
}

} // namespace spinopto
