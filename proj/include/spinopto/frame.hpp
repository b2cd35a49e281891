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

// Photon-dependent squeezed frame of the spin-optomechanical Hamiltonian.
//
// Projecting the ancillary cavity onto the Fock state |n> turns the quadratic
// coupling -g n (b + b^dagger)^2 into a modified phonon potential. The
// Bogoliubov squeeze S(r_n) = exp[r_n (b^2 - b^dagger^2)] with
//
//     r_n = -1/4 ln(1 - 4 n g / omega_b)
//
// diagonalises it, leaving a Rabi model with
//
//     omega_n  = exp(-2 r_n) omega_b      (softened phonon frequency)
//     lambda_n = exp(r_n) lambda          (enhanced spin-phonon coupling)
//
// All rates are expressed in units of the phonon decay rate kappa.

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include "spinopto/errors.hpp"

namespace spinopto {

/// Bare model parameters. Defaults are the baseline of the squeezing and
/// entanglement figures: lambda = kappa, omega_b = 2000 kappa,
/// g = 1e-5 omega_b, Omega = omega_b, gamma_a = 0.1 kappa, n_th = 0.1.
struct SystemParams {
    double coupling = 1.0;            ///< lambda, spin-phonon coupling
    double mech_frequency = 2000.0;   ///< omega_b, bare phonon frequency
    double cavity_frequency = 0.0;    ///< omega_a; only a constant energy offset, never used
    double quadratic_coupling = 0.02; ///< g, quadratic optomechanical coupling
    double spin_frequency = 2000.0;   ///< Omega, spin transition frequency
    double mech_decay = 1.0;          ///< kappa, the unit rate
    double spin_decay = 0.1;          ///< gamma_a
    double thermal_occupation = 0.1;  ///< n_th
    std::int64_t photons = 0;         ///< n, Fock number of the ancillary cavity
};

/// 4 n g / omega_b; the frame exists only while this stays below one.
inline double squeeze_load(const SystemParams& p) noexcept {
    return 4.0 * static_cast<double>(p.photons) * p.quadratic_coupling / p.mech_frequency;
}

/// Distance to the confinement boundary, 1 - 4 n g / omega_b.
inline double stability_margin(const SystemParams& p) noexcept { return 1.0 - squeeze_load(p); }

inline void validate(const SystemParams& p) {
    auto finite = [](double v) { return std::isfinite(v); };
    if (!finite(p.coupling) || p.coupling <= 0.0)
        throw ParameterInvalid("lambda must be positive");
    if (!finite(p.mech_frequency) || p.mech_frequency <= 0.0)
        throw ParameterInvalid("omega_b must be positive");
    if (!finite(p.mech_decay) || p.mech_decay <= 0.0)
        throw ParameterInvalid("kappa must be positive");
    if (!finite(p.quadratic_coupling) || p.quadratic_coupling < 0.0)
        throw ParameterInvalid("g must be non-negative");
    if (!finite(p.spin_decay) || p.spin_decay < 0.0)
        throw ParameterInvalid("gamma_a must be non-negative");
    if (!finite(p.thermal_occupation) || p.thermal_occupation < 0.0)
        throw ParameterInvalid("n_th must be non-negative");
    if (!finite(p.spin_frequency) || !finite(p.cavity_frequency))
        throw ParameterInvalid("Omega and omega_a must be finite");
    if (p.photons < 0)
        throw ParameterInvalid("photon number must be non-negative");
}

/// Derived quantities of the n-photon frame.
struct SqueezedFrame {
    double squeezing = 0.0;        ///< r_n
    double mech_frequency = 0.0;   ///< omega_n
    double coupling = 0.0;         ///< lambda_n
    double detuning = 0.0;         ///< Delta = Omega - omega_n
    double rabi_frequency = 0.0;   ///< Omega_n = 2 lambda_n
    double generalized_rabi = 0.0; ///< sqrt(Omega_n^2 + Delta^2)
    std::optional<double> dispersive_shift; ///< chi = lambda_n^2 / Delta, absent on resonance
};

namespace detail {

inline SqueezedFrame complete_frame(double squeezing, double mech_frequency, double coupling,
                                    double detuning) {
    SqueezedFrame f;
    f.squeezing = squeezing;
    f.mech_frequency = mech_frequency;
    f.coupling = coupling;
    f.detuning = detuning;
    f.rabi_frequency = 2.0 * coupling;
    f.generalized_rabi = std::hypot(f.rabi_frequency, detuning);
    if (detuning != 0.0)
        f.dispersive_shift = coupling * coupling / detuning;
    return f;
}

} // namespace detail

/// Builds the squeezed frame for the photon number carried in `p`.
///
/// Throws StabilityViolation once 4 n g / omega_b reaches one (the photon
/// softened phonon potential stops confining and r_n diverges), and
/// ParameterInvalid for non-physical inputs.
inline SqueezedFrame build_frame(const SystemParams& p) {
    validate(p);
    const double load = squeeze_load(p);
    // A few ulps of slack so that the exact boundary n = omega_b / (4 g) is
    // rejected regardless of how g was rounded.
    if (load >= 1.0 - 4.0 * std::numeric_limits<double>::epsilon())
        throw StabilityViolation("4 n g / omega_b = " + std::to_string(load) + " >= 1");
    const double r = -0.25 * std::log1p(-load);
    const double omega_n = std::exp(-2.0 * r) * p.mech_frequency;
    const double lambda_n = std::exp(r) * p.coupling;
    return detail::complete_frame(r, omega_n, lambda_n, p.spin_frequency - omega_n);
}

/// A frame given directly by its Jaynes-Cummings coupling and detuning, for
/// studying the dynamics away from the photon-number parameterisation.
/// Squeezing and phonon frequency are left at zero.
inline SqueezedFrame frame_from_coupling(double coupling, double detuning) {
    if (!std::isfinite(coupling) || coupling < 0.0 || !std::isfinite(detuning))
        throw ParameterInvalid("coupling must be finite and non-negative, detuning finite");
    return detail::complete_frame(0.0, 0.0, coupling, detuning);
}

/// Rabi oscillation period, fixed as 1 / Omega~_n.
inline double rabi_period(const SqueezedFrame& f) {
    if (f.generalized_rabi <= 0.0)
        throw ZeroFrequency("generalized Rabi frequency vanishes (lambda_n = 0 and Delta = 0)");
    return 1.0 / f.generalized_rabi;
}

/// omega_n / lambda_n. Large values mean the counter-rotating terms are
/// negligible; the threshold is a caller policy.
inline double rwa_ratio(const SqueezedFrame& f) {
    if (f.coupling <= 0.0)
        throw ParameterInvalid("RWA ratio needs lambda_n > 0");
    return f.mech_frequency / f.coupling;
}

} // namespace spinopto
