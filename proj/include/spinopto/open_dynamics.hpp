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

// Dissipative dynamics of the truncated spin-phonon state.
//
// With phonon decay kappa (bath occupation n_th) and spin decay gamma_a, the
// X-shaped density matrix generated from |up,0> obeys, in the interaction
// picture of the photon-dependent Jaynes-Cummings coupling,
//
//   d rho11/dt = -i lambda_n (e^{i Delta t} rho41 - e^{-i Delta t} rho14) - gamma_a rho11
//   d rho14/dt = -i lambda_n e^{i Delta t} (rho44 - rho11) - G rho14
//   d rho33/dt = kappa (n_th + 1) rho44 - kappa n_th rho33 + gamma_a rho11
//   d rho44/dt = +i lambda_n (e^{i Delta t} rho41 - e^{-i Delta t} rho14)
//                - kappa (n_th + 1) rho44 + kappa n_th rho33
//
// with G = [kappa (n_th + 1) + gamma_a] / 2 and rho41 = conj(rho14). These
// equations drop thermal pumping out of the manifold ({|up,1>, |down,2>});
// they are exact at n_th = 0. fock_oracle.hpp integrates the untruncated
// master equation for comparison.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "spinopto/closed_dynamics.hpp"
#include "spinopto/concurrence.hpp"
#include "spinopto/density_matrix.hpp"
#include "spinopto/errors.hpp"
#include "spinopto/frame.hpp"
#include "spinopto/rk4.hpp"

namespace spinopto {

struct OpenEvolutionTrace {
    std::vector<DensityMatrix4> samples;
    SystemParams params;
    SqueezedFrame frame;
    double dt = 0.0; ///< step actually used (may be below the requested one)
    std::int64_t sample_stride = 1;
};

struct EvolveOptions {
    std::int64_t sample_stride = 100; ///< keep every k-th step; 1 stores everything
};

/// Entangled state prepared by lossless evolution for t1 in the photon-free
/// frame, before the photons are injected. Its clock is reset to t = 0.
inline DensityMatrix4 prepare_initial_state(const SystemParams& params, double t1) {
    SystemParams p = params;
    p.photons = 0;
    const AmplitudePair a = amplitudes(build_frame(p), t1);
    DensityMatrix4 rho;
    rho.rho11 = std::norm(a.up0);
    rho.rho44 = std::norm(a.down1);
    rho.rho33 = 0.0;
    rho.rho14 = a.up0 * std::conj(a.down1);
    rho.t = 0.0;
    return rho;
}

/// Largest step evolve() accepts: min(1e-3, 1e-2 / Omega~_n) in units of 1/kappa.
inline double max_step(const SqueezedFrame& f) {
    double limit = 1e-3;
    if (f.generalized_rabi > 0.0)
        limit = std::min(limit, 1e-2 / f.generalized_rabi);
    return limit;
}

namespace detail {

using ElementVector = Eigen::Matrix<double, 5, 1>; // rho11, rho33, rho44, Re rho14, Im rho14

inline ElementVector pack(const DensityMatrix4& r) {
    ElementVector y;
    y << r.rho11, r.rho33, r.rho44, r.rho14.real(), r.rho14.imag();
    return y;
}

inline DensityMatrix4 unpack(const ElementVector& y, double t) {
    DensityMatrix4 r;
    r.rho11 = y(0);
    r.rho33 = y(1);
    r.rho44 = y(2);
    r.rho14 = {y(3), y(4)};
    r.t = t;
    return r;
}

inline void require_rates(const SystemParams& p) {
    if (!std::isfinite(p.mech_decay) || p.mech_decay < 0.0 || !std::isfinite(p.spin_decay) ||
        p.spin_decay < 0.0 || !std::isfinite(p.thermal_occupation) || p.thermal_occupation < 0.0)
        throw ParameterInvalid("kappa, gamma_a and n_th must be finite and non-negative");
}

/// Right-hand side of the matrix-element equations for a fixed frame.
struct MatrixElementRhs {
    double coupling;
    double detuning;
    double decay_down;  // kappa (n_th + 1)
    double pump_up;     // kappa n_th
    double spin_decay;  // gamma_a
    double dephasing;   // [kappa (n_th + 1) + gamma_a] / 2

    MatrixElementRhs(const SqueezedFrame& f, const SystemParams& p)
        : coupling(f.coupling), detuning(f.detuning),
          decay_down(p.mech_decay * (p.thermal_occupation + 1.0)),
          pump_up(p.mech_decay * p.thermal_occupation), spin_decay(p.spin_decay),
          dephasing(0.5 * (decay_down + spin_decay)) {}

    ElementVector operator()(double t, const ElementVector& y) const {
        const std::complex<double> rot = std::polar(1.0, detuning * t);
        const std::complex<double> rho14{y(3), y(4)};
        // e^{iDt} rho41 - e^{-iDt} rho14 = 2i Im(e^{iDt} rho41)
        const double exchange = 2.0 * coupling * (rot * std::conj(rho14)).imag();
        const std::complex<double> d14 =
            std::complex<double>(0.0, -coupling) * rot * (y(2) - y(0)) - dephasing * rho14;
        ElementVector dy;
        dy(0) = exchange - spin_decay * y(0);
        dy(1) = decay_down * y(2) - pump_up * y(1) + spin_decay * y(0);
        dy(2) = -exchange - decay_down * y(2) + pump_up * y(1);
        dy(3) = d14.real();
        dy(4) = d14.imag();
        return dy;
    }
};

inline std::int64_t round_up(std::int64_t value, std::int64_t multiple) {
    return ((value + multiple - 1) / multiple) * multiple;
}

} // namespace detail

/// RK4 integration of the matrix-element equations without the step-size
/// policy of evolve(); used for convergence studies. The step count is
/// rounded up to a multiple of the stride so samples are uniform in time and
/// the last one sits exactly on rho0.t + t_end.
inline OpenEvolutionTrace integrate_matrix_elements(const DensityMatrix4& rho0,
                                                    const SqueezedFrame& frame,
                                                    const SystemParams& params, double t_end,
                                                    double dt, EvolveOptions options = {}) {
    if (!(dt > 0.0) || !std::isfinite(dt))
        throw StepTooLarge("dt must be positive");
    if (!(t_end >= 0.0) || !std::isfinite(t_end))
        throw ParameterInvalid("t_end must be finite and non-negative");
    if (options.sample_stride < 1)
        throw ParameterInvalid("sample stride must be at least 1");
    detail::require_rates(params);

    OpenEvolutionTrace trace;
    trace.params = params;
    trace.frame = frame;
    trace.sample_stride = options.sample_stride;
    const std::int64_t steps =
        detail::round_up(step_count(t_end, dt), options.sample_stride);
    trace.dt = steps > 0 ? t_end / static_cast<double>(steps) : dt;
    trace.samples.reserve(static_cast<std::size_t>(steps / options.sample_stride + 1));

    const detail::MatrixElementRhs rhs(frame, params);
    const double t0 = rho0.t;
    detail::ElementVector y = detail::pack(rho0);
    trace.samples.push_back(rho0);
    for (std::int64_t k = 0; k < steps; ++k) {
        y = rk4_step(rhs, t0 + static_cast<double>(k) * trace.dt, y, trace.dt);
        if ((k + 1) % options.sample_stride == 0)
            trace.samples.push_back(detail::unpack(y, t0 + static_cast<double>(k + 1) * trace.dt));
    }
    return trace;
}

/// Open-system evolution of rho0 for a duration t_end in the given frame.
///
/// Throws StepTooLarge when dt exceeds max_step(frame) and InvariantBreach
/// when a stored sample loses unit trace or positivity, which only happens
/// for a misconfigured integration.
inline OpenEvolutionTrace evolve(const DensityMatrix4& rho0, const SqueezedFrame& frame,
                                 const SystemParams& params, double t_end, double dt,
                                 EvolveOptions options = {}) {
    const double limit = max_step(frame);
    if (!(dt > 0.0) || dt > limit * (1.0 + 1e-12))
        throw StepTooLarge("dt = " + std::to_string(dt) + " exceeds " + std::to_string(limit));
    if (!is_physical(rho0))
        throw NotAState("initial state: " + describe(rho0));
    OpenEvolutionTrace trace = integrate_matrix_elements(rho0, frame, params, t_end, dt, options);
    for (const DensityMatrix4& s : trace.samples)
        if (!is_physical(s))
            throw InvariantBreach(describe(s));
    return trace;
}

/// Like evolve(), but returns the state at each requested time (ascending,
/// measured from rho0.t), integrating segment by segment with steps no
/// larger than dt.
inline std::vector<DensityMatrix4> evolve_at(const DensityMatrix4& rho0, const SqueezedFrame& frame,
                                             const SystemParams& params,
                                             std::span<const double> times, double dt) {
    const double limit = max_step(frame);
    if (!(dt > 0.0) || dt > limit * (1.0 + 1e-12))
        throw StepTooLarge("dt = " + std::to_string(dt) + " exceeds " + std::to_string(limit));
    if (!std::is_sorted(times.begin(), times.end()) || (!times.empty() && times.front() < 0.0))
        throw ParameterInvalid("evaluation times must be ascending and non-negative");
    detail::require_rates(params);
    const detail::MatrixElementRhs rhs(frame, params);
    std::vector<DensityMatrix4> out;
    out.reserve(times.size());
    detail::ElementVector y = detail::pack(rho0);
    double elapsed = 0.0;
    for (const double target : times) {
        y = rk4_integrate(rhs, rho0.t + elapsed, y, target - elapsed, dt,
                          [](std::int64_t, double, const detail::ElementVector&) {});
        elapsed = target;
        DensityMatrix4 s = detail::unpack(y, rho0.t + target);
        if (!is_physical(s))
            throw InvariantBreach(describe(s));
        out.push_back(s);
    }
    return out;
}

struct ConcurrenceSeries {
    std::int64_t photons = 0;
    std::vector<double> times;
    std::vector<double> concurrence;
    std::optional<ErrorKind> error;
};

/// Prepare for t1 without photons, inject n photons, evolve for t_end and
/// record the Wootters concurrence of every stored sample. `dt = 0` selects
/// max_step() of each frame.
inline std::vector<ConcurrenceSeries> concurrence_trace(const SystemParams& params, double t1,
                                                        double t_end,
                                                        std::span<const std::int64_t> photons,
                                                        double dt = 0.0,
                                                        EvolveOptions options = {}) {
    const DensityMatrix4 rho0 = prepare_initial_state(params, t1);
    std::vector<ConcurrenceSeries> out;
    for (const std::int64_t n : photons) {
        ConcurrenceSeries series;
        series.photons = n;
        SystemParams p = params;
        p.photons = n;
        try {
            const SqueezedFrame f = build_frame(p);
            const OpenEvolutionTrace tr = evolve(rho0, f, p, t_end, dt > 0.0 ? dt : max_step(f), options);
            series.times.reserve(tr.samples.size());
            series.concurrence.reserve(tr.samples.size());
            for (const DensityMatrix4& s : tr.samples) {
                series.times.push_back(s.t);
                series.concurrence.push_back(concurrence_mixed(s));
            }
        } catch (const Error& e) {
            // Domain rejections are per photon number; broken numerics are not.
            if (exit_code(e.kind()) != 2)
                throw;
            series.error = e.kind();
            series.times.clear();
            series.concurrence.clear();
        }
        out.push_back(std::move(series));
    }
    return out;
}

} // namespace spinopto
