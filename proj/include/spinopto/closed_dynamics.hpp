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

// Lossless evolution inside the single-excitation manifold {|up,0>, |down,1>}
// of the photon-dependent Jaynes-Cummings interaction
//
//     H_I = lambda_n (b^dagger sigma_- e^{-i Delta t} + b sigma_+ e^{i Delta t}).
//
// Starting from |up,0> the amplitudes are
//
//     c_up0(t)   = [cos(W t/2) - i (Delta/W) sin(W t/2)] e^{+i Delta t/2}
//     c_down1(t) = -i (Omega_n/W) sin(W t/2) e^{-i Delta t/2}
//
// with W = sqrt(Omega_n^2 + Delta^2). The e^{+-i Delta t/2} phases are kept:
// the open-system module seeds rho14 from these complex values.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "spinopto/errors.hpp"
#include "spinopto/frame.hpp"

namespace spinopto {

struct AmplitudePair {
    std::complex<double> up0{1.0, 0.0};   ///< c_{up,0}
    std::complex<double> down1{0.0, 0.0}; ///< c_{down,1}
    double t = 0.0;

    double norm_squared() const { return std::norm(up0) + std::norm(down1); }
};

inline AmplitudePair amplitudes(const SqueezedFrame& f, double t) {
    if (!(t >= 0.0))
        throw ParameterInvalid("evolution time must be non-negative");
    AmplitudePair a;
    a.t = t;
    const double w = f.generalized_rabi;
    if (w == 0.0)
        return a;
    using namespace std::complex_literals;
    const double half = 0.5 * w * t;
    const double s = std::sin(half);
    const double c = std::cos(half);
    const std::complex<double> phase = std::polar(1.0, 0.5 * f.detuning * t);
    a.up0 = (c - 1i * (f.detuning / w) * s) * phase;
    a.down1 = -1i * (f.rabi_frequency / w) * s * std::conj(phase);
    return a;
}

/// Pure-state concurrence 2 |c_up0 c_down1|.
inline double concurrence_pure(const AmplitudePair& a) {
    const double norm = a.norm_squared();
    if (!(std::abs(norm - 1.0) <= 1e-6))
        throw NormalizationError("|c_up0|^2 + |c_down1|^2 = " + std::to_string(norm));
    return std::min(1.0, 2.0 * std::abs(a.up0 * a.down1));
}

/// One entry of a photon-number sweep; `concurrence` is empty when the frame
/// could not be built and `error` says why.
struct PhotonConcurrence {
    std::int64_t photons = 0;
    std::optional<double> concurrence;
    std::optional<ErrorKind> error;
};

/// Concurrence after evolving for t1 in each n-photon frame. Unstable photon
/// numbers are reported per entry instead of aborting the sweep.
inline std::vector<PhotonConcurrence> concurrence_vs_photons(const SystemParams& params, double t1,
                                                             std::span<const std::int64_t> photons) {
    if (!(t1 >= 0.0))
        throw ParameterInvalid("t1 must be non-negative");
    std::vector<PhotonConcurrence> out;
    out.reserve(photons.size());
    for (const std::int64_t n : photons) {
        PhotonConcurrence entry;
        entry.photons = n;
        SystemParams p = params;
        p.photons = n;
        try {
            entry.concurrence = concurrence_pure(amplitudes(build_frame(p), t1));
        } catch (const Error& e) {
            entry.error = e.kind();
        }
        out.push_back(entry);
    }
    return out;
}

} // namespace spinopto
