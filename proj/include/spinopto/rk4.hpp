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

#include <cmath>
#include <cstdint>
#include <concepts>

namespace spinopto {

/// State types the stepper can advance: closed under addition and scaling by
/// a real step (Eigen fixed-size vectors qualify).
template <class S>
concept OdeState = requires(S a, S b, double h) {
    { a + h * b } -> std::convertible_to<S>;
};

/// One classical fourth-order Runge-Kutta step of dy/dt = rhs(t, y).
template <OdeState State, class Rhs>
    requires std::invocable<const Rhs&, double, const State&>
State rk4_step(const Rhs& rhs, double t, const State& y, double h) {
    const State k1 = rhs(t, y);
    const State k2 = rhs(t + 0.5 * h, State(y + (0.5 * h) * k1));
    const State k3 = rhs(t + 0.5 * h, State(y + (0.5 * h) * k2));
    const State k4 = rhs(t + h, State(y + h * k3));
    return State(y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4));
}

/// Number of equal steps of size <= max_step that cover `span` exactly.
inline std::int64_t step_count(double span, double max_step) {
    if (span <= 0.0)
        return 0;
    // Relative slack so that e.g. 10 / 1e-3 is 10000 steps, not 10001.
    const double ratio = span / max_step;
    const double rounded = std::round(ratio);
    if (std::abs(ratio - rounded) <= 1e-9 * rounded)
        return static_cast<std::int64_t>(rounded);
    return static_cast<std::int64_t>(std::ceil(ratio));
}

/// Fixed-step integration from t0 to t0 + span. `observe(k, t, y)` is called
/// for k = 0 (initial state) and after every step; step times are computed as
/// t0 + k h so long runs do not accumulate clock drift.
template <OdeState State, class Rhs, class Observer>
State rk4_integrate(const Rhs& rhs, double t0, State y, double span, double max_step,
                    Observer&& observe) {
    const std::int64_t steps = step_count(span, max_step);
    const double h = steps > 0 ? span / static_cast<double>(steps) : 0.0;
    observe(std::int64_t{0}, t0, y);
    for (std::int64_t k = 0; k < steps; ++k) {
        y = rk4_step(rhs, t0 + static_cast<double>(k) * h, y, h);
        observe(k + 1, t0 + static_cast<double>(k + 1) * h, y);
    }
    return y;
}

} // namespace spinopto
