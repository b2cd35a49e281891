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

#include <cmath>
#include <cstdint>
#include <vector>

#include <gtest/gtest.h>

#include "spinopto/frame.hpp"

namespace spinopto {
namespace {

SystemParams baseline(std::int64_t n) {
    SystemParams p;
    p.photons = n;
    return p;
}

TEST(Frame, NoPhotonsIsIdentity) {
    for (const double g : {0.0, 0.02, 5.0}) {
        SystemParams p = baseline(0);
        p.quadratic_coupling = g;
        const SqueezedFrame f = build_frame(p);
        EXPECT_EQ(f.squeezing, 0.0);
        EXPECT_EQ(f.mech_frequency, p.mech_frequency);
        EXPECT_EQ(f.coupling, p.coupling);
        EXPECT_EQ(f.detuning, 0.0);
        EXPECT_FALSE(f.dispersive_shift.has_value());
    }
}

TEST(Frame, ZeroQuadraticCouplingIsIdentity) {
    SystemParams p = baseline(24000);
    p.quadratic_coupling = 0.0;
    const SqueezedFrame f = build_frame(p);
    EXPECT_EQ(f.mech_frequency, p.mech_frequency);
    EXPECT_EQ(f.coupling, p.coupling);
}

// Frozen from a 40-digit evaluation of the closed forms.
TEST(Frame, TwentyThousandPhotons) {
    const SqueezedFrame f = build_frame(baseline(20000));
    EXPECT_NEAR(f.squeezing, 0.40235947810852509, 1e-14);
    EXPECT_NEAR(f.mech_frequency, 894.42719099991588, 1e-10);
    EXPECT_NEAR(f.coupling, 1.4953487812212205, 1e-13);
    EXPECT_NEAR(f.detuning, 1105.5728090000841, 1e-10);
    EXPECT_NEAR(f.rabi_frequency, 2.9906975624424411, 1e-13);
    EXPECT_NEAR(rwa_ratio(f), 598.13951248848822, 1e-9);
    EXPECT_NEAR(std::round(rwa_ratio(f)), 598.0, 0.0);
}

TEST(Frame, TwentyFourThousandPhotons) {
    const SqueezedFrame f = build_frame(baseline(24000));
    EXPECT_NEAR(rwa_ratio(f), 178.88543819998318, 1e-9);
    EXPECT_NEAR(f.mech_frequency, 400.0, 1e-10);
    EXPECT_NEAR(f.coupling, 2.2360679774997897, 1e-13);
}

TEST(Frame, StabilityBoundaryRejected) {
    EXPECT_THROW(build_frame(baseline(25000)), StabilityViolation);
    EXPECT_THROW(build_frame(baseline(30000)), StabilityViolation);
    EXPECT_NO_THROW(build_frame(baseline(24999)));
}

TEST(Frame, InvalidParameters) {
    SystemParams p = baseline(0);
    p.coupling = 0.0;
    EXPECT_THROW(build_frame(p), ParameterInvalid);
    p = baseline(0);
    p.mech_frequency = -1.0;
    EXPECT_THROW(build_frame(p), ParameterInvalid);
    p = baseline(0);
    p.mech_decay = 0.0;
    EXPECT_THROW(build_frame(p), ParameterInvalid);
    p = baseline(0);
    p.thermal_occupation = -0.1;
    EXPECT_THROW(build_frame(p), ParameterInvalid);
    p = baseline(-1);
    EXPECT_THROW(build_frame(p), ParameterInvalid);
}

TEST(Frame, ClosedFormsRecompute) {
    for (std::int64_t n = 0; n <= 24900; n += 300) {
        const SystemParams p = baseline(n);
        const SqueezedFrame f = build_frame(p);
        const double back = f.mech_frequency * std::exp(2.0 * f.squeezing);
        EXPECT_LE(std::abs(back - p.mech_frequency) / p.mech_frequency, 1e-12) << n;
        EXPECT_NEAR(f.coupling, std::exp(f.squeezing) * p.coupling, 1e-12 * f.coupling);
        const double w2 = f.generalized_rabi * f.generalized_rabi;
        const double parts = f.rabi_frequency * f.rabi_frequency + f.detuning * f.detuning;
        EXPECT_LE(std::abs(w2 - parts) / w2, 1e-12);
        EXPECT_GE(f.generalized_rabi, std::abs(f.detuning));
        EXPECT_GE(f.generalized_rabi, f.rabi_frequency);
        EXPECT_LE(f.mech_frequency, p.mech_frequency);
        EXPECT_GE(f.coupling, p.coupling);
    }
}

TEST(Frame, SqueezingStrictlyIncreasesWithPhotons) {
    double previous = -1.0;
    for (std::int64_t n = 0; n < 25000; n += 250) {
        const double r = build_frame(baseline(n)).squeezing;
        EXPECT_GT(r, previous) << n;
        previous = r;
    }
}

TEST(RabiPeriod, ResonantUnitCoupling) {
    const SqueezedFrame f = frame_from_coupling(1.0, 0.0);
    EXPECT_DOUBLE_EQ(rabi_period(f), 0.5);
}

TEST(RabiPeriod, TwentyThousandPhotons) {
    EXPECT_NEAR(rabi_period(build_frame(baseline(20000))), 9.0450518777752905e-4, 1e-15);
}

TEST(RabiPeriod, DecreasesWithPhotonNumber) {
    const std::vector<std::int64_t> ns{0, 5000, 10000, 20000, 24000};
    for (std::size_t i = 1; i < ns.size(); ++i)
        EXPECT_LT(rabi_period(build_frame(baseline(ns[i]))), rabi_period(build_frame(baseline(ns[i - 1]))));
}

TEST(RabiPeriod, DegenerateFrameThrows) {
    EXPECT_THROW(rabi_period(frame_from_coupling(0.0, 0.0)), ZeroFrequency);
}

TEST(RwaRatio, NoPhotons) {
    EXPECT_DOUBLE_EQ(rwa_ratio(build_frame(baseline(0))), 2000.0);
}

TEST(Frame, StabilityMargin) {
    EXPECT_DOUBLE_EQ(stability_margin(baseline(0)), 1.0);
    EXPECT_NEAR(stability_margin(baseline(24999)), 4e-5, 1e-15);
}

} // namespace
} // namespace spinopto
