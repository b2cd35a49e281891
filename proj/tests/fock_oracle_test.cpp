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

#include <algorithm>
#include <cmath>
#include <complex>
#include <iostream>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "spinopto/fock_oracle.hpp"
#include "spinopto/open_dynamics.hpp"

namespace spinopto {
namespace {

constexpr double pi = std::numbers::pi;

double elementwise_gap(const DensityMatrix4& a, const DensityMatrix4& b) {
    return std::max({std::abs(a.rho11 - b.rho11), std::abs(a.rho33 - b.rho33),
                     std::abs(a.rho44 - b.rho44), std::abs(a.rho14 - b.rho14)});
}

double max_gap(const OpenEvolutionTrace& tr, const std::vector<OracleSample>& oracle) {
    EXPECT_EQ(tr.samples.size(), oracle.size());
    double gap = 0.0;
    for (std::size_t i = 0; i < std::min(tr.samples.size(), oracle.size()); ++i) {
        EXPECT_NEAR(tr.samples[i].t, oracle[i].projected.t, 1e-12);
        gap = std::max(gap, elementwise_gap(tr.samples[i], oracle[i].projected));
    }
    return gap;
}

TEST(FockLindblad, RejectsTinyCutoff) {
    EXPECT_THROW(FockLindblad(frame_from_coupling(1.0, 0.0), SystemParams{}, 2), ParameterInvalid);
}

TEST(FockLindblad, GeneratorPreservesTrace) {
    const FockLindblad solver(build_frame(SystemParams{.photons = 20000}), SystemParams{}, 4);
    const int d = solver.dim();
    // The row of vec(I) annihilates every generator column: Tr(L rho) = 0.
    Eigen::VectorXcd vec_id = Eigen::VectorXcd::Zero(d * d);
    for (int i = 0; i < d; ++i)
        vec_id(i * d + i) = 1.0;
    EXPECT_LT((vec_id.transpose() * solver.liouvillian()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(FockLindblad, RotationRoundTrip) {
    const FockLindblad solver(frame_from_coupling(1.0, 37.0), SystemParams{}, 3);
    DensityMatrix4 r;
    r.rho11 = 0.5;
    r.rho44 = 0.5;
    r.rho14 = std::complex<double>(0.3, -0.2);
    const Eigen::MatrixXcd rho = solver.embed(r);
    EXPECT_LT((solver.rotate(solver.rotate(rho, 1.7, false), 1.7, true) - rho).cwiseAbs().maxCoeff(),
              1e-15);
}

TEST(FockOracle, AgreesWithMatrixElementsAtZeroTemperature) {
    for (const std::int64_t n : {0, 20000}) {
        SystemParams p{.thermal_occupation = 0.0, .photons = n};
        const SqueezedFrame f = build_frame(p);
        const DensityMatrix4 rho0 = prepare_initial_state(p, 0.25 * pi);
        const OpenEvolutionTrace tr = evolve(rho0, f, p, 2.0, max_step(f));
        const std::int64_t samples = static_cast<std::int64_t>(tr.samples.size()) - 1;
        const auto oracle = fock_lindblad_oracle(rho0, f, p, 2.0, 4, samples);
        EXPECT_LE(max_gap(tr, oracle), 1e-6) << "n=" << n;
        for (const OracleSample& s : oracle)
            EXPECT_NEAR(s.rho22, 0.0, 1e-14);
    }
}

TEST(FockOracle, ThermalTruncationDeviationIsMeasured) {
    SystemParams p{.photons = 0};
    const SqueezedFrame f = build_frame(p);
    const DensityMatrix4 rho0 = prepare_initial_state(p, 0.25 * pi);
    const OpenEvolutionTrace tr = evolve(rho0, f, p, 10.0, max_step(f));
    // Cutoff 6 leaks 1.8e-6 into its top level here; 7 stays below 1e-7.
    const auto oracle = fock_lindblad_oracle(rho0, f, p, 10.0, 7,
                                             static_cast<std::int64_t>(tr.samples.size()) - 1);
    const double gap = max_gap(tr, oracle);
    double leaked = 0.0;
    for (const OracleSample& s : oracle)
        leaked = std::max(leaked, s.rho22);
    std::cout << "[ measured ] n_th=0.1 max elementwise deviation " << gap
              << ", max population of |up,1> " << leaked << '\n';
    RecordProperty("thermal_truncation_deviation", std::to_string(gap));
    // Thermal pumping out of the manifold is real, so the two must differ.
    EXPECT_GT(gap, 1e-6);
    EXPECT_GT(leaked, 0.0);
}

TEST(FockOracle, ThermalFixedPoint) {
    const double n_th = 0.1;
    const int cutoff = 8;
    const SystemParams p{.spin_decay = 0.0, .thermal_occupation = n_th};
    const auto oracle = fock_lindblad_oracle(DensityMatrix4{}, frame_from_coupling(0.0, 0.0), p, 30.0,
                                             cutoff, 3);
    // Detailed balance on Fock{0..N} gives the geometric law cut at N.
    const double q = n_th / (n_th + 1.0);
    double norm = 0.0, mean = 0.0;
    for (int k = 0; k <= cutoff; ++k) {
        norm += std::pow(q, k);
        mean += k * std::pow(q, k);
    }
    EXPECT_NEAR(oracle.back().occupation, mean / norm, 1e-10);
    EXPECT_NEAR(oracle.back().occupation, n_th, 1e-6);
    EXPECT_NEAR(oracle.front().occupation, 0.0, 1e-15);
}

TEST(FockOracle, DetectsCutoffLeakage) {
    const SystemParams p{.spin_decay = 0.0, .thermal_occupation = 1.0};
    EXPECT_THROW(fock_lindblad_oracle(DensityMatrix4{}, frame_from_coupling(0.0, 0.0), p, 10.0, 3, 10),
                 CutoffTooSmall);
}

} // namespace
} // namespace spinopto
