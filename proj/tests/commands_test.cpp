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
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "spinopto/commands.hpp"

namespace spinopto {
namespace {

RunConfig config(std::initializer_list<std::pair<const char*, const char*>> entries = {}) {
    ConfigBuilder b;
    for (const auto& [k, v] : entries)
        b.set(k, v);
    return b.build();
}

double cell(const CsvTable& t, std::size_t row, std::size_t col) { return std::stod(t.rows.at(row).at(col)); }

TEST(RunFig, ParsesIds) {
    EXPECT_EQ(parse_figure("fig6b"), FigureId::fig6b);
    EXPECT_THROW(parse_figure("fig7"), ConfigError);
}

TEST(RunFig, Fig2CouplingColumn) {
    const auto files = run_fig(FigureId::fig2, config());
    ASSERT_EQ(files.size(), 1u);
    const CsvTable& t = files[0].table;
    EXPECT_EQ(files[0].name, "fig2.csv");
    EXPECT_EQ(t.header, (std::vector<std::string>{"n", "lambda_n"}));
    ASSERT_EQ(t.rows.size(), 249u);
    EXPECT_EQ(t.rows[200][0], "20000");
    SystemParams p;
    p.photons = 20000;
    EXPECT_EQ(cell(t, 200, 1), build_frame(p).coupling);
    for (std::size_t i = 1; i < t.rows.size(); ++i)
        EXPECT_GT(cell(t, i, 1), cell(t, i - 1, 1));
}

TEST(RunFig, Fig3aResonantLaw) {
    const CsvTable t = run_fig(FigureId::fig3a, config())[0].table;
    EXPECT_EQ(t.header, (std::vector<std::string>{"T1", "concurrence"}));
    ASSERT_EQ(t.rows.size(), 2001u);
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        EXPECT_NEAR(cell(t, i, 1), std::abs(std::sin(2.0 * cell(t, i, 0))), 1e-10);
}

TEST(RunFig, Fig3bColumns) {
    const CsvTable t = run_fig(FigureId::fig3b, config())[0].table;
    ASSERT_EQ(t.header.size(), 3u);
    EXPECT_NEAR(cell(t, 0, 1), 0.0, 1e-12); // n = 0 valley at T1 = pi/2
    EXPECT_NEAR(cell(t, 200, 1), 0.0051141514535364678, 1e-12);
    EXPECT_NEAR(cell(t, 200, 2), 0.0033370311685441496, 1e-12);
}

TEST(RunFig, Fig6bThermalBaseline) {
    const CsvTable t = run_fig(FigureId::fig6b, config())[0].table;
    EXPECT_EQ(t.header, (std::vector<std::string>{"n", "var_ss_nth0", "var_ss_nth0.1", "threshold"}));
    EXPECT_EQ(cell(t, 0, 1), 1.0);
    EXPECT_DOUBLE_EQ(cell(t, 0, 2), 1.2);
    for (const auto& row : t.rows)
        EXPECT_EQ(row[3], "1");
    EXPECT_NEAR(cell(t, 240, 1), 0.2, 1e-12);
    EXPECT_NEAR(cell(t, 240, 2), 0.24, 1e-12);
}

TEST(RunFig, Fig4FilesPerPhotonNumber) {
    const auto files = run_fig(FigureId::fig4, config({{"t_end", "0.5"}}));
    ASSERT_EQ(files.size(), 3u);
    EXPECT_EQ(files[0].name, "fig4_n0.csv");
    EXPECT_EQ(files[2].name, "fig4_n24000.csv");
    const CsvTable& t = files[0].table;
    EXPECT_EQ(t.header, (std::vector<std::string>{"T", "rho11", "rho33", "rho44", "abs_rho14"}));
    EXPECT_EQ(t.rows.front()[0], "0");
    EXPECT_EQ(t.rows.back()[0], "0.5");
    EXPECT_NEAR(cell(t, 0, 1), 0.5, 1e-15);
}

TEST(RunFig, Fig5BothPanels) {
    const auto files = run_fig(FigureId::fig5, config({{"t_end", "0.2"}, {"n_list", "0,24000"}}));
    ASSERT_EQ(files.size(), 4u);
    EXPECT_EQ(files[0].name, "fig5a_n0.csv");
    EXPECT_EQ(files[3].name, "fig5b_n24000.csv");
    EXPECT_NEAR(cell(files[0].table, 0, 1), 1.0, 1e-12);
}

TEST(RunFig, Fig6aOracleColumn) {
    const CsvTable t = run_fig(FigureId::fig6a, config())[0].table;
    EXPECT_EQ(t.rows.back()[0], "5");
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        EXPECT_NEAR(cell(t, i, 1), cell(t, i, 2), 1e-8);
}

TEST(RunFig, DeterministicOutput) {
    const RunConfig c = config({{"t_end", "0.3"}});
    const auto a = run_fig(FigureId::fig4, c);
    const auto b = run_fig(FigureId::fig4, c);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        EXPECT_EQ(a[i].table.str(), b[i].table.str());
}

TEST(RunFig, DomainErrorsPropagate) {
    EXPECT_THROW(run_fig(FigureId::fig2, config({{"n_grid", "0,25000"}})), StabilityViolation);
}

TEST(RunSweep, StabilityBoundaryFlagged) {
    const CsvTable t = run_sweep(config({{"axis", "n"}, {"range", "0:1000:25000"}, {"quantity", "rwa_ratio"}}));
    EXPECT_EQ(t.header, (std::vector<std::string>{"n", "rwa_ratio", "error"}));
    ASSERT_EQ(t.rows.size(), 26u);
    EXPECT_EQ(t.rows.back(), (std::vector<std::string>{"25000", "", "StabilityViolation"}));
    EXPECT_EQ(t.rows[0][1], "2000");
    EXPECT_EQ(t.rows[24][2], "");
}

TEST(RunSweep, PrepTimeMatchesFig3a) {
    const RunConfig c = config({{"axis", "t1"}, {"range", "lin:0:2pi:2001"}, {"quantity", "concurrence_closed"}, {"n", "0"}});
    const CsvTable sweep = run_sweep(c);
    const CsvTable fig = run_fig(FigureId::fig3a, c)[0].table;
    ASSERT_EQ(sweep.rows.size(), fig.rows.size());
    for (std::size_t i = 0; i < fig.rows.size(); ++i) {
        EXPECT_EQ(sweep.rows[i][0], fig.rows[i][0]);
        EXPECT_EQ(sweep.rows[i][1], fig.rows[i][1]);
    }
}

TEST(RunSweep, ThermalSteadyVariance) {
    const CsvTable t = run_sweep(
        config({{"axis", "n_th"}, {"range", "1.0,0,0.5,0.1"}, {"quantity", "var_minus"}, {"n", "24000"}}));
    const double expected[] = {0.2, 0.24, 0.4, 0.6};
    ASSERT_EQ(t.rows.size(), 4u);
    EXPECT_EQ(t.rows[0][0], "0"); // sorted
    for (std::size_t i = 0; i < 4; ++i)
        EXPECT_NEAR(cell(t, i, 1), expected[i], 1e-12);
}

TEST(RunSweep, OpenTimeSweepSharesTrajectory) {
    const RunConfig c = config({{"axis", "t"}, {"range", "0,0.5,1"}, {"quantity", "concurrence_open"}, {"n", "0"}});
    const CsvTable t = run_sweep(c);
    ASSERT_EQ(t.rows.size(), 3u);
    EXPECT_NEAR(cell(t, 0, 1), 1.0, 1e-12);
    // Point-by-point evaluation agrees with the shared trajectory.
    const CsvTable single = run_sweep(SweepAxis::time, {1.0}, SweepQuantity::concurrence_open, c);
    EXPECT_EQ(single.rows[0][1], t.rows[2][1]);
}

TEST(RunSweep, ResonantChiIsAnErrorRow) {
    const CsvTable t = run_sweep(config({{"axis", "n"}, {"range", "0,20000"}, {"quantity", "chi"}}));
    EXPECT_EQ(t.rows[0][2], "ResonantDivergence");
    EXPECT_NEAR(cell(t, 1, 1), 0.0020225424859373686, 1e-15);
}

TEST(RunSweep, RejectsBadRequests) {
    EXPECT_THROW(run_sweep(config()), ConfigError);
    EXPECT_THROW(run_sweep(config({{"axis", "x"}, {"range", "0"}, {"quantity", "chi"}})), ConfigError);
    EXPECT_THROW(run_sweep(config({{"axis", "n"}, {"range", "0.5"}, {"quantity", "chi"}})), ConfigError);
}

TEST(RunOracle, ExactAtZeroTemperature) {
    const OracleComparison cmp = run_oracle(config({{"n", "0"}, {"n_th", "0"}, {"t_end", "2"}}));
    EXPECT_EQ(cmp.file.name, "oracle_n0.csv");
    EXPECT_EQ(cmp.file.table.rows.size(), 21u);
    EXPECT_LE(cmp.max_gap, 1e-10);
    EXPECT_LE(cmp.max_outside, 1e-14);
}

TEST(RunOracle, ThermalLeakageIsReported) {
    const OracleComparison cmp = run_oracle(config({{"n", "0"}, {"t_end", "2"}}));
    EXPECT_GT(cmp.max_gap, 1e-6);
    EXPECT_GT(cmp.max_outside, 0.0);
    EXPECT_THROW(run_oracle(config({{"n", "0"}, {"t_end", "3"}, {"fock_cutoff", "4"}})), CutoffTooSmall);
}

TEST(Validate, Examples) {
    const ValidationReport def = validate_config(config());
    ASSERT_TRUE(def.rwa);
    EXPECT_NEAR(*def.rwa, 598.13951248848822, 1e-9);
    EXPECT_TRUE(def.warnings.empty());

    const ValidationReport zero = validate_config(config({{"n", "0"}}));
    EXPECT_EQ(zero.frame->squeezing, 0.0);
    EXPECT_EQ(zero.stability_margin, 1.0);

    const ValidationReport edge = validate_config(config({{"n", "24999"}}));
    ASSERT_TRUE(edge.frame);
    EXPECT_NEAR(edge.stability_margin, 4e-5, 1e-15);
    EXPECT_FALSE(edge.warnings.empty());
    EXPECT_NE(format_report(edge).find("accepted with warnings"), std::string::npos);

    const ValidationReport bad = validate_config(config({{"n", "25000"}}));
    EXPECT_FALSE(bad.frame);
    EXPECT_NE(format_report(bad).find("rejected"), std::string::npos);
}

} // namespace
} // namespace spinopto
