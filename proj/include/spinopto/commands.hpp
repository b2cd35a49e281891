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

// Figure reproduction, generic sweeps and parameter validation. Everything
// here is a pure function of the RunConfig that returns CSV tables; the
// command-line tool only decides where they are written.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "spinopto/closed_dynamics.hpp"
#include "spinopto/concurrence.hpp"
#include "spinopto/config.hpp"
#include "spinopto/csv.hpp"
#include "spinopto/dispersive.hpp"
#include "spinopto/errors.hpp"
#include "spinopto/fock_oracle.hpp"
#include "spinopto/frame.hpp"
#include "spinopto/open_dynamics.hpp"

namespace spinopto {

enum class FigureId { fig2, fig3a, fig3b, fig4, fig5, fig6a, fig6b };

inline FigureId parse_figure(std::string_view name) {
    static constexpr std::pair<std::string_view, FigureId> table[] = {
        {"fig2", FigureId::fig2},   {"fig3a", FigureId::fig3a}, {"fig3b", FigureId::fig3b},
        {"fig4", FigureId::fig4},   {"fig5", FigureId::fig5},   {"fig6a", FigureId::fig6a},
        {"fig6b", FigureId::fig6b},
    };
    for (const auto& [key, id] : table)
        if (key == name)
            return id;
    throw ConfigError("unknown figure '" + std::string(name) + "'");
}

struct OutputFile {
    std::string name;
    CsvTable table;
};

namespace detail {

inline SystemParams with_photons(SystemParams p, std::int64_t n) {
    p.photons = n;
    return p;
}

inline double step_for(const RunConfig& c, const SqueezedFrame& f) {
    return c.dt > 0.0 ? c.dt : max_step(f);
}

inline OutputFile fig2(const RunConfig& c) {
    OutputFile out{"fig2.csv", {{"n", "lambda_n"}, {}}};
    for (const std::int64_t n : parse_photon_range(c.n_grid)) {
        const SqueezedFrame f = build_frame(with_photons(c.params, n));
        out.table.rows.push_back({format_integer(n), format_double(f.coupling)});
    }
    return out;
}

inline OutputFile fig3a(const RunConfig& c) {
    OutputFile out{"fig3a.csv", {{"T1", "concurrence"}, {}}};
    const SqueezedFrame f = build_frame(with_photons(c.params, 0));
    const auto grid =
        parse_range("lin:0:" + format_double(2.0 * std::numbers::pi) + ":" + format_integer(c.t_points));
    for (const double t1 : grid)
        out.table.rows.push_back({format_double(t1), format_double(concurrence_pure(amplitudes(f, t1)))});
    return out;
}

inline OutputFile fig3b(const RunConfig& c) {
    OutputFile out{"fig3b.csv", {{"n", "concurrence_T1_half_pi", "concurrence_T1_pi"}, {}}};
    for (const std::int64_t n : parse_photon_range(c.n_grid)) {
        const SqueezedFrame f = build_frame(with_photons(c.params, n));
        out.table.rows.push_back(
            {format_integer(n), format_double(concurrence_pure(amplitudes(f, 0.5 * std::numbers::pi))),
             format_double(concurrence_pure(amplitudes(f, std::numbers::pi)))});
    }
    return out;
}

inline std::vector<OutputFile> fig4(const RunConfig& c) {
    std::vector<OutputFile> files;
    const DensityMatrix4 rho0 = prepare_initial_state(c.params, c.t1);
    for (const std::int64_t n : parse_photon_range(c.n_list)) {
        const SystemParams p = with_photons(c.params, n);
        const SqueezedFrame f = build_frame(p);
        const OpenEvolutionTrace tr =
            evolve(rho0, f, p, c.t_end, step_for(c, f), {.sample_stride = c.effective_stride()});
        OutputFile out{"fig4_n" + format_integer(n) + ".csv",
                       {{"T", "rho11", "rho33", "rho44", "abs_rho14"}, {}}};
        out.table.rows.reserve(tr.samples.size());
        for (const DensityMatrix4& s : tr.samples)
            out.table.rows.push_back({format_double(s.t), format_double(s.rho11), format_double(s.rho33),
                                      format_double(s.rho44), format_double(std::abs(s.rho14))});
        files.push_back(std::move(out));
    }
    return files;
}

inline std::vector<OutputFile> fig5(const RunConfig& c) {
    std::vector<OutputFile> files;
    const std::pair<const char*, double> panels[] = {{"fig5a", 0.0},
                                                     {"fig5b", c.params.thermal_occupation}};
    for (const auto& [panel, n_th] : panels) {
        SystemParams base = c.params;
        base.thermal_occupation = n_th;
        const DensityMatrix4 rho0 = prepare_initial_state(base, c.t1);
        for (const std::int64_t n : parse_photon_range(c.n_list)) {
            const SystemParams p = with_photons(base, n);
            const SqueezedFrame f = build_frame(p);
            const OpenEvolutionTrace tr =
                evolve(rho0, f, p, c.t_end, step_for(c, f), {.sample_stride = c.effective_stride()});
            OutputFile out{std::string(panel) + "_n" + format_integer(n) + ".csv", {{"T", "concurrence"}, {}}};
            out.table.rows.reserve(tr.samples.size());
            for (const DensityMatrix4& s : tr.samples)
                out.table.rows.push_back({format_double(s.t), format_double(concurrence_mixed(s))});
            files.push_back(std::move(out));
        }
    }
    return files;
}

inline OutputFile fig6a(const RunConfig& c) {
    OutputFile out{"fig6a.csv", {{"T", "var_minus_analytic", "var_minus_oracle"}, {}}};
    const SqueezedFrame f = build_frame(c.params);
    const double dt = c.dt > 0.0 ? c.dt : 1e-3;
    for (const MomentSample& s : moment_oracle(c.params, f, c.t_end, dt, c.effective_stride())) {
        const VariancePoint exact = variance_analytic(c.params, f, s.variances.t);
        out.table.rows.push_back({format_double(s.variances.t), format_double(exact.var_minus),
                                  format_double(s.variances.var_minus)});
    }
    return out;
}

inline OutputFile fig6b(const RunConfig& c) {
    const std::string warm = format_double(c.params.thermal_occupation);
    OutputFile out{"fig6b.csv", {{"n", "var_ss_nth0", "var_ss_nth" + warm, "threshold"}, {}}};
    SystemParams cold = c.params;
    cold.thermal_occupation = 0.0;
    for (const std::int64_t n : parse_photon_range(c.n_grid)) {
        const SqueezedFrame f = build_frame(with_photons(c.params, n));
        out.table.rows.push_back({format_integer(n), format_double(variance_steady(cold, f).var_minus),
                                  format_double(variance_steady(c.params, f).var_minus), "1"});
    }
    return out;
}

} // namespace detail

/// Tables for one figure. fig3a uses n = 0, fig3b fixes T1 to pi/2 and pi,
/// fig5 adds an n_th = 0 panel; all other values come from the config.
inline std::vector<OutputFile> run_fig(FigureId id, const RunConfig& c) {
    switch (id) {
    case FigureId::fig2: return {detail::fig2(c)};
    case FigureId::fig3a: return {detail::fig3a(c)};
    case FigureId::fig3b: return {detail::fig3b(c)};
    case FigureId::fig4: return detail::fig4(c);
    case FigureId::fig5: return detail::fig5(c);
    case FigureId::fig6a: return {detail::fig6a(c)};
    case FigureId::fig6b: return {detail::fig6b(c)};
    }
    throw ConfigError("unhandled figure");
}

struct OracleComparison {
    OutputFile file;
    double max_gap = 0.0;      ///< largest elementwise |matrix elements - oracle|
    double max_outside = 0.0;  ///< largest oracle population of |up,1>
};

/// Runs the matrix-element integration and the full Fock-space master
/// equation side by side for the configured n, n_th and fock_cutoff, on the
/// same sample grid as fig4.
inline OracleComparison run_oracle(const RunConfig& c) {
    const SqueezedFrame f = build_frame(c.params);
    const DensityMatrix4 rho0 = prepare_initial_state(c.params, c.t1);
    const OpenEvolutionTrace tr =
        evolve(rho0, f, c.params, c.t_end, detail::step_for(c, f), {.sample_stride = c.effective_stride()});
    const auto oracle = fock_lindblad_oracle(rho0, f, c.params, c.t_end, c.fock_cutoff,
                                             static_cast<std::int64_t>(tr.samples.size()) - 1);
    OracleComparison out{{"oracle_n" + format_integer(c.params.photons) + ".csv",
                          {{"T", "rho11", "rho33", "rho44", "abs_rho14", "rho22", "max_gap"}, {}}}};
    for (std::size_t i = 0; i < oracle.size(); ++i) {
        const DensityMatrix4& a = tr.samples[i];
        const DensityMatrix4& b = oracle[i].projected;
        const double gap = std::max({std::abs(a.rho11 - b.rho11), std::abs(a.rho33 - b.rho33),
                                     std::abs(a.rho44 - b.rho44), std::abs(a.rho14 - b.rho14)});
        out.max_gap = std::max(out.max_gap, gap);
        out.max_outside = std::max(out.max_outside, oracle[i].rho22);
        out.file.table.rows.push_back({format_double(b.t), format_double(b.rho11), format_double(b.rho33),
                                       format_double(b.rho44), format_double(std::abs(b.rho14)),
                                       format_double(oracle[i].rho22), format_double(gap)});
    }
    return out;
}

enum class SweepAxis { photons, time, prep_time, thermal };
enum class SweepQuantity { concurrence_closed, concurrence_open, var_minus, rwa_ratio, chi };

inline SweepAxis parse_axis(std::string_view s) {
    if (s == "n") return SweepAxis::photons;
    if (s == "t") return SweepAxis::time;
    if (s == "t1") return SweepAxis::prep_time;
    if (s == "n_th") return SweepAxis::thermal;
    throw ConfigError("unknown sweep axis '" + std::string(s) + "' (n, t, t1, n_th)");
}

inline SweepQuantity parse_quantity(std::string_view s) {
    if (s == "concurrence_closed") return SweepQuantity::concurrence_closed;
    if (s == "concurrence_open") return SweepQuantity::concurrence_open;
    if (s == "var_minus") return SweepQuantity::var_minus;
    if (s == "rwa_ratio") return SweepQuantity::rwa_ratio;
    if (s == "chi") return SweepQuantity::chi;
    throw ConfigError("unknown sweep quantity '" + std::string(s) + "'");
}

inline std::string_view axis_label(SweepAxis a) {
    switch (a) {
    case SweepAxis::photons: return "n";
    case SweepAxis::time: return "T";
    case SweepAxis::prep_time: return "T1";
    case SweepAxis::thermal: return "n_th";
    }
    return "x";
}

inline std::string_view quantity_label(SweepQuantity q) {
    switch (q) {
    case SweepQuantity::concurrence_closed: return "concurrence_closed";
    case SweepQuantity::concurrence_open: return "concurrence_open";
    case SweepQuantity::var_minus: return "var_minus";
    case SweepQuantity::rwa_ratio: return "rwa_ratio";
    case SweepQuantity::chi: return "chi";
    }
    return "value";
}

namespace detail {

struct SweepPoint {
    SystemParams params;
    double t1 = 0.0;
    double time = 0.0; ///< evolution time; t for the time axis, else t_end / t1
};

inline SweepPoint sweep_point(SweepAxis axis, double value, const RunConfig& c) {
    SweepPoint pt{c.params, c.t1, c.t_end};
    switch (axis) {
    case SweepAxis::photons:
        if (value != std::floor(value) || value < 0.0)
            throw ConfigError("photon numbers must be non-negative integers");
        pt.params.photons = static_cast<std::int64_t>(value);
        break;
    case SweepAxis::time: pt.time = value; break;
    case SweepAxis::prep_time: pt.t1 = value; break;
    case SweepAxis::thermal: pt.params.thermal_occupation = value; break;
    }
    return pt;
}

inline double evaluate(SweepAxis axis, SweepQuantity q, const SweepPoint& pt) {
    const SqueezedFrame f = build_frame(pt.params);
    switch (q) {
    case SweepQuantity::concurrence_closed:
        return concurrence_pure(amplitudes(f, axis == SweepAxis::time ? pt.time : pt.t1));
    case SweepQuantity::concurrence_open: {
        const DensityMatrix4 rho0 = prepare_initial_state(pt.params, pt.t1);
        const double times[] = {pt.time};
        return concurrence_mixed(evolve_at(rho0, f, pt.params, times, max_step(f)).front());
    }
    case SweepQuantity::var_minus:
        return axis == SweepAxis::time ? variance_analytic(pt.params, f, pt.time).var_minus
                                       : variance_steady(pt.params, f).var_minus;
    case SweepQuantity::rwa_ratio: return rwa_ratio(f);
    case SweepQuantity::chi: return dispersive_shift(f);
    }
    throw ConfigError("unhandled quantity");
}

} // namespace detail

/// One row per axis value, sorted ascending. Points rejected by the physics
/// (e.g. an unstable photon number) carry the error name in the `error`
/// column instead of aborting the sweep.
inline CsvTable run_sweep(SweepAxis axis, std::vector<double> values, SweepQuantity quantity,
                          const RunConfig& c) {
    if (values.empty())
        throw ConfigError("sweep range is empty");
    std::sort(values.begin(), values.end());
    CsvTable table{{std::string(axis_label(axis)), std::string(quantity_label(quantity)), "error"}, {}};

    // The open-system time sweep shares one trajectory across all points.
    std::vector<std::optional<double>> shared;
    std::optional<ErrorKind> shared_error;
    if (quantity == SweepQuantity::concurrence_open && axis == SweepAxis::time) {
        if (values.front() < 0.0)
            throw ConfigError("times must be non-negative");
        try {
            const SqueezedFrame f = build_frame(c.params);
            const DensityMatrix4 rho0 = prepare_initial_state(c.params, c.t1);
            for (const DensityMatrix4& s : evolve_at(rho0, f, c.params, values, max_step(f)))
                shared.emplace_back(concurrence_mixed(s));
        } catch (const Error& e) {
            if (exit_code(e.kind()) != 2)
                throw;
            shared_error = e.kind();
        }
    }

    for (std::size_t i = 0; i < values.size(); ++i) {
        const double v = values[i];
        const std::string key = axis == SweepAxis::photons
                                    ? format_integer(static_cast<std::int64_t>(v))
                                    : format_double(v);
        if (!shared.empty() || shared_error) {
            if (shared_error)
                table.rows.push_back({key, "", std::string(to_string(*shared_error))});
            else
                table.rows.push_back({key, format_double(*shared[i]), ""});
            continue;
        }
        const detail::SweepPoint pt = detail::sweep_point(axis, v, c);
        try {
            table.rows.push_back({key, format_double(detail::evaluate(axis, quantity, pt)), ""});
        } catch (const Error& e) {
            if (exit_code(e.kind()) != 2)
                throw;
            table.rows.push_back({key, "", std::string(to_string(e.kind()))});
        }
    }
    return table;
}

inline CsvTable run_sweep(const RunConfig& c) {
    if (c.axis.empty() || c.range.empty() || c.quantity.empty())
        throw ConfigError("sweep needs axis, range and quantity");
    return run_sweep(parse_axis(c.axis), parse_range(c.range), parse_quantity(c.quantity), c);
}

struct ValidationReport {
    SystemParams params;
    double stability_margin = 1.0;
    std::optional<SqueezedFrame> frame;
    std::optional<double> rwa;
    std::optional<double> dispersive;
    std::string error;
    std::vector<std::string> warnings;
};

/// Derived frame and regime ratios for the configured photon number. Never
/// throws on physics; rejections are reported in `error`.
inline ValidationReport validate_config(const RunConfig& c) {
    ValidationReport r;
    r.params = c.params;
    r.stability_margin = stability_margin(c.params);
    try {
        r.frame = build_frame(c.params);
    } catch (const Error& e) {
        r.error = e.what();
        return r;
    }
    if (r.frame->coupling > 0.0)
        r.rwa = rwa_ratio(*r.frame);
    r.dispersive = dispersive_validity(*r.frame, c.params.thermal_occupation);
    if (r.stability_margin < 1e-3)
        r.warnings.push_back("photon number within 0.1% of the stability boundary");
    if (r.rwa && *r.rwa < 100.0)
        r.warnings.push_back("omega_n / lambda_n below 100: rotating-wave approximation questionable");
    if (*r.dispersive < 10.0)
        r.warnings.push_back("|Delta| / lambda_n below 10: not in the dispersive regime");
    return r;
}

inline std::string format_report(const ValidationReport& r) {
    std::ostringstream os;
    os << "n = " << r.params.photons << '\n';
    os << "stability_margin = " << format_double(r.stability_margin) << '\n';
    if (!r.frame) {
        os << "status = rejected (" << r.error << ")\n";
        return os.str();
    }
    const SqueezedFrame& f = *r.frame;
    os << "r_n = " << format_double(f.squeezing) << '\n'
       << "omega_n = " << format_double(f.mech_frequency) << '\n'
       << "lambda_n = " << format_double(f.coupling) << '\n'
       << "Delta = " << format_double(f.detuning) << '\n'
       << "Omega_n = " << format_double(f.rabi_frequency) << '\n'
       << "Omega_tilde_n = " << format_double(f.generalized_rabi) << '\n'
       << "chi = " << (f.dispersive_shift ? format_double(*f.dispersive_shift) : "undefined (Delta = 0)")
       << '\n'
       << "rwa_ratio = " << (r.rwa ? format_double(*r.rwa) : "undefined (lambda_n = 0)") << '\n'
       << "dispersive_validity = " << format_double(*r.dispersive) << '\n';
    for (const std::string& w : r.warnings)
        os << "warning: " << w << '\n';
    os << "status = " << (r.warnings.empty() ? "ok" : "accepted with warnings") << '\n';
    return os.str();
}

} // namespace spinopto
