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

// Run configuration: flat `key = value` text with `#` comments, overridable
// by `--key value` flags. Numbers accept a trailing `pi` multiplier
// ("0.25pi", "pi"). Ranges are either explicit lists "0,0.1,0.5", stepped
// "start:step:stop" (inclusive) or "lin:start:stop:count".

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spinopto/errors.hpp"
#include "spinopto/frame.hpp"

namespace spinopto {

namespace detail {

inline std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        parts.push_back(trim(s.substr(start, pos - start)));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return parts;
}

} // namespace detail

/// Parses a real number, optionally followed by `pi` (e.g. "0.25pi", "-pi").
inline double parse_number(std::string_view text) {
    std::string_view s = detail::trim(text);
    double scale = 1.0;
    if (s.size() >= 2 && s.substr(s.size() - 2) == "pi") {
        scale = std::numbers::pi;
        s = detail::trim(s.substr(0, s.size() - 2));
        if (!s.empty() && s.back() == '*')
            s = detail::trim(s.substr(0, s.size() - 1));
        if (s.empty() || s == "+")
            return scale;
        if (s == "-")
            return -scale;
    }
    double value = 0.0;
    const char* end = s.data() + s.size();
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(s.data(), end, value);
    if (s.empty() || ec != std::errc() || ptr != end || !std::isfinite(value))
        throw ConfigError("not a number: '" + std::string(text) + "'");
    return value * scale;
}

inline std::int64_t parse_integer(std::string_view text) {
    const double v = parse_number(text);
    if (v != std::floor(v) || std::abs(v) > 9.0e15)
        throw ConfigError("not an integer: '" + std::string(text) + "'");
    return static_cast<std::int64_t>(v);
}

inline bool parse_bool(std::string_view text) {
    const std::string_view s = detail::trim(text);
    if (s == "true" || s == "1" || s == "yes" || s == "on")
        return true;
    if (s == "false" || s == "0" || s == "no" || s == "off")
        return false;
    throw ConfigError("not a boolean: '" + std::string(text) + "'");
}

/// Expands a range expression into its values, in the order written.
inline std::vector<double> parse_range(std::string_view text) {
    const std::string_view s = detail::trim(text);
    if (s.empty())
        throw ConfigError("empty range");
    std::vector<double> out;
    if (s.starts_with("lin:")) {
        const auto parts = detail::split(s.substr(4), ':');
        if (parts.size() != 3)
            throw ConfigError("expected lin:start:stop:count, got '" + std::string(s) + "'");
        const double a = parse_number(parts[0]);
        const double b = parse_number(parts[1]);
        const std::int64_t count = parse_integer(parts[2]);
        if (count < 1 || count > 100'000'000)
            throw ConfigError("range count out of bounds");
        if (count == 1)
            return {a};
        for (std::int64_t k = 0; k < count; ++k)
            out.push_back(a + (b - a) * static_cast<double>(k) / static_cast<double>(count - 1));
        return out;
    }
    if (s.find(':') != std::string_view::npos) {
        const auto parts = detail::split(s, ':');
        if (parts.size() != 3)
            throw ConfigError("expected start:step:stop, got '" + std::string(s) + "'");
        const double a = parse_number(parts[0]);
        const double step = parse_number(parts[1]);
        const double b = parse_number(parts[2]);
        if (step <= 0.0 || b < a)
            throw ConfigError("range needs step > 0 and stop >= start");
        const double span = (b - a) / step;
        if (span > 100'000'000.0)
            throw ConfigError("range too long");
        const auto count = static_cast<std::int64_t>(std::floor(span + 1e-9)) + 1;
        for (std::int64_t k = 0; k < count; ++k)
            out.push_back(a + step * static_cast<double>(k));
        return out;
    }
    for (const std::string_view part : detail::split(s, ','))
        out.push_back(parse_number(part));
    return out;
}

inline std::vector<std::int64_t> parse_photon_range(std::string_view text) {
    std::vector<std::int64_t> out;
    for (const double v : parse_range(text)) {
        if (v != std::floor(v) || v < 0.0)
            throw ConfigError("photon numbers must be non-negative integers");
        out.push_back(static_cast<std::int64_t>(v));
    }
    return out;
}

struct RunConfig {
    SystemParams params{.photons = 20000};
    double t1 = 0.25 * std::numbers::pi;
    double t_end = 5.0;
    double dt = 0.0; ///< 0 selects the largest admissible step
    std::string n_grid = "0:100:24800";
    std::string n_list = "0,20000,24000";
    std::int64_t t_points = 2001;
    std::int64_t sample_stride = 100;
    bool full_resolution = false;
    int fock_cutoff = 8;
    std::string axis;
    std::string range;
    std::string quantity;
    std::string output_path;

    std::int64_t effective_stride() const { return full_resolution ? 1 : sample_stride; }
};

/// Every accepted key with its documented default, in file order.
inline constexpr std::array<std::pair<std::string_view, std::string_view>, 22> kConfigKeys{{
    {"lambda", "1"},
    {"omega_b", "2000"},
    {"omega_a", "0"},
    {"g", "1e-5 * omega_b"},
    {"Omega", "omega_b"},
    {"kappa", "1"},
    {"gamma_a", "0.1"},
    {"n_th", "0.1"},
    {"n", "20000"},
    {"t1", "0.25pi"},
    {"t_end", "5"},
    {"dt", "0 (auto: min(1e-3, 1e-2 / Omega~_n))"},
    {"n_grid", "0:100:24800"},
    {"n_list", "0,20000,24000"},
    {"t_points", "2001"},
    {"sample_stride", "100"},
    {"full_resolution", "false"},
    {"fock_cutoff", "8"},
    {"axis", ""},
    {"range", ""},
    {"quantity", ""},
    {"output_path", ""},
}};

inline bool is_config_key(std::string_view key) {
    return std::any_of(kConfigKeys.begin(), kConfigKeys.end(),
                       [&](const auto& entry) { return entry.first == key; });
}

/// Accumulates key/value assignments (later ones win) and resolves them into
/// a RunConfig. g and Omega default relative to the final omega_b.
class ConfigBuilder {
public:
    void set(std::string_view key, std::string_view value) {
        if (!is_config_key(key))
            throw ConfigError("unknown key '" + std::string(key) + "'");
        values_[std::string(key)] = std::string(detail::trim(value));
    }

    /// Reads `key = value` lines; blank lines and `#` comments are ignored.
    void load_text(std::string_view text) {
        std::size_t line_no = 0;
        for (std::string_view line : detail::split(text, '\n')) {
            ++line_no;
            if (const auto hash = line.find('#'); hash != std::string_view::npos)
                line = line.substr(0, hash);
            line = detail::trim(line);
            if (line.empty())
                continue;
            const auto eq = line.find('=');
            if (eq == std::string_view::npos)
                throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
            const std::string_view key = detail::trim(line.substr(0, eq));
            try {
                set(key, line.substr(eq + 1));
            } catch (const ConfigError& e) {
                throw ConfigError("line " + std::to_string(line_no) + ": " + e.what());
            }
        }
    }

    RunConfig build() const {
        RunConfig c;
        SystemParams& p = c.params;
        if (auto v = get("lambda")) p.coupling = parse_number(*v);
        if (auto v = get("omega_b")) p.mech_frequency = parse_number(*v);
        if (auto v = get("omega_a")) p.cavity_frequency = parse_number(*v);
        p.quadratic_coupling = get("g") ? parse_number(*get("g")) : 1e-5 * p.mech_frequency;
        p.spin_frequency = get("Omega") ? parse_number(*get("Omega")) : p.mech_frequency;
        if (auto v = get("kappa")) p.mech_decay = parse_number(*v);
        if (auto v = get("gamma_a")) p.spin_decay = parse_number(*v);
        if (auto v = get("n_th")) p.thermal_occupation = parse_number(*v);
        if (auto v = get("n")) p.photons = parse_integer(*v);
        if (auto v = get("t1")) c.t1 = parse_number(*v);
        if (auto v = get("t_end")) c.t_end = parse_number(*v);
        if (auto v = get("dt")) c.dt = parse_number(*v);
        if (auto v = get("n_grid")) c.n_grid = *v;
        if (auto v = get("n_list")) c.n_list = *v;
        if (auto v = get("t_points")) c.t_points = parse_integer(*v);
        if (auto v = get("sample_stride")) c.sample_stride = parse_integer(*v);
        if (auto v = get("full_resolution")) c.full_resolution = parse_bool(*v);
        if (auto v = get("fock_cutoff")) c.fock_cutoff = static_cast<int>(parse_integer(*v));
        if (auto v = get("axis")) c.axis = *v;
        if (auto v = get("range")) c.range = *v;
        if (auto v = get("quantity")) c.quantity = *v;
        if (auto v = get("output_path")) c.output_path = *v;

        if (c.t1 < 0.0 || c.t_end < 0.0 || c.dt < 0.0)
            throw ConfigError("t1, t_end and dt must be non-negative");
        if (c.t_points < 2 || c.sample_stride < 1 || c.fock_cutoff < 3)
            throw ConfigError("t_points >= 2, sample_stride >= 1 and fock_cutoff >= 3 required");
        return c;
    }

private:
    std::optional<std::string> get(const std::string& key) const {
        const auto it = values_.find(key);
        if (it == values_.end())
            return std::nullopt;
        return it->second;
    }

    std::map<std::string, std::string> values_;
};

} // namespace spinopto
