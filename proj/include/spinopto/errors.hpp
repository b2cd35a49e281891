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

#include <stdexcept>
#include <string>
#include <string_view>

namespace spinopto {

enum class ErrorKind {
    parameter_invalid,
    stability_violation,
    zero_frequency,
    resonant_divergence,
    step_too_large,
    normalization_error,
    invariant_breach,
    cutoff_too_small,
    not_a_state,
    config_error,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::parameter_invalid: return "ParameterInvalid";
    case ErrorKind::stability_violation: return "StabilityViolation";
    case ErrorKind::zero_frequency: return "ZeroFrequency";
    case ErrorKind::resonant_divergence: return "ResonantDivergence";
    case ErrorKind::step_too_large: return "StepTooLarge";
    case ErrorKind::normalization_error: return "NormalizationError";
    case ErrorKind::invariant_breach: return "InvariantBreach";
    case ErrorKind::cutoff_too_small: return "CutoffTooSmall";
    case ErrorKind::not_a_state: return "NotAState";
    case ErrorKind::config_error: return "ConfigError";
    }
    return "Unknown";
}

/// Base of every error raised by the library. Carries a machine-readable kind
/// so front ends can map failures to exit codes without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

template <ErrorKind K>
class KindedError : public Error {
public:
    explicit KindedError(const std::string& what) : Error(K, what) {}
};

using ParameterInvalid = KindedError<ErrorKind::parameter_invalid>;
using StabilityViolation = KindedError<ErrorKind::stability_violation>;
using ZeroFrequency = KindedError<ErrorKind::zero_frequency>;
using ResonantDivergence = KindedError<ErrorKind::resonant_divergence>;
using StepTooLarge = KindedError<ErrorKind::step_too_large>;
using NormalizationError = KindedError<ErrorKind::normalization_error>;
using InvariantBreach = KindedError<ErrorKind::invariant_breach>;
using CutoffTooSmall = KindedError<ErrorKind::cutoff_too_small>;
using NotAState = KindedError<ErrorKind::not_a_state>;
using ConfigError = KindedError<ErrorKind::config_error>;

/// Process exit code for a failure of the given kind: 1 for usage/config
/// problems, 2 for physical-domain rejections, 3 for broken numerical
/// invariants.
constexpr int exit_code(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::config_error: return 1;
    case ErrorKind::parameter_invalid:
    case ErrorKind::stability_violation:
    case ErrorKind::zero_frequency:
    case ErrorKind::resonant_divergence:
    case ErrorKind::step_too_large: return 2;
    case ErrorKind::normalization_error:
    case ErrorKind::invariant_breach:
    case ErrorKind::cutoff_too_small:
    case ErrorKind::not_a_state: return 3;
    }
    return 3;
}

} // namespace spinopto
