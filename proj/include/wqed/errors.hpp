#pragma once

#include <stdexcept>
#include <string>

namespace wqed {

/// The cleared rational form has a denominator indistinguishable from zero
/// at double precision; the amplitude is numerically meaningless there.
struct DegenerateDenominator : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// |t|^2 + |r|^2 exceeds unity beyond rounding tolerance.
struct InvalidAmplitudes : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Fidelity 0/0: both channel transmissions vanish.
struct IndeterminateFidelity : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A pivot fell below the singularity threshold during elimination.
struct SingularSystem : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnknownPreset : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Too few Monte Carlo trials for a meaningful interval check.
struct InsufficientSamples : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Base for configuration-document problems.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed configuration text (syntax), with line/column in the message.
struct ParseError : ConfigError {
    using ConfigError::ConfigError;
};

/// Well-formed but invalid configuration; the message names the offending key.
struct ValidationError : ConfigError {
    using ConfigError::ConfigError;
};

} // namespace wqed
