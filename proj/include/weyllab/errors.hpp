#pragma once
#include <stdexcept>
#include <string>

namespace weyllab {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Division by a spinor density at or below the configured floor.
struct DegenerateDensity : Error {
    using Error::Error;
};

/// Transverse profile evaluated to a non-positive value.
struct ProfileNonpositive : Error {
    using Error::Error;
};

/// Electromagnetic fields requested with q = 0.
struct ZeroCharge : Error {
    using Error::Error;
};

/// Quadrature failed to converge within the node cap.
struct NonConvergent : Error {
    using Error::Error;
};

/// Configuration file parse or validation failure (exit code 2 territory).
struct ConfigError : Error {
    using Error::Error;
};

} // namespace weyllab
