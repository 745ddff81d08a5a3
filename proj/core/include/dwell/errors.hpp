// errors.hpp -- exception hierarchy shared by all dwell modules.

#pragma once

#include <stdexcept>
#include <string>

namespace dwell {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Well spectrum
struct UnboundLevel : Error { using Error::Error; };
struct RootNotBracketed : Error { using Error::Error; };

// Bath / calibration
struct DegenerateSpectrum : Error { using Error::Error; };

// Time stepping
struct DimensionMismatch : Error { using Error::Error; };
struct StepUnderflow : Error { using Error::Error; };
struct NonLinearRhs : Error { using Error::Error; };

// State construction / observables
struct NonNormalized : Error { using Error::Error; };
struct Infeasible : Error { using Error::Error; };
struct NotADensityMatrix : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };

// CLI configuration
struct ConfigError : Error { using Error::Error; };

} // namespace dwell
