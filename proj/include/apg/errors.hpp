#pragma once

#include <stdexcept>
#include <string>

namespace apg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A Levy-measure integral that the requested operation needs is divergent.
struct IntegrabilityError : Error {
    using Error::Error;
};

// gamma0 queried past the small-jump integrability horizon t-bar.
struct DriftUndefinedError : Error {
    using Error::Error;
};

// Operation requires a structural property the spec lacks (monotone
// component, disintegrated kernel, ...).
struct UnsupportedShapeError : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

// Jump intensity too large for the requested step size.
struct StepSizeError : Error {
    double suggested_dt;
    StepSizeError(const std::string& msg, double dt) : Error(msg), suggested_dt(dt) {}
};

// Critical-exponent estimation needs >= 4 decades of r.
struct InsufficientRangeError : Error {
    using Error::Error;
};

// simplified_indices hypotheses not met by the spec.
struct InapplicableError : Error {
    using Error::Error;
};

// Requested value outside the representable range (e.g. phi(t) above y_{T_max}(b)).
struct RangeError : Error {
    using Error::Error;
};

}  // namespace apg
