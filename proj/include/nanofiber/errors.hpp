// errors.hpp - exception types thrown by the library.
#pragma once

#include <stdexcept>
#include <string>

namespace nanofiber {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Requested guided mode is below cutoff at the given frequency.
struct NoGuidedMode : Error {
    using Error::Error;
};

// Axial Poynting flux of a mode profile is not positive.
struct DegenerateMode : Error {
    using Error::Error;
};

// Radiation-mode propagation constant outside (-k n2, k n2).
struct InvalidBeta : Error {
    using Error::Error;
};

// An adaptive integral failed to meet its tolerance.
struct QuadratureNotConverged : Error {
    using Error::Error;
};

// Bloch integrator step violates dt * max(Gamma, |Omega|, |Delta|) <= 0.1.
struct StepTooLarge : Error {
    using Error::Error;
};

// Orbital/spin torque ratio is undefined for q = 0.
struct UndefinedRatio : Error {
    using Error::Error;
};

// Energy density vanishes at the sampled radius.
struct DegeneratePoint : Error {
    using Error::Error;
};

// Scan configuration file is malformed; carries line/field diagnostics.
struct ConfigError : Error {
    using Error::Error;
};

struct IOError : Error {
    using Error::Error;
};

}  // namespace nanofiber
