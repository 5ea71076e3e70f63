// constants.hpp - SI physical constants (CODATA 2018).
#pragma once

namespace nanofiber {

constexpr double c_light  = 299792458.0;          // m/s
constexpr double eps0     = 8.8541878128e-12;     // F/m
constexpr double mu0      = 1.25663706212e-6;     // N/A^2
constexpr double hbar     = 1.054571817e-34;      // J*s
constexpr double pi       = 3.14159265358979323846;

// 1 zN*nm = 1e-30 N*m, the torque unit used in tabulated output.
constexpr double zN_nm    = 1e-30;
constexpr double zN       = 1e-21;

}  // namespace nanofiber
