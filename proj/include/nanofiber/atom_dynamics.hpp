// atom_dynamics.hpp - two-level internal-state dynamics.
//
// Optical Bloch system in the rotating frame of the drive:
//
//   d rho_ee / dt = -Im(Omega rho_ge) - Gamma rho_ee
//   d rho_ge / dt = (i Delta - Gamma/2) rho_ge + (i Omega*/2)(rho_ee - rho_gg)
//
// whose fixed point is the saturation formula
// rho_ee = |Omega|^2 / (4 Delta^2 + Gamma^2 + 2 |Omega|^2).
#pragma once

#include <complex>

#include "nanofiber/fiber_modes.hpp"

namespace nanofiber {

struct BlochState {
    double rho_ee = 0.0;
    std::complex<double> rho_ge{0.0, 0.0};
    double time = 0.0;

    void validate() const;  // 0 <= rho_ee <= 1, |rho_ge|^2 <= rho_ee rho_gg
};

// The classical guided drive: which mode, how much power, how far detuned.
struct DriveSpec {
    GuidedModeId mode_id;
    double power_P = 0.0;        // watts
    double detuning_Delta = 0.0; // rad/s

    void validate() const;
};

double steady_state_rho_ee(std::complex<double> Omega, double Delta,
                           double Gamma);

// Time derivative of rho_ee for the given state.
double rho_ee_dot(const BlochState& state, std::complex<double> Omega,
                  double Gamma);

// One classical fourth-order step of size dt.
// Throws StepTooLarge when dt * max(Gamma, |Omega|, |Delta|) > 0.1.
BlochState evolve_bloch(const BlochState& state, std::complex<double> Omega,
                        double Delta, double Gamma, double dt);

// Upward-transition (photon-absorption) rate Gamma rho_ee + rho_ee_dot.
double excitation_rate(const BlochState& state, std::complex<double> Omega,
                       double Gamma);

// Steady state for the given drive.
BlochState steady_state(std::complex<double> Omega, double Delta,
                        double Gamma);

}  // namespace nanofiber
