// torques.hpp - axial orbital and spin torques on the driven atom.
//
// Rate-level torque formulas for a drive in mode (l_c, p_c) and a dipole
// component q, with R = Gamma rho_ee + rho_ee_dot the photon-absorption
// rate:
//
//   T_drv  = (p_c l_c - q) hbar R          Q_drv  = q hbar R
//   T_spon = q hbar Gamma - hbar sum p l gamma_mu - hbar sum l gamma_rad
//   Q_spon = -q hbar Gamma
//   T_scatt = rho_ee T_spon               Q_scatt = rho_ee Q_spon
//   T_total = T_drv + T_scatt             Q_total = q hbar rho_ee_dot
//
// The conservation identities T_drv + Q_drv = p_c l_c hbar R and
// T_spon + Q_spon = -(sum p l gamma_mu + sum l gamma_rad) hbar hold to
// machine precision by construction and are re-asserted downstream.
#pragma once

#include <complex>

#include "nanofiber/atom_dynamics.hpp"
#include "nanofiber/coupling.hpp"

namespace nanofiber {

// All axial torque components at one configuration, in N*m.
struct TorqueBreakdown {
    double T_drv = 0.0;
    double Q_drv = 0.0;
    double T_spon = 0.0;   // per unit excited population
    double Q_spon = 0.0;
    double T_scatt = 0.0;  // rho_ee * T_spon
    double Q_scatt = 0.0;
    double T_total = 0.0;
    double Q_total = 0.0;
    double F_phi = 0.0;    // azimuthal force T_total / r, in N
};

double drive_orbital_torque(int lc, int pc, int q, double Gamma,
                            double rho_ee, double rho_dot_ee);

double drive_spin_torque(int q, double Gamma, double rho_ee,
                         double rho_dot_ee);

double spon_orbital_torque(int q, const EmissionBreakdown& breakdown);

double spon_spin_torque(int q, double Gamma);

// (p_c l_c - q)/q; throws UndefinedRatio for q = 0.
double torque_ratio(int lc, int pc, int q);

// Assemble every component for one configuration. Omega supplies
// rho_ee_dot for transient states; pass the steady-state Bloch state for
// the stationary formulas (Q_total is then exactly zero).
TorqueBreakdown total_torques(const DriveSpec& drive, const AtomSpec& atom,
                              const BlochState& state,
                              const EmissionBreakdown& breakdown,
                              std::complex<double> Omega);

}  // namespace nanofiber
