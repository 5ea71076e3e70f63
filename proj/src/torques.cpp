// torques.cpp
#include "nanofiber/torques.hpp"

#include "nanofiber/constants.hpp"
#include "nanofiber/errors.hpp"

namespace nanofiber {

double drive_orbital_torque(int lc, int pc, int q, double Gamma,
                            double rho_ee, double rho_dot_ee) {
    if (!(Gamma > 0.0)) throw Error("drive_orbital_torque: Gamma must be > 0");
    return (pc * lc - q) * hbar * (Gamma * rho_ee + rho_dot_ee);
}

double drive_spin_torque(int q, double Gamma, double rho_ee,
                         double rho_dot_ee) {
    if (!(Gamma > 0.0)) throw Error("drive_spin_torque: Gamma must be > 0");
    return q * hbar * (Gamma * rho_ee + rho_dot_ee);
}

double spon_orbital_torque(int q, const EmissionBreakdown& breakdown) {
    return q * hbar * breakdown.gamma_total -
           hbar * breakdown.guided_pl_sum() -
           hbar * breakdown.radiation_l_sum();
}

double spon_spin_torque(int q, double Gamma) {
    if (!(Gamma > 0.0)) throw Error("spon_spin_torque: Gamma must be > 0");
    return -q * hbar * Gamma;
}

double torque_ratio(int lc, int pc, int q) {
    if (q == 0)
        throw UndefinedRatio("torque_ratio: q = 0 has no spin torque");
    return double(pc * lc - q) / double(q);
}

TorqueBreakdown total_torques(const DriveSpec& drive, const AtomSpec& atom,
                              const BlochState& state,
                              const EmissionBreakdown& breakdown,
                              std::complex<double> Omega) {
    drive.validate();
    state.validate();
    const int lc = drive.mode_id.kind.azimuthal_l;
    const int pc = drive.mode_id.p;
    const double Gamma = breakdown.gamma_total;
    const double rdot = rho_ee_dot(state, Omega, Gamma);

    TorqueBreakdown t;
    t.T_drv = drive_orbital_torque(lc, pc, atom.q, Gamma, state.rho_ee, rdot);
    t.Q_drv = drive_spin_torque(atom.q, Gamma, state.rho_ee, rdot);
    t.T_spon = spon_orbital_torque(atom.q, breakdown);
    t.Q_spon = spon_spin_torque(atom.q, Gamma);
    t.T_scatt = state.rho_ee * t.T_spon;
    t.Q_scatt = state.rho_ee * t.Q_spon;
    t.T_total = t.T_drv + t.T_scatt;
    // Q_drv + rho_ee Q_spon collapses to q hbar rho_ee_dot; evaluate the
    // collapsed form so the steady state gives an exact zero.
    t.Q_total = atom.q * hbar * rdot;
    t.F_phi = t.T_total / atom.r;
    return t;
}

}  // namespace nanofiber
