// atom_dynamics.cpp
#include "nanofiber/atom_dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "nanofiber/errors.hpp"

namespace nanofiber {

namespace {
using cplx = std::complex<double>;

struct Deriv {
    double dee;
    cplx dge;
};

Deriv bloch_rhs(double ee, cplx ge, cplx Omega, double Delta, double Gamma) {
    Deriv d;
    d.dee = -std::imag(Omega * ge) - Gamma * ee;
    d.dge = (cplx(0.0, Delta) - 0.5 * Gamma) * ge +
            cplx(0.0, 0.5) * std::conj(Omega) * (2.0 * ee - 1.0);
    return d;
}
}  // namespace

void BlochState::validate() const {
    if (!(rho_ee >= 0.0 && rho_ee <= 1.0))
        throw Error("BlochState: rho_ee outside [0, 1]");
    if (std::norm(rho_ge) > rho_ee * (1.0 - rho_ee) + 1e-12)
        throw Error("BlochState: coherence exceeds the positivity bound");
}

void DriveSpec::validate() const {
    mode_id.validate();
    if (power_P < 0.0) throw Error("DriveSpec: power must be >= 0");
}

double steady_state_rho_ee(cplx Omega, double Delta, double Gamma) {
    if (!(Gamma > 0.0)) throw Error("steady_state_rho_ee: Gamma must be > 0");
    const double o2 = std::norm(Omega);
    return o2 / (4.0 * Delta * Delta + Gamma * Gamma + 2.0 * o2);
}

double rho_ee_dot(const BlochState& state, cplx Omega, double Gamma) {
    return -std::imag(Omega * state.rho_ge) - Gamma * state.rho_ee;
}

BlochState evolve_bloch(const BlochState& state, cplx Omega, double Delta,
                        double Gamma, double dt) {
    if (!(dt > 0.0)) throw Error("evolve_bloch: dt must be positive");
    const double fastest =
        std::max({Gamma, std::abs(Omega), std::abs(Delta)});
    if (dt * fastest > 0.1)
        throw StepTooLarge("evolve_bloch: dt too large for the Bloch rates");

    auto rhs = [&](double ee, cplx ge) {
        return bloch_rhs(ee, ge, Omega, Delta, Gamma);
    };
    const double ee = state.rho_ee;
    const cplx ge = state.rho_ge;
    const Deriv k1 = rhs(ee, ge);
    const Deriv k2 = rhs(ee + 0.5 * dt * k1.dee, ge + 0.5 * dt * k1.dge);
    const Deriv k3 = rhs(ee + 0.5 * dt * k2.dee, ge + 0.5 * dt * k2.dge);
    const Deriv k4 = rhs(ee + dt * k3.dee, ge + dt * k3.dge);

    BlochState next;
    next.rho_ee =
        ee + dt / 6.0 * (k1.dee + 2.0 * k2.dee + 2.0 * k3.dee + k4.dee);
    next.rho_ge =
        ge + dt / 6.0 * (k1.dge + 2.0 * k2.dge + 2.0 * k3.dge + k4.dge);
    next.time = state.time + dt;
    // clamp roundoff-level excursions, keep genuine violations visible
    if (next.rho_ee < 0.0 && next.rho_ee > -1e-14) next.rho_ee = 0.0;
    next.validate();
    return next;
}

double excitation_rate(const BlochState& state, cplx Omega, double Gamma) {
    return Gamma * state.rho_ee + rho_ee_dot(state, Omega, Gamma);
}

BlochState steady_state(cplx Omega, double Delta, double Gamma) {
    BlochState s;
    s.rho_ee = steady_state_rho_ee(Omega, Delta, Gamma);
    const cplx denom(0.5 * Gamma, -Delta);
    s.rho_ge = cplx(0.0, 0.5) * std::conj(Omega) * (2.0 * s.rho_ee - 1.0) /
               denom;
    return s;
}

}  // namespace nanofiber
