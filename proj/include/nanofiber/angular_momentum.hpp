// angular_momentum.hpp - canonical (Minkowski) angular momentum of the
// guided field: pointwise orbital/spin densities, energy density, the
// per-photon quantization ratio, and cross-section integrals.
//
// For a drive of amplitude A in a mode with circulation p and azimuthal
// order l (complex components E, H at radius r):
//
//  j_orb  = |A|^2 { p eps0 n^2/(4w) [l|e|^2 - 2 Im(Er* Ephi)]
//                 + p mu0/(4w)      [l|h|^2 - 2 Im(Hr* Hphi)] }
//  j_spin = |A|^2 { p eps0 n^2/(2w) Im(Er* Ephi) + p mu0/(2w) Im(Hr* Hphi) }
//  u      = |A|^2 { eps0 n^2 |e|^2 + mu0 |h|^2 } / 4
//
// j_can = j_orb + j_spin collapses to p l (eps0 n^2|e|^2 + mu0|h|^2)/4w,
// so hbar w j_can / u = p l hbar pointwise: the per-photon angular
// momentum is quantized independent of radius and fiber geometry.
#pragma once

#include "nanofiber/fiber_modes.hpp"

namespace nanofiber {

// Densities at one radius, J*s/m^3 for the j's and J/m^3 for u.
struct AMDensities {
    double j_orb = 0.0;
    double j_spin = 0.0;
    double j_can = 0.0;
    double u = 0.0;
};

AMDensities am_densities(const GuidedMode& mode, double amplitude, int p,
                         int l, double r);

// hbar * omega * j_can(r) / u(r); throws DegeneratePoint where u vanishes.
double photon_am(const GuidedMode& mode, double amplitude, int p, int l,
                 double r);

// Cross-section integrals per unit fiber length.
struct IntegratedAM {
    double J_orb = 0.0;   // J*s/m
    double J_spin = 0.0;  // J*s/m
    double U = 0.0;       // J/m
};

IntegratedAM integrated_am(const GuidedMode& mode, double amplitude, int p,
                           int l);

// Moment of the Minkowski momentum density, (1/c^2) int n^2 r S_phi dA.
// Pointwise this is NOT the canonical density j_can; integrated over the
// cross-section the two agree. Exposed as a test quantity.
double integrated_am_poynting(const GuidedMode& mode, double amplitude);

}  // namespace nanofiber
