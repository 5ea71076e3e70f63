// radiation_modes.hpp - continuum modes of the dielectric cylinder.
//
// A radiation mode at (omega, beta, l, p) with |beta| < k n2 is regular
// (Bessel J) inside the core and a superposition of outgoing/incoming
// Hankel waves H^(1,2)_l(sigma r) outside, with the four tangential
// continuity conditions fixing the outside coefficients. Modes are
// delta-normalized on the (omega, beta) continuum:
//
//   int d^2r [n^2 e* . e' + (mu0/eps0) h* . h'] -> 4 pi delta(...) ,
//
// which pins the asymptotic amplitude through
//
//   n2^2 (|C1|^2 + |C2|^2) + (mu0/eps0)(|D1|^2 + |D2|^2) = sigma^2/(4 pi omega).
//
// The polarization pair p = +-1 is the orthonormal basis that diagonalizes
// the 2x2 Gram matrix of the two independent boundary solutions (for l = 0
// this reduces to the TM/TE split). Any orthonormal pair is equivalent for
// p-summed observables.
#pragma once

#include <complex>
#include <vector>

#include "nanofiber/fiber_modes.hpp"

namespace nanofiber {

struct RadiationModeId {
    double omega;  // rad/s
    double beta;   // rad/m, |beta| < (omega/c) n2
    int l;         // azimuthal order, any integer
    int p;         // polarization index, +1 or -1

    void validate(const FiberSpec& fiber) const;
};

// Boundary-matched, delta-normalized continuum mode.
class RadiationMode {
  public:
    RadiationModeId id;
    FiberSpec fiber;

    double q_in = 0.0;   // transverse wavenumber inside, sqrt(k^2 n1^2 - beta^2)
    double sigma = 0.0;  // transverse wavenumber outside, sqrt(k^2 n2^2 - beta^2)

    // inside amplitudes: E_z = A J_l(q_in r), H_z = B J_l(q_in r)
    std::complex<double> A, B;
    // outside: E_z = C1 H1_l + C2 H2_l, H_z = D1 H1_l + D2 H2_l
    std::complex<double> C1, C2, D1, D2;

    // True when the core was skipped: at large l and sigma a -> 0 the
    // scattered part is below double-precision relevance and the mode is
    // built as a free-space cylindrical wave.
    bool free_space = false;

    // Complex field components at radius r, without exp(i beta z + i l phi).
    FieldComponents at(double r) const;
};

RadiationMode radiation_profile(const FiberSpec& fiber,
                                const RadiationModeId& id);

// Quadrature plan for sums over radiation modes at fixed frequency:
// Gauss-Legendre panels over beta in (-k n2, k n2), refined geometrically
// toward the light-line endpoints, plus the azimuthal truncation policy.
struct RadiationQuadraturePlan {
    double omega = 0.0;
    double tol = 1e-6;
    int levels = 0;  // geometric endpoint-refinement depth
    int l_cap = 40;  // hard cap for the azimuthal extension
    std::vector<double> nodes;    // beta values, ascending
    std::vector<double> weights;

    // consecutive l-shells below shell_cutoff() * running total end the sum
    double shell_cutoff() const { return 0.1 * tol; }
};

RadiationQuadraturePlan radiation_quadrature(const FiberSpec& fiber,
                                             double omega0, double tol);

}  // namespace nanofiber
