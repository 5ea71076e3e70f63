// fiber_modes.hpp - exact vector modes of a two-layer step-index fiber.
//
// Guided modes of a dielectric cylinder (core index n1, radius a) in an
// infinite cladding (index n2 < n1): Bessel J fields inside, modified
// Bessel K outside, propagation constants from the exact dispersion
// relations of the HE/EH/TE/TM families.
//
// Profile convention. A mode stores six REAL reduced profile functions
// e_r, e_phi, e_z, h_r, h_phi, h_z of r (the f=+1, p=+1 convention),
// normalized to
//
//     int n^2(r) (e_r^2 + e_phi^2 + e_z^2) dA = 1 .
//
// The physical complex field components carry fixed quadrature phases and
// the direction/circulation factors:
//
//     E_r = i e_r        E_phi = s_p e_phi      E_z = f e_z
//     H_r = f s_p h_r    H_phi = i f h_phi      H_z = i s_p h_z
//
// all times A exp(i f beta z + i s_p l phi), where s_p = p for hybrid
// modes and 1 for TE/TM. The longitudinal components are thereby in
// quadrature with e_r / h_r as required of evanescent-field modes.
#pragma once

#include <complex>
#include <string>
#include <vector>

namespace nanofiber {

enum class ModeFamily { HE, EH, TE, TM };

std::string family_name(ModeFamily f);

// Fiber geometry and indices; the static environment of every computation.
struct FiberSpec {
    double radius_a;  // core radius (m)
    double n1;        // core index
    double n2;        // cladding index (vacuum: 1)

    void validate() const;  // radius_a > 0, n1 > n2 >= 1
};

struct ModeKind {
    ModeFamily family;
    int azimuthal_l;  // l >= 1 for HE/EH, l = 0 for TE/TM
    int radial_m;     // m >= 1, counted from the high-beta end

    void validate() const;
    std::string label() const;  // e.g. "HE21"
};

// Parse labels like "HE11", "TE01", "EH12".
ModeKind parse_mode_label(const std::string& s);

struct GuidedModeId {
    double omega;   // rad/s
    ModeKind kind;
    int f = +1;     // propagation direction, +1 or -1
    int p = +1;     // circulation index, +-1 for HE/EH, 0 for TE/TM

    void validate() const;
};

struct ReducedProfile {
    double er, ephi, ez;  // V/m per volt of amplitude, pre-normalization 1/m
    double hr, hphi, hz;
};

struct FieldComponents {
    std::complex<double> Er, Ephi, Ez;
    std::complex<double> Hr, Hphi, Hz;
};

// A solved guided mode. Immutable after construction; safe to share.
class GuidedMode {
  public:
    GuidedModeId id;
    FiberSpec fiber;
    double beta = 0.0;        // rad/m
    double beta_prime = 0.0;  // d beta / d omega (s/m)

    // Reduced real profiles (f=+1/p=+1 convention), normalized.
    ReducedProfile reduced(double r) const;

    // Complex components for this mode's (f, p), excluding the propagation
    // phase exp(i f beta z + i s_p l phi).
    FieldComponents assembled(double r) const;

    double omega() const { return id.omega; }
    int circulation() const { return id.kind.family == ModeFamily::HE ||
                                     id.kind.family == ModeFamily::EH
                                 ? id.p : 0; }

    // Construction internals exposed for the mode-solver tests.
    struct Params {
        double h, q, u, w;    // transverse wavenumbers and u=ha, w=qa
        double s, s1, s2;     // hybrid polarization parameters (0 for TM)
        double match;         // cladding continuity factor J_l(u)/K_l(w)
        double scale;         // profile normalization factor
    };
    Params params;

  private:
    friend GuidedMode mode_profile(const FiberSpec&, const GuidedModeId&);
};

// (omega/c) a sqrt(n1^2 - n2^2)
double v_number(const FiberSpec& fiber, double omega);

// Dispersion function whose roots in beta are the guided modes of the
// given family/azimuthal order; exposed for inspection and testing.
double dispersion(const FiberSpec& fiber, double omega, ModeFamily family,
                  int l, double beta);

// All roots in (k n2, k n1), highest beta first.
std::vector<double> dispersion_roots(const FiberSpec& fiber, double omega,
                                     ModeFamily family, int l);

// beta of the requested mode; throws NoGuidedMode below cutoff.
double solve_eigenvalue(const FiberSpec& fiber, double omega,
                        const ModeKind& kind);

// d beta / d omega by a central difference with relative step 1e-6.
double group_slope(const FiberSpec& fiber, double omega, const ModeKind& kind);

// Solve + build normalized profiles.
GuidedMode mode_profile(const FiberSpec& fiber, const GuidedModeId& id);

// Every guided ModeKind at this frequency (all families, orders m).
std::vector<ModeKind> enumerate_guided(const FiberSpec& fiber, double omega);

// Axial Poynting flux (1/2) int Re[e x h*]_z dA of the unit-normalized
// profile, in W per V^2 of amplitude squared.
double unit_poynting_flux(const GuidedMode& mode);

// |A| with |A|^2 = P / P1; throws DegenerateMode if P1 <= 0.
double power_amplitude(const GuidedMode& mode, double power_watts);

}  // namespace nanofiber
