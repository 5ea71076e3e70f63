// coupling.hpp - atom-field coupling coefficients and emission rates.
//
// A two-level emitter with a single spherical dipole component d_q sits at
// (r, phi, z) outside the core. Guided coupling
//
//   G_mu = sqrt(omega beta' / (4 pi eps0 hbar)) (d . e) e^{i(f beta z + p l phi)}
//
// and its continuum analog (beta' -> 1) produce the partial emission rates
// gamma = 2 pi |G|^2; the radiation channel is integrated over beta and
// summed over the two polarizations per azimuthal order l. The spherical
// contraction is d . e = (-1)^q d_q e_{-q}.
#pragma once

#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "nanofiber/fiber_modes.hpp"
#include "nanofiber/radiation_modes.hpp"

namespace nanofiber {

// Two-level emitter: transition, dipole orientation index, and position.
struct AtomSpec {
    double lambda0;  // transition wavelength (m)
    double gamma0;   // free-space linewidth (rad/s)
    int q;           // dipole spherical index: -1, 0, +1
    double r;        // cylindrical radius (m); must satisfy r > fiber radius
    double phi = 0.0;
    double z = 0.0;

    double omega0() const;
    void validate(const FiberSpec& fiber) const;
};

// d = sqrt(3 pi eps0 hbar c^3 gamma0 / omega0^3)
double dipole_magnitude(const AtomSpec& atom);

// Spherical tensor component V_m of a cylindrical-basis complex vector at
// phi = 0: V_0 = V_z, V_{+-1} = -+ (V_r +- i V_phi)/sqrt(2).
std::complex<double> spherical_component(const FieldComponents& f, int m);

// G_mu for a mode resonant with the atom, including the position phases.
std::complex<double> coupling_guided(const AtomSpec& atom,
                                     const GuidedMode& mode);

// gamma_mu = 2 pi |G_mu|^2
double gamma_guided_rate(const AtomSpec& atom, const GuidedMode& mode);

struct GuidedChannel {
    ModeKind kind;
    int f;
    int p;
    bool operator<(const GuidedChannel& o) const;
    std::string label() const;  // e.g. "HE21 f=+1 p=-1"
};

struct EmissionBreakdown {
    std::map<GuidedChannel, double> gamma_guided;  // per resonant channel
    std::map<int, double> gamma_radiation;         // per azimuthal order l
    double gamma_total = 0.0;

    double guided_sum() const;
    double radiation_sum() const;
    // angular-momentum-weighted sums entering the recoil torque
    double guided_pl_sum() const;     // sum p l gamma_mu
    double radiation_l_sum() const;   // sum l gamma_rad(l)
};

// Radiation rates with the per-(l, beta-node) boundary solves cached, so a
// radial scan re-uses the same continuum modes at every atom position.
class RadiationRateEvaluator {
  public:
    RadiationRateEvaluator(const FiberSpec& fiber,
                           const RadiationQuadraturePlan& plan);

    // l-resolved, p-summed rates for all three dipole components at once;
    // index [q + 1] of the result. Throws QuadratureNotConverged if the
    // azimuthal extension hits the plan cap before its tail rule.
    std::array<std::map<int, double>, 3> rates_all_q(double r_atom,
                                                     double dipole) const;

    std::map<int, double> rates(double r_atom, int q, double dipole) const;

    const RadiationQuadraturePlan& plan() const { return plan_; }

  private:
    struct NodeModes;  // the two polarization modes of one beta node
    const std::vector<NodeModes>& modes_for(int l) const;

    FiberSpec fiber_;
    RadiationQuadraturePlan plan_;
    mutable std::map<int, std::vector<NodeModes>> cache_;
    mutable std::mutex mutex_;
};

// One-shot l map built from a fresh evaluator.
std::map<int, double> gamma_radiation_rate(const AtomSpec& atom,
                                           const FiberSpec& fiber,
                                           const RadiationQuadraturePlan& plan);

// All resonant guided channels plus the radiation map and the total rate.
EmissionBreakdown total_gamma(const AtomSpec& atom, const FiberSpec& fiber,
                              double tol = 1e-6);

// Omega = (-1)^q d_q E_{-q} / hbar for a drive of amplitude A in the mode.
std::complex<double> rabi_frequency(const AtomSpec& atom,
                                    const GuidedMode& drive_mode,
                                    double amplitude_A);

// The same guided mode re-labeled with direction f / circulation p (the
// reduced profiles are orientation independent).
GuidedMode with_orientation(const GuidedMode& mode, int f, int p);

}  // namespace nanofiber
