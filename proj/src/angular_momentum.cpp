// angular_momentum.cpp
#include "nanofiber/angular_momentum.hpp"

#include <cmath>

#include "nanofiber/constants.hpp"
#include "nanofiber/errors.hpp"
#include "nanofiber/quadrature.hpp"

namespace nanofiber {

namespace {

bool is_hybrid(const GuidedMode& m) {
    return m.id.kind.family == ModeFamily::HE ||
           m.id.kind.family == ModeFamily::EH;
}

GuidedMode oriented(const GuidedMode& mode, int p, int l) {
    if (l != mode.id.kind.azimuthal_l)
        throw Error("am_densities: l does not match the mode");
    const bool hybrid = is_hybrid(mode);
    if (hybrid && p != 1 && p != -1)
        throw Error("am_densities: hybrid modes need p = +-1");
    if (!hybrid && p != 0)
        throw Error("am_densities: TE/TM modes carry p = 0");
    GuidedMode m = mode;
    m.id.f = +1;
    m.id.p = p;
    return m;
}

}  // namespace

AMDensities am_densities(const GuidedMode& mode, double amplitude, int p,
                         int l, double r) {
    const GuidedMode m = oriented(mode, p, l);
    const FieldComponents c = m.assembled(r);
    const double n = r < m.fiber.radius_a ? m.fiber.n1 : m.fiber.n2;
    const double w = m.omega();
    const double a2 = amplitude * amplitude;

    const double e2 = std::norm(c.Er) + std::norm(c.Ephi) + std::norm(c.Ez);
    const double h2 = std::norm(c.Hr) + std::norm(c.Hphi) + std::norm(c.Hz);
    const double imE = std::imag(std::conj(c.Er) * c.Ephi);
    const double imH = std::imag(std::conj(c.Hr) * c.Hphi);
    const double ce = eps0 * n * n, cm = mu0;

    AMDensities d;
    d.j_orb = a2 * p *
              (ce / (4.0 * w) * (l * e2 - 2.0 * imE) +
               cm / (4.0 * w) * (l * h2 - 2.0 * imH));
    d.j_spin =
        a2 * p * (ce / (2.0 * w) * imE + cm / (2.0 * w) * imH);
    d.j_can = d.j_orb + d.j_spin;
    d.u = a2 * 0.25 * (ce * e2 + cm * h2);
    return d;
}

double photon_am(const GuidedMode& mode, double amplitude, int p, int l,
                 double r) {
    const AMDensities d = am_densities(mode, amplitude, p, l, r);
    if (!(d.u > 0.0))
        throw DegeneratePoint("photon_am: energy density vanishes here");
    return hbar * mode.omega() * d.j_can / d.u;
}

IntegratedAM integrated_am(const GuidedMode& mode, double amplitude, int p,
                           int l) {
    const double a = mode.fiber.radius_a;
    const double block = std::max(0.25 * a, 1.0 / mode.params.q);
    auto piece = [&](auto select) {
        auto f = [&](double r) {
            return select(am_densities(mode, amplitude, p, l, r)) * r;
        };
        const double inner = quad::integrate(f, 0.0, a, 1e-10);
        const double outer =
            quad::integrate_decaying(f, a, block, 1e-10, 1e-10);
        return 2.0 * pi * (inner + outer);
    };
    IntegratedAM out;
    out.J_orb = piece([](const AMDensities& d) { return d.j_orb; });
    out.J_spin = piece([](const AMDensities& d) { return d.j_spin; });
    out.U = piece([](const AMDensities& d) { return d.u; });
    return out;
}

double integrated_am_poynting(const GuidedMode& mode, double amplitude) {
    const double a = mode.fiber.radius_a;
    const double block = std::max(0.25 * a, 1.0 / mode.params.q);
    const double a2 = amplitude * amplitude;
    auto f = [&](double r) {
        const FieldComponents c = mode.assembled(r);
        const double n = r < a ? mode.fiber.n1 : mode.fiber.n2;
        const double s_phi =
            0.5 * std::real(c.Ez * std::conj(c.Hr) - c.Er * std::conj(c.Hz));
        return n * n * s_phi * r * r;
    };
    const double inner = quad::integrate(f, 0.0, a, 1e-10);
    const double outer = quad::integrate_decaying(f, a, block, 1e-10, 1e-10);
    return a2 * 2.0 * pi * (inner + outer) / (c_light * c_light);
}

}  // namespace nanofiber
