// coupling.cpp
#include "nanofiber/coupling.hpp"

#include <array>
#include <cmath>

#include "nanofiber/constants.hpp"
#include "nanofiber/errors.hpp"

namespace nanofiber {

namespace {
using cplx = std::complex<double>;
const cplx kI(0.0, 1.0);

cplx position_phase(double fbeta_z, double circ_l_phi, int q, double phi) {
    // e^{-i q phi} e^{i(f beta z + p l phi)}
    return std::exp(kI * (fbeta_z + circ_l_phi - q * phi));
}
}  // namespace

double AtomSpec::omega0() const { return 2.0 * pi * c_light / lambda0; }

void AtomSpec::validate(const FiberSpec& fiber) const {
    if (!(lambda0 > 0.0)) throw Error("AtomSpec: lambda0 must be positive");
    if (!(gamma0 > 0.0)) throw Error("AtomSpec: gamma0 must be positive");
    if (q < -1 || q > 1) throw Error("AtomSpec: q must be -1, 0 or +1");
    if (!(r > fiber.radius_a))
        throw Error("AtomSpec: the atom must sit outside the core, r > a");
}

double dipole_magnitude(const AtomSpec& atom) {
    const double w0 = atom.omega0();
    return std::sqrt(3.0 * pi * eps0 * hbar * c_light * c_light * c_light *
                     atom.gamma0 / (w0 * w0 * w0));
}

cplx spherical_component(const FieldComponents& f, int m) {
    switch (m) {
        case 0: return f.Ez;
        case +1: return -(f.Er + kI * f.Ephi) / std::sqrt(2.0);
        case -1: return (f.Er - kI * f.Ephi) / std::sqrt(2.0);
    }
    throw Error("spherical_component: m must be -1, 0 or +1");
}

cplx coupling_guided(const AtomSpec& atom, const GuidedMode& mode) {
    atom.validate(mode.fiber);
    const double d = dipole_magnitude(atom);
    const double sign = atom.q == 0 ? 1.0 : -1.0;  // (-1)^q for q = +-1
    const cplx e_mq = spherical_component(mode.assembled(atom.r), -atom.q);
    const double pref =
        std::sqrt(mode.omega() * mode.beta_prime / (4.0 * pi * eps0 * hbar));
    const int pl = mode.circulation() * mode.id.kind.azimuthal_l;
    return pref * sign * d * e_mq *
           position_phase(mode.id.f * mode.beta * atom.z, pl * atom.phi,
                          atom.q, atom.phi);
}

double gamma_guided_rate(const AtomSpec& atom, const GuidedMode& mode) {
    return 2.0 * pi * std::norm(coupling_guided(atom, mode));
}

bool GuidedChannel::operator<(const GuidedChannel& o) const {
    const auto key = [](const GuidedChannel& c) {
        return std::tuple{(int)c.kind.family, c.kind.azimuthal_l,
                          c.kind.radial_m, c.f, c.p};
    };
    return key(*this) < key(o);
}

std::string GuidedChannel::label() const {
    std::string s = kind.label();
    s += f > 0 ? " f=+1" : " f=-1";
    if (p != 0) s += p > 0 ? " p=+1" : " p=-1";
    return s;
}

double EmissionBreakdown::guided_sum() const {
    double s = 0.0;
    for (const auto& [ch, g] : gamma_guided) s += g;
    return s;
}

double EmissionBreakdown::radiation_sum() const {
    double s = 0.0;
    for (const auto& [l, g] : gamma_radiation) s += g;
    return s;
}

double EmissionBreakdown::guided_pl_sum() const {
    double s = 0.0;
    for (const auto& [ch, g] : gamma_guided)
        s += ch.p * ch.kind.azimuthal_l * g;
    return s;
}

double EmissionBreakdown::radiation_l_sum() const {
    double s = 0.0;
    for (const auto& [l, g] : gamma_radiation) s += l * g;
    return s;
}

struct RadiationRateEvaluator::NodeModes {
    RadiationMode plus;   // p = +1
    RadiationMode minus;  // p = -1
    double weight;
};

RadiationRateEvaluator::RadiationRateEvaluator(
    const FiberSpec& fiber, const RadiationQuadraturePlan& plan)
    : fiber_(fiber), plan_(plan) {
    fiber_.validate();
}

const std::vector<RadiationRateEvaluator::NodeModes>&
RadiationRateEvaluator::modes_for(int l) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(l);
    if (it != cache_.end()) return it->second;
    std::vector<NodeModes> v;
    v.reserve(plan_.nodes.size());
    for (std::size_t i = 0; i < plan_.nodes.size(); ++i) {
        RadiationModeId idp{plan_.omega, plan_.nodes[i], l, +1};
        RadiationModeId idm{plan_.omega, plan_.nodes[i], l, -1};
        v.push_back(NodeModes{radiation_profile(fiber_, idp),
                              radiation_profile(fiber_, idm),
                              plan_.weights[i]});
    }
    return cache_.emplace(l, std::move(v)).first->second;
}

std::array<std::map<int, double>, 3> RadiationRateEvaluator::rates_all_q(
    double r_atom, double dipole) const {
    // gamma_rad(l) = (omega d^2 / (2 eps0 hbar)) sum_p int dbeta |e_{-q}|^2
    const double pref =
        plan_.omega * dipole * dipole / (2.0 * eps0 * hbar);
    std::array<std::map<int, double>, 3> out;

    auto shell = [&](int l) {
        std::array<double, 3> acc{0.0, 0.0, 0.0};
        for (const NodeModes& nm : modes_for(l)) {
            const FieldComponents fp = nm.plus.at(r_atom);
            const FieldComponents fm = nm.minus.at(r_atom);
            for (int q = -1; q <= 1; ++q) {
                const double v = std::norm(spherical_component(fp, -q)) +
                                 std::norm(spherical_component(fm, -q));
                acc[q + 1] += nm.weight * v;
            }
        }
        for (int iq = 0; iq < 3; ++iq) {
            out[iq][l] = pref * acc[iq];
        }
        return pref * (acc[0] + acc[1] + acc[2]);
    };

    double running = shell(0);
    int quiet = 0;
    for (int m = 1; m <= plan_.l_cap; ++m) {
        const double add = shell(m) + shell(-m);
        running += add;
        if (add < plan_.shell_cutoff() * running) {
            if (++quiet >= 3) return out;
        } else {
            quiet = 0;
        }
    }
    throw QuadratureNotConverged(
        "radiation rates: azimuthal sum hit the l cap before its tail rule");
}

std::map<int, double> RadiationRateEvaluator::rates(double r_atom, int q,
                                                    double dipole) const {
    return rates_all_q(r_atom, dipole)[q + 1];
}

std::map<int, double> gamma_radiation_rate(const AtomSpec& atom,
                                           const FiberSpec& fiber,
                                           const RadiationQuadraturePlan& plan) {
    atom.validate(fiber);
    RadiationRateEvaluator ev(fiber, plan);
    return ev.rates(atom.r, atom.q, dipole_magnitude(atom));
}

GuidedMode with_orientation(const GuidedMode& mode, int f, int p) {
    GuidedMode m = mode;
    m.id.f = f;
    m.id.p = p;
    m.id.validate();
    return m;
}

EmissionBreakdown total_gamma(const AtomSpec& atom, const FiberSpec& fiber,
                              double tol) {
    atom.validate(fiber);
    const double w0 = atom.omega0();
    EmissionBreakdown out;

    for (const ModeKind& kind : enumerate_guided(fiber, w0)) {
        GuidedModeId id{w0, kind, +1,
                        kind.family == ModeFamily::TE ||
                                kind.family == ModeFamily::TM
                            ? 0
                            : +1};
        const GuidedMode base = mode_profile(fiber, id);
        const bool hybrid = id.p != 0;
        for (int p : hybrid ? std::vector<int>{+1, -1} : std::vector<int>{0}) {
            for (int f : {+1, -1}) {
                const GuidedMode m = with_orientation(base, f, p);
                out.gamma_guided[GuidedChannel{kind, f, p}] =
                    gamma_guided_rate(atom, m);
            }
        }
    }

    const auto plan = radiation_quadrature(fiber, w0, tol);
    out.gamma_radiation =
        gamma_radiation_rate(atom, fiber, plan);

    out.gamma_total = out.guided_sum() + out.radiation_sum();
    return out;
}

cplx rabi_frequency(const AtomSpec& atom, const GuidedMode& drive_mode,
                    double amplitude_A) {
    atom.validate(drive_mode.fiber);
    const double d = dipole_magnitude(atom);
    const double sign = atom.q == 0 ? 1.0 : -1.0;
    const cplx e_mq =
        spherical_component(drive_mode.assembled(atom.r), -atom.q);
    const int pl =
        drive_mode.circulation() * drive_mode.id.kind.azimuthal_l;
    return sign * d * amplitude_A * e_mq / hbar *
           position_phase(drive_mode.id.f * drive_mode.beta * atom.z,
                          pl * atom.phi, atom.q, atom.phi);
}

}  // namespace nanofiber
