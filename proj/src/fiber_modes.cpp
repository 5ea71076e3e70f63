// fiber_modes.cpp - dispersion solving and guided-mode profile assembly.
#include "nanofiber/fiber_modes.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "nanofiber/bessel.hpp"
#include "nanofiber/constants.hpp"
#include "nanofiber/errors.hpp"
#include "nanofiber/quadrature.hpp"

namespace nanofiber {

namespace {

constexpr int kScanPoints = 10000;
constexpr double kEdgeMargin = 1e-9;  // relative inset from the light lines

struct Transverse {
    double h, q, u, w;
};

Transverse transverse(const FiberSpec& fb, double k, double beta) {
    Transverse t;
    t.h = std::sqrt(std::max(0.0, k * k * fb.n1 * fb.n1 - beta * beta));
    t.q = std::sqrt(std::max(0.0, beta * beta - k * k * fb.n2 * fb.n2));
    t.u = t.h * fb.radius_a;
    t.w = t.q * fb.radius_a;
    return t;
}

double J_over(int l, double u) {  // J_l'(u) / (u J_l(u))
    return bessel::dJ(l, u) / (u * bessel::J(l, u));
}

double K_over(int l, double w) {  // K_l'(w) / (w K_l(w))
    return bessel::dK(l, w) / (w * bessel::K(l, w));
}

}  // namespace

std::string family_name(ModeFamily f) {
    switch (f) {
        case ModeFamily::HE: return "HE";
        case ModeFamily::EH: return "EH";
        case ModeFamily::TE: return "TE";
        case ModeFamily::TM: return "TM";
    }
    return "?";
}

void FiberSpec::validate() const {
    if (!(radius_a > 0.0)) throw Error("FiberSpec: radius_a must be positive");
    if (!(n1 > n2) || !(n2 >= 1.0))
        throw Error("FiberSpec: need n1 > n2 >= 1");
}

void ModeKind::validate() const {
    const bool hybrid = family == ModeFamily::HE || family == ModeFamily::EH;
    if (hybrid && azimuthal_l < 1)
        throw Error("ModeKind: hybrid modes need l >= 1");
    if (!hybrid && azimuthal_l != 0)
        throw Error("ModeKind: TE/TM modes have l = 0");
    if (radial_m < 1) throw Error("ModeKind: radial order m >= 1");
}

std::string ModeKind::label() const {
    std::ostringstream os;
    os << family_name(family) << azimuthal_l << radial_m;
    return os.str();
}

ModeKind parse_mode_label(const std::string& s) {
    if (s.size() < 4) throw ConfigError("mode label too short: '" + s + "'");
    const std::string fam = s.substr(0, 2);
    ModeKind k{};
    if (fam == "HE") k.family = ModeFamily::HE;
    else if (fam == "EH") k.family = ModeFamily::EH;
    else if (fam == "TE") k.family = ModeFamily::TE;
    else if (fam == "TM") k.family = ModeFamily::TM;
    else throw ConfigError("unknown mode family in '" + s + "'");
    const std::string digits = s.substr(2);
    if (digits.size() != 2 || !std::isdigit((unsigned char)digits[0]) ||
        !std::isdigit((unsigned char)digits[1]))
        throw ConfigError("mode label must be FFlm, e.g. HE21: '" + s + "'");
    k.azimuthal_l = digits[0] - '0';
    k.radial_m = digits[1] - '0';
    k.validate();
    return k;
}

void GuidedModeId::validate() const {
    kind.validate();
    if (!(omega > 0.0)) throw Error("GuidedModeId: omega must be positive");
    if (f != 1 && f != -1) throw Error("GuidedModeId: f must be +-1");
    const bool hybrid =
        kind.family == ModeFamily::HE || kind.family == ModeFamily::EH;
    if (hybrid && p != 1 && p != -1)
        throw Error("GuidedModeId: hybrid modes need p = +-1");
    if (!hybrid && p != 0) throw Error("GuidedModeId: TE/TM have p = 0");
}

double v_number(const FiberSpec& fiber, double omega) {
    fiber.validate();
    if (!(omega > 0.0)) throw Error("v_number: omega must be positive");
    return omega / c_light * fiber.radius_a *
           std::sqrt(fiber.n1 * fiber.n1 - fiber.n2 * fiber.n2);
}

double dispersion(const FiberSpec& fiber, double omega, ModeFamily family,
                  int l, double beta) {
    const double k = omega / c_light;
    const Transverse t = transverse(fiber, k, beta);
    const double n1s = fiber.n1 * fiber.n1, n2s = fiber.n2 * fiber.n2;
    if (family == ModeFamily::TE) {
        return bessel::J(1, t.u) / (t.u * bessel::J(0, t.u)) +
               bessel::K(1, t.w) / (t.w * bessel::K(0, t.w));
    }
    if (family == ModeFamily::TM) {
        return n1s * bessel::J(1, t.u) / (t.u * bessel::J(0, t.u)) +
               n2s * bessel::K(1, t.w) / (t.w * bessel::K(0, t.w));
    }
    const double Jq = J_over(l, t.u);
    const double Kq = K_over(l, t.w);
    const double invsum = 1.0 / (t.u * t.u) + 1.0 / (t.w * t.w);
    const double R =
        std::sqrt(std::pow((n1s - n2s) / (2.0 * n1s) * Kq, 2) +
                  std::pow(l * beta / (k * fiber.n1) * invsum, 2));
    const double base = Jq + (n1s + n2s) / (2.0 * n1s) * Kq;
    return family == ModeFamily::HE ? base + R : base - R;
}

std::vector<double> dispersion_roots(const FiberSpec& fiber, double omega,
                                     ModeFamily family, int l) {
    fiber.validate();
    const double k = omega / c_light;
    const double lo = k * fiber.n2 * (1.0 + kEdgeMargin);
    const double hi = k * fiber.n1 * (1.0 - kEdgeMargin);
    std::vector<double> roots;
    if (!(hi > lo)) return roots;

    auto D = [&](double b) { return dispersion(fiber, omega, family, l, b); };

    double prev_b = lo;
    double prev_v = D(lo);
    for (int i = 1; i <= kScanPoints; ++i) {
        const double b = lo + (hi - lo) * i / kScanPoints;
        const double v = D(b);
        if (std::isfinite(prev_v) && std::isfinite(v) &&
            std::signbit(prev_v) != std::signbit(v)) {
            double blo = prev_b, bhi = b, flo = prev_v;
            for (int it = 0; it < 240 && (bhi - blo) > 1e-15 * blo; ++it) {
                const double mid = 0.5 * (blo + bhi);
                const double fm = D(mid);
                if (std::signbit(fm) == std::signbit(flo)) {
                    blo = mid;
                    flo = fm;
                } else {
                    bhi = mid;
                }
            }
            const double root = 0.5 * (blo + bhi);
            // Sign changes across poles of J'/(uJ) leave a huge residual.
            if (std::abs(D(root)) <
                1e-3 * (std::abs(prev_v) + std::abs(v) + 1.0))
                roots.push_back(root);
        }
        prev_b = b;
        prev_v = v;
    }
    std::sort(roots.rbegin(), roots.rend());
    return roots;
}

double solve_eigenvalue(const FiberSpec& fiber, double omega,
                        const ModeKind& kind) {
    kind.validate();
    if (!(omega > 0.0)) throw Error("solve_eigenvalue: omega must be positive");
    const auto roots =
        dispersion_roots(fiber, omega, kind.family, kind.azimuthal_l);
    if ((int)roots.size() < kind.radial_m) {
        std::ostringstream os;
        os << "no guided " << kind.label() << " mode at omega = " << omega
           << " rad/s (V = " << v_number(fiber, omega) << ")";
        throw NoGuidedMode(os.str());
    }
    return roots[kind.radial_m - 1];
}

double group_slope(const FiberSpec& fiber, double omega, const ModeKind& kind) {
    const double d = 1e-6 * omega;
    const double bp = solve_eigenvalue(fiber, omega + d, kind);
    const double bm = solve_eigenvalue(fiber, omega - d, kind);
    return (bp - bm) / (2.0 * d);
}

namespace {

// Unnormalized reduced profiles for a solved mode.
ReducedProfile raw_profile(const FiberSpec& fb, const GuidedMode::Params& pr,
                           double omega, double beta, ModeFamily family,
                           int l, double r) {
    ReducedProfile out{};
    if (family == ModeFamily::TE) {
        if (r < fb.radius_a) {
            const double x = pr.h * r;
            out.ephi = (omega * mu0 / pr.h) * bessel::J(1, x);
            out.hr = -(beta / pr.h) * bessel::J(1, x);
            out.hz = -bessel::J(0, x);
        } else {
            const double y = pr.q * r;
            out.ephi = -(omega * mu0 / pr.q) * pr.match * bessel::K(1, y);
            out.hr = (beta / pr.q) * pr.match * bessel::K(1, y);
            out.hz = -pr.match * bessel::K(0, y);
        }
        return out;
    }
    const double s = pr.s, s1 = pr.s1, s2 = pr.s2;
    if (r < fb.radius_a) {
        const double x = pr.h * r;
        const double jm = bessel::J(l - 1, x), jp = bessel::J(l + 1, x);
        const double ce = beta / (2.0 * pr.h);
        const double ch = omega * eps0 * fb.n1 * fb.n1 / (2.0 * pr.h);
        out.er = ce * ((1.0 - s) * jm - (1.0 + s) * jp);
        out.ephi = -ce * ((1.0 - s) * jm + (1.0 + s) * jp);
        out.ez = bessel::J(l, x);
        out.hr = ch * ((1.0 - s1) * jm + (1.0 + s1) * jp);
        out.hphi = ch * ((1.0 - s1) * jm - (1.0 + s1) * jp);
        out.hz = (s * beta / (omega * mu0)) * bessel::J(l, x);
    } else {
        const double y = pr.q * r;
        const double km = bessel::K(l - 1, y), kp = bessel::K(l + 1, y);
        const double ce = beta / (2.0 * pr.q) * pr.match;
        const double ch =
            omega * eps0 * fb.n2 * fb.n2 / (2.0 * pr.q) * pr.match;
        out.er = ce * ((1.0 - s) * km + (1.0 + s) * kp);
        out.ephi = -ce * ((1.0 - s) * km - (1.0 + s) * kp);
        out.ez = pr.match * bessel::K(l, y);
        out.hr = ch * ((1.0 - s2) * km - (1.0 + s2) * kp);
        out.hphi = ch * ((1.0 - s2) * km + (1.0 + s2) * kp);
        out.hz = (s * beta / (omega * mu0)) * pr.match * bessel::K(l, y);
    }
    return out;
}

}  // namespace

GuidedMode mode_profile(const FiberSpec& fiber, const GuidedModeId& id) {
    fiber.validate();
    id.validate();
    GuidedMode m;
    m.id = id;
    m.fiber = fiber;
    m.beta = solve_eigenvalue(fiber, id.omega, id.kind);
    m.beta_prime = group_slope(fiber, id.omega, id.kind);

    const double k = id.omega / c_light;
    const Transverse t = transverse(fiber, k, m.beta);
    m.params.h = t.h;
    m.params.q = t.q;
    m.params.u = t.u;
    m.params.w = t.w;
    const int l = id.kind.azimuthal_l;
    if (id.kind.family == ModeFamily::TE) {
        m.params.s = m.params.s1 = m.params.s2 = 0.0;
        m.params.match = bessel::J(0, t.u) / bessel::K(0, t.w);
    } else {
        const double s =
            l == 0 ? 0.0
                   : l * (1.0 / (t.u * t.u) + 1.0 / (t.w * t.w)) /
                         (J_over(l, t.u) + K_over(l, t.w));
        m.params.s = s;
        m.params.s1 = m.beta * m.beta * s / (k * k * fiber.n1 * fiber.n1);
        m.params.s2 = m.beta * m.beta * s / (k * k * fiber.n2 * fiber.n2);
        m.params.match = bessel::J(l, t.u) / bessel::K(l, t.w);
    }
    m.params.scale = 1.0;

    // Normalize: int n^2 |e|^2 dA = 1.
    auto e_density = [&](double r) {
        const ReducedProfile p = raw_profile(fiber, m.params, id.omega, m.beta,
                                             id.kind.family, l, r);
        const double n = r < fiber.radius_a ? fiber.n1 : fiber.n2;
        return n * n * (p.er * p.er + p.ephi * p.ephi + p.ez * p.ez) * r;
    };
    const double a = fiber.radius_a;
    const double inner = quad::integrate(e_density, 0.0, a, 1e-12);
    const double block = std::max(0.25 * a, 1.0 / t.q);
    const double outer =
        quad::integrate_decaying(e_density, a, block, 1e-12, 1e-13);
    const double norm = 2.0 * pi * (inner + outer);
    if (!(norm > 0.0)) throw Error("mode_profile: degenerate normalization");
    m.params.scale = 1.0 / std::sqrt(norm);
    return m;
}

ReducedProfile GuidedMode::reduced(double r) const {
    ReducedProfile p = raw_profile(fiber, params, id.omega, beta,
                                   id.kind.family, id.kind.azimuthal_l, r);
    p.er *= params.scale;
    p.ephi *= params.scale;
    p.ez *= params.scale;
    p.hr *= params.scale;
    p.hphi *= params.scale;
    p.hz *= params.scale;
    return p;
}

FieldComponents GuidedMode::assembled(double r) const {
    const ReducedProfile p = reduced(r);
    const double f = id.f;
    const double sp = circulation() != 0 ? id.p : 1.0;
    const std::complex<double> i1(0.0, 1.0);
    FieldComponents c;
    c.Er = i1 * p.er;
    c.Ephi = sp * p.ephi;
    c.Ez = f * p.ez;
    c.Hr = f * sp * p.hr;
    c.Hphi = i1 * f * p.hphi;
    c.Hz = i1 * sp * p.hz;
    return c;
}

std::vector<ModeKind> enumerate_guided(const FiberSpec& fiber, double omega) {
    std::vector<ModeKind> kinds;
    for (ModeFamily fam : {ModeFamily::HE, ModeFamily::EH}) {
        for (int l = 1; l < 64; ++l) {
            const auto roots = dispersion_roots(fiber, omega, fam, l);
            if (roots.empty()) break;  // cutoffs rise with l
            for (int mth = 1; mth <= (int)roots.size(); ++mth)
                kinds.push_back(ModeKind{fam, l, mth});
        }
    }
    for (ModeFamily fam : {ModeFamily::TE, ModeFamily::TM}) {
        const auto roots = dispersion_roots(fiber, omega, fam, 0);
        for (int mth = 1; mth <= (int)roots.size(); ++mth)
            kinds.push_back(ModeKind{fam, 0, mth});
    }
    return kinds;
}

double unit_poynting_flux(const GuidedMode& mode) {
    auto sz = [&](double r) {
        const ReducedProfile p = mode.reduced(r);
        return (p.er * p.hphi - p.ephi * p.hr) * r;
    };
    const double a = mode.fiber.radius_a;
    const double inner = quad::integrate(sz, 0.0, a, 1e-11);
    const double block = std::max(0.25 * a, 1.0 / mode.params.q);
    const double outer =
        quad::integrate_decaying(sz, a, block, 1e-11, 1e-12);
    return 0.5 * 2.0 * pi * (inner + outer);
}

double power_amplitude(const GuidedMode& mode, double power_watts) {
    if (power_watts < 0.0) throw Error("power_amplitude: negative power");
    const double p1 = unit_poynting_flux(mode);
    if (!(p1 > 0.0))
        throw DegenerateMode("power_amplitude: non-positive axial flux");
    return std::sqrt(power_watts / p1);
}

}  // namespace nanofiber
