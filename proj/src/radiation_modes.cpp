// radiation_modes.cpp - boundary matching and continuum normalization.
#include "nanofiber/radiation_modes.hpp"

#include <array>
#include <cmath>

#include "nanofiber/bessel.hpp"
#include "nanofiber/constants.hpp"
#include "nanofiber/errors.hpp"
#include "nanofiber/quadrature.hpp"

namespace nanofiber {

namespace {

using cplx = std::complex<double>;
const cplx kI(0.0, 1.0);

cplx hankel1(int l, double x) { return cplx(bessel::J(l, x), bessel::Y(l, x)); }
cplx hankel1d(int l, double x) { return cplx(bessel::dJ(l, x), bessel::dY(l, x)); }

// Solve M x = rhs for a 4x4 complex system, partial pivoting.
std::array<cplx, 4> solve4(std::array<std::array<cplx, 4>, 4> M,
                           std::array<cplx, 4> rhs) {
    for (int c = 0; c < 4; ++c) {
        int piv = c;
        for (int r = c + 1; r < 4; ++r)
            if (std::abs(M[r][c]) > std::abs(M[piv][c])) piv = r;
        std::swap(M[piv], M[c]);
        std::swap(rhs[piv], rhs[c]);
        if (std::abs(M[c][c]) == 0.0)
            throw Error("radiation_profile: singular boundary system");
        for (int r = c + 1; r < 4; ++r) {
            const cplx f = M[r][c] / M[c][c];
            for (int cc = c; cc < 4; ++cc) M[r][cc] -= f * M[c][cc];
            rhs[r] -= f * rhs[c];
        }
    }
    std::array<cplx, 4> x{};
    for (int r = 3; r >= 0; --r) {
        cplx s = rhs[r];
        for (int c = r + 1; c < 4; ++c) s -= M[r][c] * x[c];
        x[r] = s / M[r][r];
    }
    return x;
}

struct OutsideCoeffs {
    cplx C1, C2, D1, D2;
};

// Tangential continuity at r = a for inside amplitudes (A, B).
OutsideCoeffs match_boundary(const FiberSpec& fb, double omega, int l,
                             double beta, double q, double sigma, cplx A,
                             cplx B) {
    const double a = fb.radius_a;
    const int al = std::abs(l);
    const double J = bessel::J(al, q * a);
    const double Jd = bessel::dJ(al, q * a);
    const cplx H1 = hankel1(al, sigma * a);
    const cplx H1d = hankel1d(al, sigma * a);
    const cplx H2 = std::conj(H1);
    const cplx H2d = std::conj(H1d);

    const double bl = beta * l / a;
    const double wm = omega * mu0;
    const double we1 = omega * eps0 * fb.n1 * fb.n1;
    const double we2 = omega * eps0 * fb.n2 * fb.n2;
    const double s2 = sigma * sigma, g2 = q * q;

    // unknowns (C1, C2, D1, D2); rows: Ez, Hz, Ephi, Hphi continuity
    std::array<std::array<cplx, 4>, 4> M{{
        {H1, H2, 0.0, 0.0},
        {0.0, 0.0, H1, H2},
        {-bl / s2 * H1, -bl / s2 * H2, -kI * wm / sigma * H1d,
         -kI * wm / sigma * H2d},
        {kI * we2 / sigma * H1d, kI * we2 / sigma * H2d, -bl / s2 * H1,
         -bl / s2 * H2},
    }};
    std::array<cplx, 4> rhs = {
        A * J,
        B * J,
        -bl / g2 * A * J - kI * wm / q * B * Jd,
        -bl / g2 * B * J + kI * we1 / q * A * Jd,
    };
    const auto x = solve4(M, rhs);
    return OutsideCoeffs{x[0], x[1], x[2], x[3]};
}

// delta-normalization target for the squared outside amplitudes
double norm_target(double omega, double sigma) {
    return sigma * sigma / (4.0 * pi * omega);
}

// <u|v> in the asymptotic-amplitude inner product (bra conjugated).
cplx gram_cross(const FiberSpec& fb, const OutsideCoeffs& u,
                const OutsideCoeffs& v) {
    const double n2s = fb.n2 * fb.n2;
    const double z = mu0 / eps0;
    return n2s * (std::conj(u.C1) * v.C1 + std::conj(u.C2) * v.C2) +
           z * (std::conj(u.D1) * v.D1 + std::conj(u.D2) * v.D2);
}

}  // namespace

void RadiationModeId::validate(const FiberSpec& fiber) const {
    fiber.validate();
    if (!(omega > 0.0)) throw Error("RadiationModeId: omega must be positive");
    if (p != 1 && p != -1) throw Error("RadiationModeId: p must be +-1");
    const double bmax = omega / c_light * fiber.n2;
    if (!(std::abs(beta) < bmax))
        throw InvalidBeta("RadiationModeId: |beta| must be below omega n2 / c");
}

RadiationMode radiation_profile(const FiberSpec& fiber,
                                const RadiationModeId& id) {
    id.validate(fiber);
    RadiationMode m;
    m.id = id;
    m.fiber = fiber;
    const double k = id.omega / c_light;
    m.q_in = std::sqrt(k * k * fiber.n1 * fiber.n1 - id.beta * id.beta);
    m.sigma = std::sqrt(k * k * fiber.n2 * fiber.n2 - id.beta * id.beta);
    const int al = std::abs(id.l);

    // Near the light line at high azimuthal order the outside Hankel
    // functions at the core surface exceed any double-precision scale while
    // the core scattering they encode is smaller than roundoff; build the
    // free-space wave instead.
    const bool overflow_risk =
        al >= 2 &&
        bessel::log_abs_Y_small_arg(al, m.sigma * fiber.radius_a) > 130.0;
    if (overflow_risk) {
        m.free_space = true;
        const double target = norm_target(id.omega, m.sigma);
        if (id.p == +1) {  // TM-like: E_z only
            const double c0 = std::sqrt(2.0 * target) / fiber.n2;
            m.A = c0;
            m.C1 = m.C2 = 0.5 * c0;
        } else {  // TE-like: H_z only
            const double d0 = std::sqrt(2.0 * target * eps0 / mu0);
            m.B = d0;
            m.D1 = m.D2 = 0.5 * d0;
        }
        return m;
    }

    // Two independent boundary solutions; B scaled to E-field units.
    const double zinv = std::sqrt(eps0 / mu0);
    const OutsideCoeffs u =
        match_boundary(fiber, id.omega, id.l, id.beta, m.q_in, m.sigma, 1.0, 0.0);
    const OutsideCoeffs v = match_boundary(fiber, id.omega, id.l, id.beta,
                                           m.q_in, m.sigma, 0.0, zinv);

    // Hermitian 2x2 Gram in the asymptotic inner product
    const double g11 = gram_cross(fiber, u, u).real();
    const double g22 = gram_cross(fiber, v, v).real();
    const cplx g12 = gram_cross(fiber, u, v);

    // eigenvectors: orthonormal polarization pair; p=+1 takes the larger
    // eigenvalue branch (for l=0 the Gram decouples into TM/TE and p=+1
    // labels the TM-like solution)
    const double half = 0.5 * (g11 + g22);
    const double off = std::abs(g12);
    const double rad = std::sqrt(0.25 * (g11 - g22) * (g11 - g22) + off * off);
    double lambda;
    cplx alpha, betac;
    if (off < 1e-14 * (std::abs(g11) + std::abs(g22))) {
        const bool pick_first = id.p == +1;
        alpha = pick_first ? 1.0 : 0.0;
        betac = pick_first ? 0.0 : 1.0;
        lambda = pick_first ? g11 : g22;
    } else {
        lambda = id.p == +1 ? half + rad : half - rad;
        alpha = g12;
        betac = cplx(lambda - g11, 0.0);
        const double nn = std::sqrt(std::norm(alpha) + std::norm(betac));
        alpha /= nn;
        betac /= nn;
        // fix the arbitrary overall phase: larger component real positive
        const cplx ref = std::abs(alpha) >= std::abs(betac) ? alpha : betac;
        const cplx phase = std::conj(ref) / std::abs(ref);
        alpha *= phase;
        betac *= phase;
    }

    if (!(lambda > 0.0))
        throw Error("radiation_profile: degenerate polarization Gram");
    const double scale = std::sqrt(norm_target(id.omega, m.sigma) / lambda);

    m.A = scale * alpha;
    m.B = scale * betac * zinv;
    m.C1 = scale * (alpha * u.C1 + betac * v.C1);
    m.C2 = scale * (alpha * u.C2 + betac * v.C2);
    m.D1 = scale * (alpha * u.D1 + betac * v.D1);
    m.D2 = scale * (alpha * u.D2 + betac * v.D2);
    return m;
}

FieldComponents RadiationMode::at(double r) const {
    FieldComponents f;
    const double omega = id.omega;
    const int l = id.l;
    const int al = std::abs(l);
    const double beta = id.beta;

    // transverse fields from the longitudinal pair (kappa^2 > 0 branch):
    //   E_r   = (i beta / kap) Ez' - (omega mu0 l / (kap^2 r)) Hz
    //   E_phi = -(beta l / (kap^2 r)) Ez - (i omega mu0 / kap) Hz'
    //   H_r   = (i beta / kap) Hz' + (omega eps n^2 l / (kap^2 r)) Ez
    //   H_phi = -(beta l / (kap^2 r)) Hz + (i omega eps n^2 / kap) Ez'
    auto fill = [&](cplx Ez, cplx Ezd, cplx Hz, cplx Hzd, double kap,
                    double n) {
        const double k2r = kap * kap * r;
        f.Ez = Ez;
        f.Hz = Hz;
        f.Er = kI * beta / kap * Ezd - omega * mu0 * l / k2r * Hz;
        f.Ephi = -beta * l / k2r * Ez - kI * omega * mu0 / kap * Hzd;
        f.Hr = kI * beta / kap * Hzd + omega * eps0 * n * n * l / k2r * Ez;
        f.Hphi = -beta * l / k2r * Hz + kI * omega * eps0 * n * n / kap * Ezd;
    };

    // Radial basis functions of order |l| throughout (J_{-l} is J_l up to a
    // constant the amplitudes absorb); the signed l lives in the 1/r terms.
    if (free_space || r >= fiber.radius_a) {
        if (free_space) {
            const double x = sigma * r;
            const double J = bessel::J(al, x);
            const double Jd = bessel::dJ(al, x);
            fill(A * J, A * Jd, B * J, B * Jd, sigma, fiber.n2);
        } else {
            const double x = sigma * r;
            const cplx H1 = hankel1(al, x), H1d = hankel1d(al, x);
            const cplx H2 = std::conj(H1), H2d = std::conj(H1d);
            fill(C1 * H1 + C2 * H2, C1 * H1d + C2 * H2d, D1 * H1 + D2 * H2,
                 D1 * H1d + D2 * H2d, sigma, fiber.n2);
        }
    } else {
        const double x = q_in * r;
        const double J = bessel::J(al, x);
        const double Jd = bessel::dJ(al, x);
        fill(A * J, A * Jd, B * J, B * Jd, q_in, fiber.n1);
    }
    return f;
}

RadiationQuadraturePlan radiation_quadrature(const FiberSpec& fiber,
                                             double omega0, double tol) {
    fiber.validate();
    if (!(tol > 0.0)) throw Error("radiation_quadrature: tol must be positive");
    RadiationQuadraturePlan plan;
    plan.omega = omega0;
    plan.tol = tol;
    plan.levels = std::min(22, std::max(6, (int)std::ceil(-std::log10(tol)) + 2));
    plan.l_cap = 40;

    const double B = omega0 / c_light * fiber.n2;
    // geometric break points crowding toward the +-B light lines
    std::vector<double> brk{0.0};
    for (int j = 1; j <= plan.levels; ++j)
        brk.push_back(B * (1.0 - std::pow(2.0, -j)));
    brk.push_back(B);

    const auto& rule = quad::gauss_legendre(32);
    auto add_panel = [&](double lo, double hi) {
        const double half = 0.5 * (hi - lo), mid = 0.5 * (lo + hi);
        for (std::size_t i = 0; i < rule.x.size(); ++i) {
            plan.nodes.push_back(mid + half * rule.x[i]);
            plan.weights.push_back(half * rule.w[i]);
        }
    };
    // negative half first so nodes come out ascending
    for (int j = (int)brk.size() - 1; j >= 1; --j)
        add_panel(-brk[j], -brk[j - 1]);
    for (std::size_t j = 0; j + 1 < brk.size(); ++j)
        add_panel(brk[j], brk[j + 1]);
    return plan;
}

}  // namespace nanofiber
