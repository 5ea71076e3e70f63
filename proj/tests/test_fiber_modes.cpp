// test_fiber_modes.cpp
//
// The eigenvalue oracle here is deliberately a different formulation from
// the solver under test: the 4x4 boundary-condition determinant in the
// amplitudes (A, B, C, D) of E_z/H_z inside/outside, scanned densely in
// beta and bisected. Frozen reference numbers come from a 35-digit
// arbitrary-precision evaluation (mpmath) of the dispersion relations and
// profile integrals.
#include "doctest.h"

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "nanofiber/bessel.hpp"
#include "nanofiber/constants.hpp"
#include "nanofiber/errors.hpp"
#include "nanofiber/fiber_modes.hpp"

using namespace nanofiber;

namespace {

// Fig. 2 fiber of the reference configuration: a = 350 nm, n1 = 1.4537,
// vacuum cladding, lambda = 780 nm.
const FiberSpec kFiber{350e-9, 1.4537, 1.0};
const double kOmega = 2.0 * pi * c_light / 780e-9;

// frozen oracle values (35-digit arithmetic)
const double kV = 2.9747360125007205577;
const double kBetaHE11 = 10355963.66302885299858;
const double kBetaHE21 = 8274364.942409883595417;
const double kBetaTE01 = 8786493.593822788822389;
const double kBetaTM01 = 8490136.177206626430804;
const double kGroupIndexHE11 = 1.5557533222627480716;
const double kGroupIndexHE21 = 1.5012791737220236989;
const double kGroupIndexTE01 = 1.5764167607313157695;
const double kGroupIndexTM01 = 1.4167947213127159607;
const double kFluxHE21 = 0.00088405233831760562744;     // W/V^2
const double kAmp1pW_HE21 = 0.000033632644083325866712;  // V

// HE21 normalized reduced profiles (er, ephi, ez, hr, hphi, hz)
const double kHE21Half[6] = {573763.0607792601791,  -575516.7370946291078,
                             233159.05186729865259, 2447.263065794146874,
                             2281.3668237894203594, -616.80664181619495207};
const double kHE21OneAndHalf[6] = {
    384010.9527744878422,  -266745.12787692328126, 204766.84430992995218,
    984.35108396453817963, 742.94949092503131572,  -541.69696000475863106};

double rel(double got, double want) {
    return std::abs(got - want) / std::abs(want);
}

// Determinant of the tangential-continuity system at r = a for azimuthal
// order l. Quadrature phases folded out so all entries are real.
double boundary_det(const FiberSpec& fb, double omega, int l, double beta) {
    const double k = omega / c_light;
    const double a = fb.radius_a;
    const double h = std::sqrt(k * k * fb.n1 * fb.n1 - beta * beta);
    const double q = std::sqrt(beta * beta - k * k * fb.n2 * fb.n2);
    const double u = h * a, w = q * a;
    const double J = bessel::J(l, u), K = bessel::K(l, w);
    const double Jd = bessel::dJ(l, u), Kd = bessel::dK(l, w);
    double M[4][4] = {
        {J, 0.0, -K, 0.0},
        {0.0, J, 0.0, -K},
        {beta * l / a * J / (h * h), -omega * mu0 * Jd / h,
         beta * l / a * K / (q * q), -omega * mu0 * Kd / q},
        {omega * eps0 * fb.n1 * fb.n1 * Jd / h, -beta * l / a * J / (h * h),
         omega * eps0 * fb.n2 * fb.n2 * Kd / q, -beta * l / a * K / (q * q)},
    };
    // row scaling, then elimination with partial pivoting
    double det = 1.0;
    for (int r = 0; r < 4; ++r) {
        double mx = 0.0;
        for (int c = 0; c < 4; ++c) mx = std::max(mx, std::abs(M[r][c]));
        if (mx == 0.0) return 0.0;
        for (int c = 0; c < 4; ++c) M[r][c] /= mx;
    }
    for (int c = 0; c < 4; ++c) {
        int piv = c;
        for (int r = c + 1; r < 4; ++r)
            if (std::abs(M[r][c]) > std::abs(M[piv][c])) piv = r;
        if (piv != c) {
            std::swap(M[piv], M[c]);
            det = -det;
        }
        if (M[c][c] == 0.0) return 0.0;
        det *= M[c][c];
        for (int r = c + 1; r < 4; ++r) {
            const double f = M[r][c] / M[c][c];
            for (int cc = c; cc < 4; ++cc) M[r][cc] -= f * M[c][cc];
        }
    }
    return det;
}

std::vector<double> det_oracle_roots(const FiberSpec& fb, double omega, int l) {
    const double k = omega / c_light;
    const double lo = k * fb.n2 * (1.0 + 1e-8);
    const double hi = k * fb.n1 * (1.0 - 1e-8);
    const int npts = 20000;
    std::vector<double> roots;
    double pb = lo, pv = boundary_det(fb, omega, l, lo);
    for (int i = 1; i <= npts; ++i) {
        const double b = lo + (hi - lo) * i / npts;
        const double v = boundary_det(fb, omega, l, b);
        if (std::signbit(pv) != std::signbit(v)) {
            double blo = pb, bhi = b, flo = pv;
            while (bhi - blo > 1e-13 * blo) {
                const double mid = 0.5 * (blo + bhi);
                const double fm = boundary_det(fb, omega, l, mid);
                if (std::signbit(fm) == std::signbit(flo)) {
                    blo = mid;
                    flo = fm;
                } else {
                    bhi = mid;
                }
            }
            roots.push_back(0.5 * (blo + bhi));
        }
        pb = b;
        pv = v;
    }
    std::sort(roots.rbegin(), roots.rend());
    return roots;
}

// Composite Simpson, independent of the library quadrature.
double simpson(const std::function<double(double)>& f, double a, double b,
               int n) {
    if (n % 2) ++n;
    const double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}

GuidedMode make(ModeFamily fam, int l, int m, int f = +1, int p = +1) {
    GuidedModeId id;
    id.omega = kOmega;
    id.kind = ModeKind{fam, l, m};
    id.f = f;
    id.p = (fam == ModeFamily::TE || fam == ModeFamily::TM) ? 0 : p;
    return mode_profile(kFiber, id);
}

}  // namespace

TEST_CASE("v_number") {
    CHECK(rel(v_number(kFiber, kOmega), kV) < 1e-13);
    // linear in a
    FiberSpec f2 = kFiber;
    f2.radius_a *= 2.0;
    CHECK(rel(v_number(f2, kOmega), 2.0 * kV) < 1e-13);
    // index contrast -> 0 (n1 -> n2 limit from above)
    FiberSpec f3 = kFiber;
    f3.n1 = kFiber.n2 + 1e-12;
    CHECK(v_number(f3, kOmega) < 1e-5);
}

TEST_CASE("eigenvalues against frozen high-precision roots") {
    const double k = kOmega / c_light;
    for (auto [fam, l, want] :
         {std::tuple{ModeFamily::HE, 1, kBetaHE11},
          std::tuple{ModeFamily::HE, 2, kBetaHE21},
          std::tuple{ModeFamily::TE, 0, kBetaTE01},
          std::tuple{ModeFamily::TM, 0, kBetaTM01}}) {
        const double beta = solve_eigenvalue(kFiber, kOmega, ModeKind{fam, l, 1});
        CHECK(rel(beta, want) < 1e-11);
        CHECK(beta > k * kFiber.n2);
        CHECK(beta < k * kFiber.n1);
    }
}

TEST_CASE("eigenvalues against the boundary-determinant oracle") {
    // l = 1: HE11 only; l = 2: HE21 only; l = 0: TE01 and TM01
    const auto r1 = det_oracle_roots(kFiber, kOmega, 1);
    REQUIRE(r1.size() == 1);
    CHECK(rel(solve_eigenvalue(kFiber, kOmega, ModeKind{ModeFamily::HE, 1, 1}),
              r1[0]) < 1e-10);

    const auto r2 = det_oracle_roots(kFiber, kOmega, 2);
    REQUIRE(r2.size() == 1);
    CHECK(rel(solve_eigenvalue(kFiber, kOmega, ModeKind{ModeFamily::HE, 2, 1}),
              r2[0]) < 1e-10);

    const auto r0 = det_oracle_roots(kFiber, kOmega, 0);
    REQUIRE(r0.size() == 2);
    CHECK(rel(solve_eigenvalue(kFiber, kOmega, ModeKind{ModeFamily::TE, 0, 1}),
              r0[0]) < 1e-10);
    CHECK(rel(solve_eigenvalue(kFiber, kOmega, ModeKind{ModeFamily::TM, 0, 1}),
              r0[1]) < 1e-10);
}

TEST_CASE("below-cutoff modes raise NoGuidedMode") {
    CHECK_THROWS_AS(
        (void)solve_eigenvalue(kFiber, kOmega, ModeKind{ModeFamily::TE, 0, 2}),
        NoGuidedMode);
    CHECK_THROWS_AS(
        (void)solve_eigenvalue(kFiber, kOmega, ModeKind{ModeFamily::EH, 1, 1}),
        NoGuidedMode);
    CHECK_THROWS_AS(
        (void)solve_eigenvalue(kFiber, kOmega, ModeKind{ModeFamily::HE, 3, 1}),
        NoGuidedMode);
}

TEST_CASE("guided set at V = 2.975 is exactly HE11, TE01, TM01, HE21") {
    const auto kinds = enumerate_guided(kFiber, kOmega);
    REQUIRE(kinds.size() == 4);
    std::vector<std::string> labels;
    for (const auto& k : kinds) labels.push_back(k.label());
    std::sort(labels.begin(), labels.end());
    CHECK(labels == std::vector<std::string>{"HE11", "HE21", "TE01", "TM01"});
}

TEST_CASE("group slope") {
    for (auto [fam, l, want] :
         {std::tuple{ModeFamily::HE, 1, kGroupIndexHE11},
          std::tuple{ModeFamily::HE, 2, kGroupIndexHE21},
          std::tuple{ModeFamily::TE, 0, kGroupIndexTE01},
          std::tuple{ModeFamily::TM, 0, kGroupIndexTM01}}) {
        const double bp = group_slope(kFiber, kOmega, ModeKind{fam, l, 1});
        CHECK(bp > 0.0);
        CHECK(rel(c_light * bp, want) < 1e-8);
        // Group index exceeds 1 always; in the strong-confinement regime it
        // also exceeds n1 (slow light), unlike the phase index beta/k which
        // stays between the light lines.
        CHECK(c_light * bp > 1.0);
        CHECK(c_light * bp < 2.0);
    }

    // stencil convergence: 1e-6 and 1e-7 steps agree
    const ModeKind he11{ModeFamily::HE, 1, 1};
    const double d7 = 1e-7 * kOmega;
    const double bp7 = (solve_eigenvalue(kFiber, kOmega + d7, he11) -
                        solve_eigenvalue(kFiber, kOmega - d7, he11)) /
                       (2.0 * d7);
    CHECK(rel(group_slope(kFiber, kOmega, he11), bp7) < 1e-8);

    // weak-guiding limit: group index approaches the uniform-medium value
    const FiberSpec weak{5e-6, 1.4601, 1.46};
    const double bpw = group_slope(weak, kOmega, he11);
    CHECK(std::abs(c_light * bpw - 1.46) < 2e-3);
}

TEST_CASE("boundary conditions of the profiles") {
    const double a = kFiber.radius_a;
    const double rm = a * (1.0 - 1e-12), rp = a * (1.0 + 1e-12);
    for (auto fam_l : {std::pair{ModeFamily::HE, 1}, {ModeFamily::HE, 2},
                       {ModeFamily::TE, 0}, {ModeFamily::TM, 0}}) {
        const GuidedMode m = make(fam_l.first, fam_l.second, 1);
        const ReducedProfile in = m.reduced(rm), out = m.reduced(rp);
        const double scale = std::sqrt(in.er * in.er + in.ephi * in.ephi +
                                       in.ez * in.ez);
        // tangential components continuous
        CHECK(std::abs(in.ephi - out.ephi) < 1e-9 * scale);
        CHECK(std::abs(in.ez - out.ez) < 1e-9 * scale);
        const double hscale =
            std::sqrt(in.hr * in.hr + in.hphi * in.hphi + in.hz * in.hz) +
            1e-300;
        CHECK(std::abs(in.hphi - out.hphi) < 1e-9 * hscale);
        CHECK(std::abs(in.hz - out.hz) < 1e-9 * hscale);
        // normal D continuous: n1^2 er(a-) = n2^2 er(a+)
        CHECK(std::abs(kFiber.n1 * kFiber.n1 * in.er -
                       kFiber.n2 * kFiber.n2 * out.er) < 1e-9 * scale);
    }
}

TEST_CASE("TE01 has no longitudinal or radial electric field") {
    const GuidedMode te = make(ModeFamily::TE, 0, 1);
    for (double r : {0.2, 0.7, 1.1, 2.0, 3.5}) {
        const ReducedProfile p = te.reduced(r * kFiber.radius_a);
        CHECK(p.er == 0.0);
        CHECK(p.ez == 0.0);
        CHECK(p.ephi != 0.0);
    }
}

TEST_CASE("normalization re-verified by an independent Simpson quadrature") {
    for (auto fam_l : {std::pair{ModeFamily::HE, 1}, {ModeFamily::HE, 2},
                       {ModeFamily::TE, 0}, {ModeFamily::TM, 0}}) {
        const GuidedMode m = make(fam_l.first, fam_l.second, 1);
        auto dens = [&](double r) {
            const ReducedProfile p = m.reduced(r);
            const double n = r < kFiber.radius_a ? kFiber.n1 : kFiber.n2;
            return n * n * (p.er * p.er + p.ephi * p.ephi + p.ez * p.ez) * r;
        };
        // keep the panel ends strictly off the core boundary: the density
        // has a step at r = a and each branch must sample its own side
        const double a = kFiber.radius_a;
        const double inner = simpson(dens, 0.0, a * (1.0 - 1e-12), 4000);
        const double outer = simpson(dens, a * (1.0 + 1e-12), 40.0 * a, 40000);
        CHECK(std::abs(2.0 * pi * (inner + outer) - 1.0) < 1e-8);
    }
}

TEST_CASE("profiles decay monotonically outside the core") {
    const GuidedMode m = make(ModeFamily::HE, 2, 1);
    double prev = 1e300;
    for (double x = 1.0; x < 12.0; x += 0.5) {
        const ReducedProfile p = m.reduced(x * kFiber.radius_a);
        const double mag = std::sqrt(p.er * p.er + p.ephi * p.ephi +
                                     p.ez * p.ez);
        CHECK(mag < prev);
        prev = mag;
    }
}

TEST_CASE("HE21 profile values against frozen high-precision references") {
    const GuidedMode m = make(ModeFamily::HE, 2, 1);
    const double a = kFiber.radius_a;
    const ReducedProfile ph = m.reduced(0.5 * a);
    const double* w = kHE21Half;
    for (auto [got, want] : {std::pair{ph.er, w[0]}, {ph.ephi, w[1]},
                             {ph.ez, w[2]}, {ph.hr, w[3]}, {ph.hphi, w[4]},
                             {ph.hz, w[5]}})
        CHECK(rel(got, want) < 1e-9);
    const ReducedProfile po = m.reduced(1.5 * a);
    const double* v = kHE21OneAndHalf;
    for (auto [got, want] : {std::pair{po.er, v[0]}, {po.ephi, v[1]},
                             {po.ez, v[2]}, {po.hr, v[3]}, {po.hphi, v[4]},
                             {po.hz, v[5]}})
        CHECK(rel(got, want) < 1e-9);
}

TEST_CASE("assembled components carry the documented quadrature phases") {
    const GuidedMode m = make(ModeFamily::HE, 2, 1, +1, +1);
    const double r = 1.3 * kFiber.radius_a;
    const FieldComponents c = m.assembled(r);
    CHECK(c.Er.real() == 0.0);   // radial E in quadrature
    CHECK(c.Ephi.imag() == 0.0);
    CHECK(c.Ez.imag() == 0.0);
    CHECK(c.Hr.imag() == 0.0);
    CHECK(c.Hphi.real() == 0.0);
    CHECK(c.Hz.real() == 0.0);

    const GuidedMode mp = make(ModeFamily::HE, 2, 1, +1, -1);
    const FieldComponents cp = mp.assembled(r);
    CHECK(cp.Ephi.real() == -c.Ephi.real());  // p flip
    CHECK(cp.Er == c.Er);

    const GuidedMode mf = make(ModeFamily::HE, 2, 1, -1, +1);
    const FieldComponents cf = mf.assembled(r);
    CHECK(cf.Ez.real() == -c.Ez.real());  // f flip
    CHECK(cf.Hr.real() == -c.Hr.real());
    CHECK(cf.Hphi.imag() == -c.Hphi.imag());
    CHECK(cf.Hz == c.Hz);
}

TEST_CASE("power amplitude") {
    const GuidedMode m = make(ModeFamily::HE, 2, 1);
    CHECK(power_amplitude(m, 0.0) == 0.0);
    const double a1 = power_amplitude(m, 1e-12);
    const double a4 = power_amplitude(m, 4e-12);
    CHECK(rel(a4, 2.0 * a1) < 1e-12);
    CHECK(rel(unit_poynting_flux(m), kFluxHE21) < 1e-9);
    CHECK(rel(a1, kAmp1pW_HE21) < 1e-9);
}
