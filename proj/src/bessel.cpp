// bessel.cpp - series / recurrence / asymptotic evaluation of J, Y, I, K.
//
// Regimes:
//   J0,J1,Y0,Y1 : Maclaurin / log series for x <= 18 (long double
//                 accumulation absorbs the alternating-series cancellation),
//                 Hankel asymptotic expansions beyond.
//   Jn          : upward recurrence when x > n, Miller's downward
//                 recurrence with the even-order sum normalization otherwise.
//   Yn, Kn      : upward recurrence (the growing direction, always stable).
//   I0,I1       : positive-term series for x <= 18, asymptotic expansion
//                 beyond (computed in scaled form).
//   In          : downward-recurrence ratios normalized against I0.
//   K0,K1       : log series for x <= 2, Steed continued fraction beyond.
//
// Checked against 35-digit arbitrary-precision values in test_bessel.cpp.

#include "nanofiber/bessel.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace nanofiber::bessel {

namespace {

using ld = long double;

constexpr ld kPi = 3.14159265358979323846264338327950288L;
constexpr ld kEulerGamma = 0.577215664901532860606512090082402431L;
constexpr ld kSeriesSwitch = 18.0L;   // series <-> asymptotic crossover for J, Y, I
constexpr ld kEps = 1e-19L;

// Hankel asymptotic amplitude series P(n,x), Q(n,x)  (|x| > ~18):
//   J_n = sqrt(2/pi x) [P cos(chi) - Q sin(chi)],  chi = x - (2n+1) pi/4
//   Y_n = sqrt(2/pi x) [P sin(chi) + Q cos(chi)]
void hankel_pq(int n, ld x, ld& P, ld& Q) {
    const ld mu = 4.0L * n * n;
    const ld i8x = 1.0L / (8.0L * x);
    ld term = 1.0L;
    P = 1.0L;
    Q = 0.0L;
    ld prev = std::numeric_limits<ld>::max();
    for (int k = 1; k < 60; ++k) {
        const ld f = (2 * k - 1);
        term *= (mu - f * f) * i8x / k;
        const ld at = fabsl(term);
        if (at > prev) break;  // past the smallest term of the divergent tail
        prev = at;
        switch (k & 3) {
            case 1: Q += term; break;
            case 2: P -= term; break;
            case 3: Q -= term; break;
            case 0: P += term; break;
        }
        if (at < kEps) break;
    }
}

ld j0_series(ld x) {
    const ld x24 = x * x / 4.0L;
    ld term = 1.0L, sum = 1.0L;
    for (int k = 1; k < 80; ++k) {
        term *= -x24 / ((ld)k * k);
        sum += term;
        if (fabsl(term) < kEps * fabsl(sum)) break;
    }
    return sum;
}

ld j1_series(ld x) {
    const ld x24 = x * x / 4.0L;
    ld term = 1.0L, sum = 1.0L;
    for (int k = 1; k < 80; ++k) {
        term *= -x24 / ((ld)k * (k + 1));
        sum += term;
        if (fabsl(term) < kEps * fabsl(sum)) break;
    }
    return 0.5L * x * sum;
}

ld j0_ld(ld x) {
    if (x <= kSeriesSwitch) return j0_series(x);
    ld P, Q;
    hankel_pq(0, x, P, Q);
    const ld chi = x - 0.25L * kPi;
    return sqrtl(2.0L / (kPi * x)) * (P * cosl(chi) - Q * sinl(chi));
}

ld j1_ld(ld x) {
    if (x <= kSeriesSwitch) return j1_series(x);
    ld P, Q;
    hankel_pq(1, x, P, Q);
    const ld chi = x - 0.75L * kPi;
    return sqrtl(2.0L / (kPi * x)) * (P * cosl(chi) - Q * sinl(chi));
}

ld y0_ld(ld x) {
    if (x > kSeriesSwitch) {
        ld P, Q;
        hankel_pq(0, x, P, Q);
        const ld chi = x - 0.25L * kPi;
        return sqrtl(2.0L / (kPi * x)) * (P * sinl(chi) + Q * cosl(chi));
    }
    // (2/pi)[(ln(x/2)+gamma) J0 + sum_{k>=1} (-1)^{k+1} H_k (x^2/4)^k / (k!)^2]
    const ld x24 = x * x / 4.0L;
    ld term = 1.0L, hk = 0.0L, sum = 0.0L;
    for (int k = 1; k < 80; ++k) {
        term *= x24 / ((ld)k * k);
        hk += 1.0L / k;
        const ld add = ((k & 1) ? 1.0L : -1.0L) * hk * term;
        sum += add;
        if (fabsl(add) < kEps * (fabsl(sum) + 1e-30L) && k > 3) break;
    }
    return (2.0L / kPi) * ((logl(0.5L * x) + kEulerGamma) * j0_series(x) + sum);
}

ld y1_ld(ld x) {
    if (x > kSeriesSwitch) {
        ld P, Q;
        hankel_pq(1, x, P, Q);
        const ld chi = x - 0.75L * kPi;
        return sqrtl(2.0L / (kPi * x)) * (P * sinl(chi) + Q * cosl(chi));
    }
    // (2/pi)(ln(x/2)+gamma) J1 - 2/(pi x)
    //   - (x/2pi) sum_k (-1)^k (H_k + H_{k+1}) (x^2/4)^k / (k!(k+1)!)
    const ld x24 = x * x / 4.0L;
    ld term = 1.0L, hk = 0.0L, hk1 = 1.0L;
    ld sum = hk + hk1;  // k = 0 term
    for (int k = 1; k < 80; ++k) {
        term *= -x24 / ((ld)k * (k + 1));
        hk += 1.0L / k;
        hk1 += 1.0L / (k + 1);
        const ld add = (hk + hk1) * term;
        sum += add;
        if (fabsl(add) < kEps * (fabsl(sum) + 1e-30L) && k > 3) break;
    }
    return (2.0L / kPi) * (logl(0.5L * x) + kEulerGamma) * j1_series(x)
           - 2.0L / (kPi * x) - (x / (2.0L * kPi)) * sum;
}

// J_n by Miller's downward recurrence, normalized with J0 + 2 sum J_{2k} = 1.
ld jn_miller(int n, ld x) {
    const int m = n + 18 + (int)std::sqrt(42.0 * n);
    ld jp = 0.0L;    // J_{j+1}
    ld jc = 1e-30L;  // J_j seed
    ld target = 0.0L, norm = 0.0L;
    for (int j = m; j >= 1; --j) {
        ld jm = (2.0L * j / x) * jc - jp;  // J_{j-1}
        jp = jc;
        jc = jm;
        if (fabsl(jc) > 1e280L) {
            jc *= 1e-280L;
            jp *= 1e-280L;
            target *= 1e-280L;
            norm *= 1e-280L;
        }
        if (j - 1 == n) target = jc;
        if ((j - 1) > 0 && ((j - 1) & 1) == 0) norm += jc;
    }
    norm = 2.0L * norm + jc;  // jc now holds unnormalized J_0
    return target / norm;
}

ld jn_ld(int n, ld x) {
    if (n == 0) return j0_ld(x);
    if (n == 1) return j1_ld(x);
    if (x == 0.0L) return 0.0L;
    if (x > (ld)n) {
        ld jm = j0_ld(x), jc = j1_ld(x);
        for (int k = 1; k < n; ++k) {
            ld jp = (2.0L * k / x) * jc - jm;
            jm = jc;
            jc = jp;
        }
        return jc;
    }
    return jn_miller(n, x);
}

ld yn_ld(int n, ld x) {
    if (n == 0) return y0_ld(x);
    if (n == 1) return y1_ld(x);
    ld ym = y0_ld(x), yc = y1_ld(x);
    for (int k = 1; k < n; ++k) {
        ld yp = (2.0L * k / x) * yc - ym;
        ym = yc;
        yc = yp;
    }
    return yc;
}

ld i0e_series(ld x) {  // e^{-x} I0
    const ld x24 = x * x / 4.0L;
    ld term = 1.0L, sum = 1.0L;
    for (int k = 1; k < 120; ++k) {
        term *= x24 / ((ld)k * k);
        sum += term;
        if (term < kEps * sum) break;
    }
    return sum * expl(-x);
}

ld i1e_series(ld x) {
    const ld x24 = x * x / 4.0L;
    ld term = 1.0L, sum = 1.0L;
    for (int k = 1; k < 120; ++k) {
        term *= x24 / ((ld)k * (k + 1));
        sum += term;
        if (term < kEps * sum) break;
    }
    return 0.5L * x * sum * expl(-x);
}

// e^{-x} I_n(x) ~ 1/sqrt(2 pi x) * sum_k (-1)^k (mu-1)(mu-9).../(k!(8x)^k)
ld ine_asymptotic(int n, ld x) {
    const ld mu = 4.0L * n * n;
    const ld i8x = 1.0L / (8.0L * x);
    ld term = 1.0L, sum = 1.0L;
    ld prev = std::numeric_limits<ld>::max();
    for (int k = 1; k < 60; ++k) {
        const ld f = (2 * k - 1);
        term *= -(mu - f * f) * i8x / k;
        if (fabsl(term) > prev) break;
        prev = fabsl(term);
        sum += term;
        if (fabsl(term) < kEps * fabsl(sum)) break;
    }
    return sum / sqrtl(2.0L * kPi * x);
}

ld i0e_ld(ld x) { return x <= kSeriesSwitch ? i0e_series(x) : ine_asymptotic(0, x); }
ld i1e_ld(ld x) { return x <= kSeriesSwitch ? i1e_series(x) : ine_asymptotic(1, x); }

// Continued fraction for the ratio I_{n+1}(x)/I_n(x)
// (modified Lentz; converges for every x > 0).
ld i_ratio_cf(int n, ld x) {
    const ld tiny = 1e-300L;
    ld f = tiny, C = f, D = 0.0L;
    for (int kk = 1; kk < 100000; ++kk) {
        const ld b = 2.0L * (n + kk) / x;
        D = b + D;
        if (D == 0.0L) D = tiny;
        C = b + 1.0L / C;
        if (C == 0.0L) C = tiny;
        D = 1.0L / D;
        const ld delta = C * D;
        f *= delta;
        if (fabsl(delta - 1.0L) < kEps) break;
    }
    return f;
}

// e^{-x} I_n: continued-fraction ratio at the top order, exact downward
// recurrence to order 0, normalized against I0.
ld ine_ld(int n, ld x) {
    if (n == 0) return i0e_ld(x);
    if (n == 1) return i1e_ld(x);
    if (x == 0.0L) return 0.0L;
    ld ip = i_ratio_cf(n, x);  // I_{n+1}/I_n, seed with I_n = 1
    ld ic = 1.0L;
    ld target = 1.0L;
    for (int j = n; j >= 1; --j) {
        const ld im = (2.0L * j / x) * ic + ip;  // I_{j-1}
        ip = ic;
        ic = im;
        if (fabsl(ic) > 1e280L) {
            ic *= 1e-280L;
            ip *= 1e-280L;
            target *= 1e-280L;
        }
    }
    return i0e_ld(x) * target / ic;  // ic holds unnormalized I_0
}

// Steed/Temme continued fraction for e^{x} K_0(x), x >= 2.
ld k0e_cf(ld x) {
    constexpr ld a1 = 0.25L;  // 1/4 - mu^2 at mu = 0
    ld b = 2.0L * (1.0L + x);
    ld d = 1.0L / b;
    ld h = d, delh = d;
    ld q1 = 0.0L, q2 = 1.0L;
    ld q = a1, cc = a1, aa = -a1;
    ld s = 1.0L + q * delh;
    for (int i = 1; i < 40000; ++i) {
        aa -= 2 * i;
        cc = -aa * cc / (i + 1.0L);
        const ld qnew = (q1 - b * q2) / aa;
        q1 = q2;
        q2 = qnew;
        q += cc * qnew;
        b += 2.0L;
        d = 1.0L / (b + aa * d);
        delh = (b * d - 1.0L) * delh;
        h += delh;
        const ld dels = q * delh;
        s += dels;
        if (fabsl(dels / s) < kEps) break;
    }
    return sqrtl(kPi / (2.0L * x)) / s;
}

ld k0e_ld(ld x) {
    if (x > 2.0L) return k0e_cf(x);
    // K0 = -(ln(x/2)+gamma) I0 + sum_{k>=1} H_k (x^2/4)^k / (k!)^2
    const ld x24 = x * x / 4.0L;
    ld term = 1.0L, hk = 0.0L, sum = 0.0L;
    for (int k = 1; k < 60; ++k) {
        term *= x24 / ((ld)k * k);
        hk += 1.0L / k;
        sum += hk * term;
        if (hk * term < kEps * (sum + 1.0L)) break;
    }
    const ld i0 = i0e_series(x) * expl(x);
    return (-(logl(0.5L * x) + kEulerGamma) * i0 + sum) * expl(x);
}

ld k1e_ld(ld x) {
    if (x > 2.0L) {
        const ld k0e = k0e_cf(x);
        // CF2 byproduct: K_1 = K_0 (x + 1/2 - h)/x with h from the fraction;
        // the Wronskian route below needs no extra state and is as accurate.
        const ld i0e = i0e_ld(x), i1e = i1e_ld(x);
        return (1.0L / x - i1e * k0e) / i0e;  // I0 K1 + I1 K0 = 1/x, scaled
    }
    const ld i0 = i0e_series(x) * expl(x);
    const ld i1 = i1e_series(x) * expl(x);
    const ld k0 = k0e_ld(x) * expl(-x);
    return (1.0L / x - i1 * k0) / i0 * expl(x);
}

ld kne_ld(int n, ld x) {
    if (n == 0) return k0e_ld(x);
    if (n == 1) return k1e_ld(x);
    ld km = k0e_ld(x), kc = k1e_ld(x);
    for (int k = 1; k < n; ++k) {
        ld kp = (2.0L * k / x) * kc + km;
        km = kc;
        kc = kp;
    }
    return kc;
}

int fold_sign_JY(int& n) {
    if (n >= 0) return 1;
    n = -n;
    return (n & 1) ? -1 : 1;
}

}  // namespace

double J(int n, double x) {
    if (x < 0.0) throw std::domain_error("bessel::J requires x >= 0");
    const int sg = fold_sign_JY(n);
    if (x == 0.0) return n == 0 ? 1.0 : 0.0;
    return sg * (double)jn_ld(n, (ld)x);
}

double Y(int n, double x) {
    if (x <= 0.0) throw std::domain_error("bessel::Y requires x > 0");
    const int sg = fold_sign_JY(n);
    return sg * (double)yn_ld(n, (ld)x);
}

double I(int n, double x) {
    if (x < 0.0) throw std::domain_error("bessel::I requires x >= 0");
    if (n < 0) n = -n;
    if (x == 0.0) return n == 0 ? 1.0 : 0.0;
    return (double)(ine_ld(n, (ld)x) * expl((ld)x));
}

double Ie(int n, double x) {
    if (x < 0.0) throw std::domain_error("bessel::Ie requires x >= 0");
    if (n < 0) n = -n;
    if (x == 0.0) return n == 0 ? 1.0 : 0.0;
    return (double)ine_ld(n, (ld)x);
}

double K(int n, double x) {
    if (x <= 0.0) throw std::domain_error("bessel::K requires x > 0");
    if (n < 0) n = -n;
    return (double)(kne_ld(n, (ld)x) * expl(-(ld)x));
}

double Ke(int n, double x) {
    if (x <= 0.0) throw std::domain_error("bessel::Ke requires x > 0");
    if (n < 0) n = -n;
    return (double)kne_ld(n, (ld)x);
}

double dJ(int n, double x) {
    if (n == 0) return -J(1, x);
    return 0.5 * (J(n - 1, x) - J(n + 1, x));
}

double dY(int n, double x) {
    if (n == 0) return -Y(1, x);
    return 0.5 * (Y(n - 1, x) - Y(n + 1, x));
}

double dI(int n, double x) {
    if (n == 0) return I(1, x);
    return 0.5 * (I(n - 1, x) + I(n + 1, x));
}

double dK(int n, double x) {
    if (n == 0) return -K(1, x);
    return -0.5 * (K(n - 1, x) + K(n + 1, x));
}

double log_abs_Y_small_arg(int n, double x) {
    if (n == 0) return std::log(std::abs(std::log(x / 2.0)) + 1.0);
    n = std::abs(n);
    return std::lgamma((double)n) + n * std::log(2.0 / x) - std::log((double)kPi);
}

}  // namespace nanofiber::bessel
