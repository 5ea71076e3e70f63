// quadrature.cpp
#include "nanofiber/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "nanofiber/constants.hpp"
#include "nanofiber/errors.hpp"

namespace nanofiber::quad {

namespace {

GaussRule make_rule(int n) {
    GaussRule r;
    r.x.resize(n);
    r.w.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Newton iteration from the Chebyshev estimate of the i-th root of P_n.
        double z = std::cos(pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 128; ++it) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) < 1e-15) break;
        }
        r.x[i] = -z;
        r.x[n - 1 - i] = z;
        r.w[i] = r.w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
    }
    return r;
}

double adapt(const std::function<double(double)>& f, double a, double b,
             double whole, double rel_tol, double scale, int depth,
             const GaussRule& rule) {
    const double m = 0.5 * (a + b);
    const double left = gauss_panel(f, a, m, rule);
    const double right = gauss_panel(f, m, b, rule);
    const double err = std::abs(left + right - whole);
    const double ref = std::max(scale, std::abs(left + right));
    if (err <= rel_tol * ref || err < 1e-300) return left + right;
    if (depth <= 0)
        throw QuadratureNotConverged("adaptive quadrature: depth limit hit");
    return adapt(f, a, m, left, rel_tol, scale, depth - 1, rule) +
           adapt(f, m, b, right, rel_tol, scale, depth - 1, rule);
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
    static std::map<int, GaussRule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, make_rule(n)).first;
    return it->second;
}

double gauss_panel(const std::function<double(double)>& f, double a, double b,
                   const GaussRule& rule) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.x.size(); ++i)
        sum += rule.w[i] * f(mid + half * rule.x[i]);
    return sum * half;
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol, int max_depth) {
    const GaussRule& rule = gauss_legendre(16);
    const double whole = gauss_panel(f, a, b, rule);
    return adapt(f, a, b, whole, rel_tol, std::abs(whole), max_depth, rule);
}

double integrate_decaying(const std::function<double(double)>& f, double a,
                          double block, double rel_tol, double tail_tol) {
    double total = 0.0;
    int quiet = 0;
    for (int j = 0; j < 800; ++j) {
        const double lo = a + j * block;
        const double part = integrate(f, lo, lo + block, rel_tol);
        total += part;
        if (std::abs(part) <= tail_tol * std::abs(total)) {
            if (++quiet >= 2) return total;
        } else {
            quiet = 0;
        }
    }
    throw QuadratureNotConverged("integrate_decaying: tail did not settle");
}

}  // namespace nanofiber::quad
