// quadrature.hpp - Gauss-Legendre rules and adaptive panel integration.
#pragma once

#include <functional>
#include <vector>

namespace nanofiber::quad {

// Nodes/weights on [-1, 1].
struct GaussRule {
    std::vector<double> x;
    std::vector<double> w;
};

// Rule of given order; computed once and cached.
const GaussRule& gauss_legendre(int n);

// Single fixed panel of `rule` mapped to [a, b].
double gauss_panel(const std::function<double(double)>& f, double a, double b,
                   const GaussRule& rule);

// Adaptive bisection with 16-point panels. Relative tolerance against the
// running magnitude of the integral. Throws QuadratureNotConverged when the
// depth limit is reached before the tolerance holds.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol, int max_depth = 42);

// Integral over [a, inf) of a decaying integrand: consecutive blocks of
// width `block` are added until two successive blocks each contribute less
// than tail_tol of the running total.
double integrate_decaying(const std::function<double(double)>& f, double a,
                          double block, double rel_tol,
                          double tail_tol = 1e-10);

}  // namespace nanofiber::quad
