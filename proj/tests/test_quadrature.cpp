// test_quadrature.cpp
#include "doctest.h"

#include <cmath>

#include "nanofiber/constants.hpp"
#include "nanofiber/errors.hpp"
#include "nanofiber/quadrature.hpp"

using namespace nanofiber;

TEST_CASE("gauss-legendre rule integrates polynomials exactly") {
    const auto& r16 = quad::gauss_legendre(16);
    double wsum = 0.0;
    for (double w : r16.w) wsum += w;
    CHECK(std::abs(wsum - 2.0) < 1e-14);
    // degree-31 monomial is exact for a 16-point rule
    auto f = [](double x) { return std::pow(x, 30); };
    CHECK(std::abs(quad::gauss_panel(f, -1.0, 1.0, r16) - 2.0 / 31.0) < 5e-15);
}

TEST_CASE("adaptive integration of known integrals") {
    auto g = [](double x) { return std::exp(-x * x); };
    const double got = quad::integrate(g, -8.0, 8.0, 1e-12);
    CHECK(std::abs(got - std::sqrt(pi)) < 1e-12 * std::sqrt(pi));

    auto osc = [](double x) { return std::sin(40.0 * x); };
    const double want = (1.0 - std::cos(40.0 * 2.5)) / 40.0;
    CHECK(std::abs(quad::integrate(osc, 0.0, 2.5, 1e-12) - want) < 1e-12);

    // sqrt endpoint behavior, the radiation-integral profile
    auto sq = [](double x) { return std::sqrt(1.0 - x); };
    CHECK(std::abs(quad::integrate(sq, 0.0, 1.0, 1e-11) - 2.0 / 3.0) < 1e-10);
}

TEST_CASE("decaying tail integration") {
    auto e = [](double x) { return std::exp(-0.7 * x); };
    const double got = quad::integrate_decaying(e, 2.0, 3.0, 1e-12, 1e-13);
    const double want = std::exp(-1.4) / 0.7;
    CHECK(std::abs(got - want) < 1e-11 * want);
}

TEST_CASE("depth limit raises QuadratureNotConverged") {
    auto nasty = [](double x) { return std::abs(x) < 1e-12 ? 1e12 : 1.0 / std::sqrt(std::abs(x)); };
    CHECK_THROWS_AS(
        (void)quad::integrate(nasty, -1.0, 1.0, 1e-14, 6),
        QuadratureNotConverged);
}
