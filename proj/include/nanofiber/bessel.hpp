// bessel.hpp - cylinder Bessel functions of integer order.
//
// J, Y, I, K and first derivatives for integer orders (negative orders via
// the usual parity relations), real arguments up to ~1e3, relative accuracy
// better than 1e-12 away from zeros of the oscillatory functions.
// Ie/Ke are the exponentially scaled variants e^{-x}I_n(x), e^{x}K_n(x).
#pragma once

namespace nanofiber::bessel {

double J(int n, double x);   // x >= 0
double Y(int n, double x);   // x > 0
double I(int n, double x);   // x >= 0
double K(int n, double x);   // x > 0

double Ie(int n, double x);  // e^{-x} I_n(x)
double Ke(int n, double x);  // e^{+x} K_n(x)

double dJ(int n, double x);  // J_n'(x)
double dY(int n, double x);
double dI(int n, double x);
double dK(int n, double x);

// ln|Y_n(x)| estimate from the leading small-argument term; used to detect
// magnitudes that would overflow downstream linear algebra.
double log_abs_Y_small_arg(int n, double x);

}  // namespace nanofiber::bessel
