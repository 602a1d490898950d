#pragma once

#include <complex>

namespace norlund {

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

// psi(x) for x > 0, by recurrence to x >= 8 then the Bernoulli asymptotic
// series. Throws std::domain_error for x <= 0.
double digamma(double x);

// k-th derivative of psi for 0 <= k <= 12, x > 0: recurrence to x >= 8 + 2k
// then the asymptotic series through the B_16 term.
double polygamma(int k, double x);

// Hurwitz zeta(s, w) for integer s >= 2 and complex Re(w) > 0, by
// Euler-Maclaurin: shift w until |w| >= max(10, 2s), correction terms
// through B_12.
std::complex<double> hurwitz_zeta(int s, std::complex<double> w);

// ell-parameter Barnes zeta with unit parameters, via the exact reduction to
// single-parameter zetas with choi_p coefficient polynomials:
//   sum_{j=0}^{ell-1} p_{ell,j}(w) zeta(s - j, w).
// Requires integer s > ell and Re(w) > 0.
std::complex<double> barnes_zeta(int ell, int s, std::complex<double> w);

// order-fold product-rule expansion of d^order/dx^order [binom(x-1, order) psi(x - psi_shift)]:
//   sum_{k=0}^{order} C(order,k) P^{(k)}(x) psi^{(order-k)}(x - psi_shift),
// with P = binom_poly(-1, order) handled exactly. Requires x - psi_shift > 0.
double leibniz_derivative(int order, double x, double psi_shift);

// -H_{ell-1} + leibniz_derivative(ell-1, x, floor(ell/2)); the closed-form
// side of the log-moment evaluations. Requires ell >= 1 and x > floor(ell/2).
double leibniz_rhs(int ell, double x);

// Generating-function value sum_{n>=1} modified_norlund(n, ell) z^n in closed
// form: -log(z)/2 - leibniz_rhs(ell, z + 1/z + ell - 2)/2, for 0 < z < 1.
double genfun_modified_norlund(int ell, double z);

}  // namespace norlund
