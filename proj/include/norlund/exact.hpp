#pragma once

#include "norlund/pi_scalar.hpp"
#include "norlund/poly.hpp"
#include "norlund/rational.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace norlund {

// Bernoulli numbers B_0..B_n_max (B_1 = -1/2), from the defining recurrence
// sum_{k=0}^{n} C(n+1,k) B_k = 0.
std::vector<Rational> bernoulli_numbers(int n_max);
// Cached single value.
Rational bernoulli_number(int n);

// Bernoulli polynomial B_n(x) = sum_k C(n,k) B_k x^{n-k}.
Poly<Rational> bernoulli_poly(int n);

// Order-n generalized Bernoulli number as a polynomial in the order parameter
// alpha: the coefficient of z^n/n! in (z/(e^z-1))^alpha. Degree n in alpha.
Poly<Rational> norlund_poly(int n);
Rational norlund_value(int n, const Rational& alpha);

// The shifted binomial-weighted transform of the generalized Bernoulli
// numbers: for n >= 1, sum_{r=0}^{n} C(n+r, 2r) B_r(alpha) / (n+r), where
// B_r(alpha) = norlund_poly(r)(alpha). Returned exactly.
Rational modified_norlund(int n, const Rational& alpha);
Poly<Rational> modified_norlund_poly(int n);

// H_n = sum_{k=1}^{n} 1/k, H_0 = 0.
Rational harmonic(int n);

// Signed Stirling numbers of the first kind s(n,k):
// s(n+1,k) = s(n,k-1) - n*s(n,k), s(0,0)=1. Out-of-range (n,k) yields 0.
Int stirling_first(int n, int k);

// binom(x+p, ell) = (x+p)(x+p-1)...(x+p-ell+1)/ell! as a polynomial in x.
Poly<Rational> binom_poly(int p, int ell);

enum class ChebKind { first, second };
// Chebyshev polynomial of the given kind and degree via the three-term
// recurrence.
Poly<Rational> chebyshev(ChebKind kind, int n);

// order-fold forward difference with unit step:
// sum_j (-1)^{order-j} C(order,j) f(x+j). Exact on polynomials.
Poly<Rational> forward_difference(const Poly<Rational>& f, int order);
double forward_difference(const std::function<double(double)>& f, int order, double x);

// Even-index factor polynomials over Q[pi]:
//   q_{2m}(x)   = prod over odd j in [1, 2m-1] of (x^2 + pi^2 j^2 / 4)
//   q_{2m+1}(x) = x * prod_{j=1}^{m} (x^2 + pi^2 j^2)
// so q_1 = x, q_2 = x^2 + pi^2/4, q_3 = x(x^2 + pi^2).
Poly<PiScalar> airault_q(int k);

// Coefficient polynomials (in w) expressing an ell-fold zeta combination
// through single-parameter ones:
//   p_{ell,j}(w) = ((-1)^{ell+1-j} / (ell-1)!) *
//                  sum_{m=j}^{ell-1} C(m,j) s(ell, m+1) w^{m-j}.
Poly<Rational> choi_p(int ell, int j);

// Kernel factor polynomials in u:
//   first:  prod_{j=1}^{ell-1} (u^2 + j^2)
//   second: prod_{j=1}^{ell}   (u^2 + (j - 1/2)^2)
std::pair<Poly<Rational>, Poly<Rational>> p_polys(int ell);

// Canonical rendering, highest degree first, e.g. "1/4*alpha^2 - 1/12*alpha".
std::string poly_to_string(const Poly<Rational>& p, const std::string& var);

}  // namespace norlund
