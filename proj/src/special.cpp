#include "norlund/special.hpp"

#include "norlund/exact.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace norlund {

namespace {

double dfactorial(int n) { return to_double(Rational(factorial(n))); }

// z^n for integer n by binary exponentiation.
std::complex<double> cpow_int(std::complex<double> z, int n) {
  bool inv = n < 0;
  unsigned e = inv ? static_cast<unsigned>(-(long long)n) : static_cast<unsigned>(n);
  std::complex<double> acc(1.0, 0.0), base = z;
  while (e != 0) {
    if (e & 1u) acc *= base;
    base *= base;
    e >>= 1;
  }
  return inv ? 1.0 / acc : acc;
}

// B_2, B_4, ..., B_16
constexpr double kEvenBernoulli[8] = {
    1.0 / 6.0,  -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0,
    5.0 / 66.0, -691.0 / 2730.0, 7.0 / 6.0, -3617.0 / 510.0};

}  // namespace

double digamma(double x) {
  if (!(x > 0.0))
    throw std::domain_error("digamma: requires x > 0, got " + std::to_string(x));
  double acc = 0.0;
  while (x < 8.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  // psi(x) ~ log x - 1/(2x) - sum_j B_{2j} / (2j x^{2j})
  const double inv = 1.0 / x, inv2 = inv * inv;
  double p = inv2, tail = 0.0;
  for (int j = 1; j <= 8; ++j) {
    tail += kEvenBernoulli[j - 1] / (2.0 * j) * p;
    p *= inv2;
  }
  return acc + std::log(x) - 0.5 * inv - tail;
}

double polygamma(int k, double x) {
  if (k < 0 || k > 12)
    throw std::domain_error("polygamma: order must be in [0, 12], got " + std::to_string(k));
  if (!(x > 0.0))
    throw std::domain_error("polygamma: requires x > 0, got " + std::to_string(x));
  if (k == 0) return digamma(x);
  // sign of the leading asymptotic behaviour
  const double sign = (k % 2 == 0) ? -1.0 : 1.0;
  const double kfact = dfactorial(k);
  const double thresh = 8.0 + 2.0 * k;
  double acc = 0.0;
  while (x < thresh) {
    acc += sign * kfact * std::pow(x, -(k + 1));
    x += 1.0;
  }
  // psi^{(k)}(x) ~ (-1)^{k-1} [ (k-1)!/x^k + k!/(2 x^{k+1})
  //                             + sum_j B_{2j} (2j+k-1)!/((2j)! x^{2j+k}) ]
  const double inv = 1.0 / x;
  double p = 1.0;
  for (int i = 0; i < k; ++i) p *= inv;     // inv^k
  double series = dfactorial(k - 1) * p;
  p *= inv;                                  // inv^{k+1}
  series += kfact * 0.5 * p;
  p *= inv;                                  // inv^{k+2}
  for (int j = 1; j <= 8; ++j) {
    double r = 1.0;  // (2j+k-1)!/(2j)!
    for (int i = 2 * j + 1; i <= 2 * j + k - 1; ++i) r *= i;
    series += kEvenBernoulli[j - 1] * r * p;
    p *= inv * inv;
  }
  return acc + sign * series;
}

std::complex<double> hurwitz_zeta(int s, std::complex<double> w) {
  if (s < 2) throw std::domain_error("hurwitz_zeta: requires integer s >= 2");
  if (!(w.real() > 0.0))
    throw std::domain_error("hurwitz_zeta: requires Re(w) > 0, got " + std::to_string(w.real()));
  const double target = std::max(10.0, 2.0 * s);
  std::complex<double> sum(0.0, 0.0);
  while (std::abs(w) < target) {
    sum += cpow_int(w, -s);
    w += 1.0;
  }
  // Euler-Maclaurin tail from T = w:
  //   T^{1-s}/(s-1) + T^{-s}/2 + sum_{j=1}^{6} B_{2j}/(2j)! (s)_{2j-1} T^{-s-2j+1}
  sum += cpow_int(w, 1 - s) / static_cast<double>(s - 1);
  sum += 0.5 * cpow_int(w, -s);
  for (int j = 1; j <= 6; ++j) {
    double c = kEvenBernoulli[j - 1] / dfactorial(2 * j);
    double poch = 1.0;  // (s)_{2j-1}
    for (int i = 0; i < 2 * j - 1; ++i) poch *= s + i;
    sum += c * poch * cpow_int(w, -s - 2 * j + 1);
  }
  return sum;
}

std::complex<double> barnes_zeta(int ell, int s, std::complex<double> w) {
  if (ell < 1) throw std::domain_error("barnes_zeta: requires ell >= 1");
  if (s <= ell) throw std::domain_error("barnes_zeta: requires integer s > ell");
  if (!(w.real() > 0.0)) throw std::domain_error("barnes_zeta: requires Re(w) > 0");
  std::complex<double> sum(0.0, 0.0);
  for (int j = 0; j <= ell - 1; ++j) {
    auto pj = choi_p(ell, j);
    std::complex<double> coef =
        pj.eval_as<std::complex<double>>(w, [](const Rational& r) {
          return std::complex<double>(to_double(r), 0.0);
        });
    sum += coef * hurwitz_zeta(s - j, w);
  }
  return sum;
}

double leibniz_derivative(int order, double x, double psi_shift) {
  if (order < 0) throw std::domain_error("leibniz_derivative: order must be >= 0");
  const double y = x - psi_shift;
  if (!(y > 0.0))
    throw std::domain_error("leibniz_derivative: requires x - psi_shift > 0, got " +
                            std::to_string(y));
  Poly<Rational> p = binom_poly(-1, order);
  double sum = 0.0;
  for (int k = 0; k <= order; ++k) {
    double pk = p.eval_as<double>(x, [](const Rational& r) { return to_double(r); });
    sum += to_double(Rational(binomial(order, k))) * pk * polygamma(order - k, y);
    p = p.derivative();
  }
  return sum;
}

double leibniz_rhs(int ell, double x) {
  if (ell < 1) throw std::domain_error("leibniz_rhs: requires ell >= 1");
  const int shift = ell / 2;
  if (!(x > shift))
    throw std::domain_error("leibniz_rhs: requires x > floor(ell/2), got x = " +
                            std::to_string(x));
  return -to_double(harmonic(ell - 1)) + leibniz_derivative(ell - 1, x, shift);
}

double genfun_modified_norlund(int ell, double z) {
  if (ell < 1) throw std::domain_error("genfun_modified_norlund: requires ell >= 1");
  if (!(z > 0.0) || !(z < 1.0))
    throw std::domain_error("genfun_modified_norlund: requires 0 < z < 1, got " +
                            std::to_string(z));
  return -0.5 * std::log(z) - 0.5 * leibniz_rhs(ell, z + 1.0 / z + ell - 2);
}

}  // namespace norlund
