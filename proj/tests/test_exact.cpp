#include "doctest.h"

#include "norlund/exact.hpp"

#include <cmath>
#include <vector>

using namespace norlund;

namespace {

Rational rat(long long p, long long q = 1) {
  if (q < 0) {
    p = -p;
    q = -q;
  }
  return Rational(Int(p), Int(q));
}

Poly<Rational> poly(std::vector<Rational> c) { return Poly<Rational>(std::move(c)); }

// Independent oracle: m-fold self-convolution of the Bernoulli sequence,
// B_n at order m obeys B_n^{(m)} = sum_k C(n,k) B_k^{(m-1)} B_{n-k}.
std::vector<Rational> order_m_bernoulli_by_convolution(int m, int n_max) {
  std::vector<Rational> cur(n_max + 1, Rational(0));
  cur[0] = 1;  // order 0
  auto base = bernoulli_numbers(n_max);
  for (int step = 0; step < m; ++step) {
    std::vector<Rational> next(n_max + 1, Rational(0));
    for (int n = 0; n <= n_max; ++n)
      for (int k = 0; k <= n; ++k)
        next[n] += Rational(binomial(n, k)) * cur[k] * base[n - k];
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

TEST_CASE("rational strings") {
  CHECK(to_string(rat(-3, 4)) == "-3/4");
  CHECK(to_string(rat(5)) == "5");
  CHECK(to_string(rat(2, -4)) == "-1/2");
  CHECK(rational_from_string("-7/3") == rat(-7, 3));
  CHECK(rational_from_string("42") == rat(42));
  CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("x"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("1.5"), std::invalid_argument);
}

TEST_CASE("binomial and factorial") {
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(3, 10) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(factorial(0) == 1);
  CHECK(factorial(12) == 479001600);
}

TEST_CASE("bernoulli numbers") {
  auto b = bernoulli_numbers(30);
  CHECK(b[0] == rat(1));
  CHECK(b[1] == rat(-1, 2));
  CHECK(b[2] == rat(1, 6));
  CHECK(b[3] == rat(0));
  CHECK(b[4] == rat(-1, 30));
  CHECK(b[12] == rat(-691, 2730));
  CHECK(b[30] == rat(8615841276005LL, 14322));
  for (int k = 1; k <= 14; ++k) CHECK(b[2 * k + 1] == 0);
  CHECK(bernoulli_number(16) == rat(-3617, 510));
}

TEST_CASE("bernoulli polynomials") {
  CHECK(bernoulli_poly(0) == poly({rat(1)}));
  CHECK(bernoulli_poly(1) == poly({rat(-1, 2), rat(1)}));
  CHECK(bernoulli_poly(2) == poly({rat(1, 6), rat(-1), rat(1)}));
  CHECK(bernoulli_poly(3) == poly({rat(0), rat(1, 2), rat(-3, 2), rat(1)}));
}

TEST_CASE("umbral inversion: unit-interval average of B_n(x+u) is x^n") {
  for (int n = 0; n <= 20; ++n) {
    auto a = bernoulli_poly(n).antiderivative();
    auto avg = a.shifted(rat(1)) - a;  // integral over u in [0,1]
    CHECK(avg == Poly<Rational>::monomial(rat(1), n));
  }
}

TEST_CASE("order polynomials: closed forms for small n") {
  CHECK(norlund_poly(0) == poly({rat(1)}));
  CHECK(norlund_poly(1) == poly({rat(0), rat(-1, 2)}));
  // (3 alpha^2 - alpha)/12
  CHECK(norlund_poly(2) == poly({rat(0), rat(-1, 12), rat(1, 4)}));
  // -alpha^2 (alpha - 1)/8
  CHECK(norlund_poly(3) == poly({rat(0), rat(0), rat(1, 8), rat(-1, 8)}));
  // alpha(15 alpha^3 - 30 alpha^2 + 5 alpha + 2)/240
  CHECK(norlund_poly(4) == poly({rat(0), rat(1, 120), rat(1, 48), rat(-1, 8), rat(1, 16)}));
}

TEST_CASE("order polynomials: alpha = 1 recovers the Bernoulli numbers") {
  auto b = bernoulli_numbers(30);
  for (int n = 0; n <= 30; ++n) CHECK(norlund_value(n, rat(1)) == b[n]);
}

TEST_CASE("order polynomials: leading coefficient is (-1/2)^n") {
  Rational lead(1);
  for (int n = 0; n <= 16; ++n) {
    auto p = norlund_poly(n);
    CHECK(p.degree() == n);
    CHECK(p.coeff(n) == lead);
    lead *= rat(-1, 2);
  }
}

TEST_CASE("order polynomials: integer orders match the convolution oracle") {
  for (int m = 2; m <= 3; ++m) {
    auto oracle = order_m_bernoulli_by_convolution(m, 12);
    for (int n = 0; n <= 12; ++n) CHECK(norlund_value(n, rat(m)) == oracle[n]);
  }
}

TEST_CASE("modified transform: spot values") {
  CHECK(modified_norlund(1, rat(1)) == rat(3, 4));
  CHECK(modified_norlund(1, rat(2)) == rat(1, 2));
  CHECK(modified_norlund(1, rat(0)) == rat(1));
  CHECK_THROWS_AS(modified_norlund(0, rat(1)), std::domain_error);
  // polynomial form agrees with pointwise evaluation
  for (int n = 1; n <= 6; ++n) {
    auto p = modified_norlund_poly(n);
    for (int a = 0; a <= 4; ++a) CHECK(p(rat(a)) == modified_norlund(n, rat(a)));
  }
}

TEST_CASE("modified transform: frozen tables for small integer orders") {
  const std::vector<Rational> ell1 = {rat(3, 4),      rat(1, 24),  rat(-1, 4),
                                      rat(-27, 80),   rat(-1, 4),  rat(-29, 1260),
                                      rat(1, 4),      rat(451, 1120), rat(1, 4),
                                      rat(-65, 264)};
  const std::vector<Rational> ell2 = {rat(1, 2),      rat(-7, 24),  rat(-5, 12),
                                      rat(-37, 240),  rat(7, 30),   rat(251, 630),
                                      rat(2, 21),     rat(-1711, 3360), rat(-41, 60),
                                      rat(439, 1320)};
  const std::vector<Rational> ell3 = {rat(1, 4),      rat(-1, 2),   rat(-7, 24),
                                      rat(19, 80),    rat(2, 5),    rat(-61, 630),
                                      rat(-55, 84),   rat(-547, 3360), rat(157, 120),
                                      rat(139, 132)};
  for (int n = 1; n <= 10; ++n) {
    CHECK(modified_norlund(n, rat(1)) == ell1[n - 1]);
    CHECK(modified_norlund(n, rat(2)) == ell2[n - 1]);
    CHECK(modified_norlund(n, rat(3)) == ell3[n - 1]);
  }
}

TEST_CASE("harmonic numbers") {
  CHECK(harmonic(0) == rat(0));
  CHECK(harmonic(1) == rat(1));
  CHECK(harmonic(5) == rat(137, 60));
}

TEST_CASE("stirling numbers of the first kind") {
  CHECK(stirling_first(0, 0) == 1);
  CHECK(stirling_first(3, 2) == -3);
  CHECK(stirling_first(3, 3) == 1);
  CHECK(stirling_first(4, 1) == -6);
  CHECK(stirling_first(2, 5) == 0);
  CHECK(stirling_first(-1, 0) == 0);
  CHECK(stirling_first(5, 0) == 0);
}

TEST_CASE("stirling numbers: falling factorial oracle") {
  // x(x-1)...(x-n+1) = sum_k s(n,k) x^k
  for (int n = 1; n <= 8; ++n) {
    Poly<Rational> ff = Poly<Rational>::constant(rat(1));
    for (int i = 0; i < n; ++i) ff = ff * poly({rat(-i), rat(1)});
    for (int k = 0; k <= n; ++k) CHECK(ff.coeff(k) == Rational(stirling_first(n, k)));
  }
}

TEST_CASE("binomial polynomials and the Pascal identity") {
  CHECK(binom_poly(0, 0) == poly({rat(1)}));
  CHECK(binom_poly(1, 2) == poly({rat(0), rat(1, 2), rat(1, 2)}));
  for (int ell = 0; ell <= 8; ++ell)
    CHECK(binom_poly(1, ell + 1) == binom_poly(0, ell + 1) + binom_poly(0, ell));
}

TEST_CASE("chebyshev polynomials: coefficients") {
  CHECK(chebyshev(ChebKind::first, 0) == poly({rat(1)}));
  CHECK(chebyshev(ChebKind::first, 1) == poly({rat(0), rat(1)}));
  CHECK(chebyshev(ChebKind::first, 4) == poly({rat(1), rat(0), rat(-8), rat(0), rat(8)}));
  CHECK(chebyshev(ChebKind::second, 3) == poly({rat(0), rat(-4), rat(0), rat(8)}));
}

TEST_CASE("chebyshev polynomials: trig and surd closed forms") {
  auto dval = [](const Poly<Rational>& p, double x) {
    return p.eval_as<double>(x, [](const Rational& r) { return to_double(r); });
  };
  for (int n = 0; n <= 10; ++n) {
    auto tn = chebyshev(ChebKind::first, n);
    auto un = chebyshev(ChebKind::second, n);
    for (double theta : {0.3, 1.1, 2.4}) {
      double c = std::cos(theta);
      CHECK(std::abs(dval(tn, c) - std::cos(n * theta)) < 1e-12);
      CHECK(std::abs(dval(un, c) - std::sin((n + 1) * theta) / std::sin(theta)) < 1e-12);
    }
    // surd form at x > 1; note the second-kind exponent is n+1
    double x = 1.7, s = std::sqrt(x * x - 1.0);
    double tp = (std::pow(x + s, n) + std::pow(x - s, n)) / 2.0;
    double up = (std::pow(x + s, n + 1) - std::pow(x - s, n + 1)) / (2.0 * s);
    CHECK(std::abs(dval(tn, x) - tp) < 1e-9 * std::abs(tp));
    CHECK(std::abs(dval(un, x) - up) < 1e-9 * std::abs(up));
  }
}

TEST_CASE("forward differences") {
  // degree drops by exactly one per application
  Poly<Rational> f = poly({rat(1), rat(0), rat(3), rat(0), rat(0), rat(2)});
  auto d1 = forward_difference(f, 1);
  CHECK(d1.degree() == 4);
  CHECK(forward_difference(f, 3).degree() == 2);
  // order-n difference of x^n is n!
  CHECK(forward_difference(Poly<Rational>::monomial(rat(1), 3), 3) == poly({rat(6)}));
  // callable form agrees with the polynomial form
  auto g = [](double x) { return x * x * x - 2.0 * x; };
  Poly<Rational> gp = poly({rat(0), rat(-2), rat(0), rat(1)});
  for (double x : {0.0, 1.5, -2.25}) {
    auto d2 = forward_difference(gp, 2);
    double want = d2.eval_as<double>(x, [](const Rational& r) { return to_double(r); });
    CHECK(std::abs(forward_difference(g, 2, x) - want) < 1e-10);
  }
}

TEST_CASE("even/odd factor polynomials over Q[pi]") {
  auto q1 = airault_q(1);
  CHECK(q1 == Poly<PiScalar>::identity());
  auto q2 = airault_q(2);
  CHECK(q2.degree() == 2);
  CHECK(q2.coeff(0) == PiScalar::pi_power(2, rat(1, 4)));
  CHECK(q2.coeff(1) == PiScalar(0));
  CHECK(q2.coeff(2) == PiScalar(1));
  auto q3 = airault_q(3);
  CHECK(q3.degree() == 3);
  CHECK(q3.coeff(1) == PiScalar::pi_power(2, rat(1)));
  CHECK(q3.coeff(3) == PiScalar(1));
  auto q4 = airault_q(4);  // (x^2 + pi^2/4)(x^2 + 9 pi^2/4)
  CHECK(q4.coeff(0) == PiScalar::pi_power(4, rat(9, 16)));
  CHECK(q4.coeff(2) == PiScalar::pi_power(2, rat(10, 4)));
  CHECK(q4.coeff(4) == PiScalar(1));
}

TEST_CASE("zeta combination coefficient polynomials") {
  CHECK(choi_p(1, 0) == poly({rat(1)}));
  CHECK(choi_p(2, 1) == poly({rat(1)}));
  CHECK(choi_p(2, 0) == poly({rat(1), rat(-1)}));  // 1 - w
  CHECK(choi_p(3, 0) == poly({rat(1), rat(-3, 2), rat(1, 2)}));
  CHECK_THROWS_AS(choi_p(2, 2), std::domain_error);
  CHECK_THROWS_AS(choi_p(0, 0), std::domain_error);
}

TEST_CASE("kernel factor polynomials") {
  auto [p1a, p2a] = p_polys(1);
  CHECK(p1a == poly({rat(1)}));
  CHECK(p2a == poly({rat(1, 4), rat(0), rat(1)}));
  auto [p1b, p2b] = p_polys(2);
  CHECK(p1b == poly({rat(1), rat(0), rat(1)}));
  CHECK(p2b == poly({rat(1, 4), rat(0), rat(1)}) * poly({rat(9, 4), rat(0), rat(1)}));
}

TEST_CASE("polynomial rendering") {
  CHECK(poly_to_string(norlund_poly(2), "alpha") == "1/4*alpha^2 - 1/12*alpha");
  CHECK(poly_to_string(norlund_poly(1), "alpha") == "-1/2*alpha");
  CHECK(poly_to_string(poly({rat(1)}), "x") == "1");
  CHECK(poly_to_string(Poly<Rational>(), "x") == "0");
  CHECK(poly_to_string(poly({rat(-1, 6), rat(1), rat(1)}), "x") == "x^2 + x - 1/6");
}
