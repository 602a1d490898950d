#include "doctest.h"

#include "norlund/hyper.hpp"
#include "norlund/quadrature.hpp"
#include "norlund/special.hpp"

#include <cmath>
#include <stdexcept>

using namespace norlund;

TEST_CASE("finite: smooth integrands") {
  auto r = integrate_finite([](double x) { return x * x * x; }, 0.0, 1.0);
  CHECK(r.converged);
  CHECK(std::abs(r.value - 0.25) < 1e-13);
  CHECK(r.error_estimate >= 0.0);

  r = integrate_finite([](double x) { return std::sin(x); }, 0.0, kPi);
  CHECK(r.converged);
  CHECK(std::abs(r.value - 2.0) < 1e-12);

  // orientation and the empty interval
  r = integrate_finite([](double x) { return x; }, 1.0, 0.0);
  CHECK(std::abs(r.value + 0.5) < 1e-13);
  r = integrate_finite([](double x) { return x; }, 2.0, 2.0);
  CHECK(r.converged);
  CHECK(r.value == 0.0);
}

TEST_CASE("finite: integrable endpoint singularities") {
  auto r = integrate_finite([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0);
  CHECK(r.converged);
  CHECK(std::abs(r.value - 2.0) < 1e-11);

  r = integrate_finite([](double x) { return std::log(x); }, 0.0, 1.0);
  CHECK(r.converged);
  CHECK(std::abs(r.value + 1.0) < 1e-11);
}

TEST_CASE("finite: non-finite integrand values are reported with the abscissa") {
  auto bad = [](double x) { return x > 0.3 ? std::numeric_limits<double>::quiet_NaN() : 1.0; };
  CHECK_THROWS_WITH_AS(integrate_finite(bad, 0.0, 1.0, {}),
                       doctest::Contains("non-finite"), std::runtime_error);
}

TEST_CASE("config validation") {
  QuadConfig cfg;
  cfg.rel_tol = 0.0;
  CHECK_THROWS_AS(integrate_finite([](double) { return 1.0; }, 0, 1, cfg),
                  std::invalid_argument);
  cfg = {};
  cfg.max_levels = 17;
  CHECK_THROWS_AS(integrate_semi_infinite([](double) { return 0.0; }, cfg),
                  std::invalid_argument);
  cfg = {};
  cfg.tail_mode = TailMode::algebraic;
  cfg.tail_power = 1.0;
  CHECK_THROWS_AS(integrate_semi_infinite([](double) { return 0.0; }, cfg),
                  std::invalid_argument);
}

TEST_CASE("semi-infinite: exponential tails") {
  auto r = integrate_semi_infinite([](double u) { return std::exp(-u); });
  CHECK(r.converged);
  CHECK(std::abs(r.value - 1.0) < 1e-12);

  r = integrate_semi_infinite([](double u) { return u * u * std::exp(-u); });
  CHECK(std::abs(r.value - 2.0) < 1e-11);

  r = integrate_semi_infinite([](double u) { return std::exp(-u * u); });
  CHECK(std::abs(r.value - std::sqrt(kPi) / 2.0) < 1e-12);
}

TEST_CASE("semi-infinite: algebraic tails") {
  // exact-model tail: flat head, then (3 log u + 2) / u^3
  auto f = [](double u) { return u <= 1.0 ? 2.0 : (3.0 * std::log(u) + 2.0) / (u * u * u); };
  QuadConfig cfg;
  cfg.tail_mode = TailMode::algebraic;
  cfg.tail_power = 3.0;
  auto r = integrate_semi_infinite(f, cfg);
  CHECK(r.converged);
  CHECK(std::abs(r.value - 3.75) < 1e-10);
  CHECK(r.error_estimate < 1e-8);

  // model only asymptotically exact; the mismatch term must cover the bias
  QuadConfig cfg2;
  cfg2.tail_mode = TailMode::algebraic;
  cfg2.tail_power = 2.0;
  auto r2 = integrate_semi_infinite([](double u) { return 1.0 / (1.0 + u * u); }, cfg2);
  CHECK(std::abs(r2.value - kPi / 2.0) < 1e-8);
  CHECK(std::abs(r2.value - kPi / 2.0) < 3.0 * r2.error_estimate + 1e-12);
}

TEST_CASE("semi-infinite: oscillatory tails") {
  // int_0^inf cos(a u) sech^2(u) du = (pi a / 2) / sinh(pi a / 2)
  QuadConfig cfg;
  cfg.tail_mode = TailMode::oscillatory;
  cfg.tail_frequency = 2.0;  // splitting path: 2 * 1000 > 40
  auto f2 = [](double u) {
    double c = std::cosh(u);
    return std::cos(2.0 * u) / (c * c);
  };
  auto r = integrate_semi_infinite(f2, cfg);
  CHECK(r.converged);
  CHECK(std::abs(r.value - 0.27202905498213316) < 1e-11);

  cfg.tail_frequency = 0.02;  // falls back to the exp-sinh path
  auto f3 = [](double u) {
    double c = std::cosh(u);
    return std::cos(0.02 * u) / (c * c);
  };
  r = integrate_semi_infinite(f3, cfg);
  double a = 0.02;
  CHECK(std::abs(r.value - (kPi * a / 2.0) / std::sinh(kPi * a / 2.0)) < 1e-10);
}

TEST_CASE("density normalization via quadrature") {
  for (int ell = 1; ell <= 6; ++ell) {
    const HyperExpr& rho = rho_closed_form(ell);
    QuadConfig cfg;
    cfg.abs_tol = 1e-12;
    cfg.rel_tol = 1e-12;
    auto r = integrate_semi_infinite([&rho](double u) { return rho.eval(u); }, cfg);
    CHECK(r.converged);
    CHECK(std::abs(2.0 * r.value - 1.0) < 1e-9);
  }
}

TEST_CASE("fourier representation matches the exact densities") {
  for (int ell = 1; ell <= 6; ++ell) {
    const HyperExpr& rho = rho_closed_form(ell);
    for (double x : {0.0, 0.25, 0.5, 1.0, 2.0}) {
      auto r = fourier_density(ell, x);
      CHECK(std::abs(r.value - rho.eval(x)) < 1e-9);
    }
  }
}

TEST_CASE("characteristic function of the base density") {
  // int rho_1(x) e^{-2 pi i x xi} dx = pi xi / sinh(pi xi)
  const HyperExpr& rho = rho_closed_form(1);
  for (double xi : {0.0, 0.5, 1.0, 2.0}) {
    QuadConfig cfg;
    cfg.tail_mode = TailMode::oscillatory;
    cfg.tail_frequency = 2.0 * kPi * xi;
    auto r = integrate_semi_infinite(
        [&rho, xi](double x) { return rho.eval(x) * std::cos(2.0 * kPi * xi * x); }, cfg);
    double want = xi == 0.0 ? 1.0 : kPi * xi / std::sinh(kPi * xi);
    CHECK(std::abs(2.0 * r.value - want) < 1e-9);
  }
}

TEST_CASE("log moments: frozen closed-form spots") {
  // order 1 at x = 3: psi(3) - log(5/2)
  auto r1 = log_moment(1, 1.0 / 6.25);
  CHECK(r1.converged);
  CHECK(std::abs(r1.value - 0.0064936032243120742) < 1e-11);
  // order 2 at x = 3
  auto r2 = log_moment(2, 0.25);
  CHECK(std::abs(r2.value - 0.019505288234974703) < 1e-11);
  CHECK_THROWS_AS(log_moment(1, 0.0), std::domain_error);
}

TEST_CASE("fraction integrals are the log-moment derivatives") {
  const int ell = 2;
  const double b = 0.25;
  auto mfi = moment_fraction_integrals(ell, b);
  CHECK(mfi.u2_frac.converged);
  CHECK(mfi.u2_frac_sq.converged);
  CHECK(mfi.frac_sq.converged);
  // d/db log_moment = int u^2 rho/(1 + b u^2)
  const double h = 1e-4;
  double num = (log_moment(ell, b + h).value - log_moment(ell, b - h).value) / (2.0 * h);
  CHECK(std::abs(num - mfi.u2_frac.value) < 1e-7);
  // d/db of that = -int u^4 rho/(1+b u^2)^2 = (u2_frac_sq - u2_frac)/b
  double num2 = (log_moment(ell, b + h).value - 2.0 * log_moment(ell, b).value +
                 log_moment(ell, b - h).value) /
                (h * h);
  CHECK(std::abs(num2 - (mfi.u2_frac_sq.value - mfi.u2_frac.value) / b) < 1e-5);
}

TEST_CASE("self-validation: halving tolerances moves results less than the estimate") {
  QuadConfig cfg;
  cfg.abs_tol = 1e-8;
  cfg.rel_tol = 1e-8;
  QuadConfig tight = cfg;
  tight.abs_tol /= 2.0;
  tight.rel_tol /= 2.0;

  auto f1 = [](double x) { return std::exp(-x) * std::cos(3.0 * x); };
  auto a1 = integrate_semi_infinite(f1, cfg);
  auto b1 = integrate_semi_infinite(f1, tight);
  CHECK(std::abs(a1.value - b1.value) <= std::max(a1.error_estimate, 1e-14));

  auto f2 = [](double x) { return std::log(x) * x; };
  auto a2 = integrate_finite(f2, 0.0, 2.0, cfg);
  auto b2 = integrate_finite(f2, 0.0, 2.0, tight);
  CHECK(std::abs(a2.value - b2.value) <= std::max(a2.error_estimate, 1e-14));

  auto r3 = log_moment(3, 0.5, cfg);
  auto t3 = log_moment(3, 0.5, tight);
  CHECK(std::abs(r3.value - t3.value) <= std::max(r3.error_estimate, 1e-14));
}
