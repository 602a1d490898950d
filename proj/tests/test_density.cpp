#include "doctest.h"

#include "norlund/density.hpp"
#include "norlund/special.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

using namespace norlund;

TEST_CASE("all routes agree on the shared domain") {
  for (int ell : {1, 2, 3}) {
    for (double x : {0.0, 0.25, 1.0, 2.0}) {
      double ref = density(ell, x, DensityMethod::closed_form);
      CHECK(std::abs(density(ell, x, DensityMethod::fourier) - ref) < 1e-7);
      CHECK(std::abs(density(ell, x, DensityMethod::barnes_zeta) - ref) < 1e-7);
      if (ell >= 3)
        CHECK(std::abs(density(ell, x, DensityMethod::recurrence) - ref) < 1e-7);
      if (ell == 2 || ell == 3)
        CHECK(std::abs(density(ell, x, DensityMethod::convolution_oracle) - ref) <
              1e-7);
    }
  }
}

TEST_CASE("frozen reference point survives the dispatch layer") {
  CHECK(std::abs(density(1, 0.5) - 0.24949208314622482) < 1e-15);
  // even in x
  CHECK(density(2, -1.25) == density(2, 1.25));
}

TEST_CASE("zeta route: conjugate pairs cancel the imaginary part") {
  for (int ell : {1, 2, 3, 4}) {
    for (double x : {0.3, 1.7}) {
      std::complex<double> up =
          barnes_zeta(ell, ell + 1, {ell / 2.0, x});
      std::complex<double> down =
          barnes_zeta(ell, ell + 1, {ell / 2.0, -x});
      CHECK(std::abs(up.imag() + down.imag()) < 1e-12);
      CHECK(std::abs(up.real() - down.real()) < 1e-12);
    }
  }
}

TEST_CASE("densities decay monotonically away from the mode") {
  for (int ell = 1; ell <= 6; ++ell) {
    double prev = density(ell, 1.0);
    for (double x = 1.25; x <= 5.0 + 1e-9; x += 0.25) {
      double cur = density(ell, x);
      CHECK(cur < prev);
      CHECK(cur > 0.0);
      prev = cur;
    }
  }
}

TEST_CASE("route / order incompatibilities are explicit") {
  CHECK_THROWS_AS(density(2, 1.0, DensityMethod::recurrence), std::invalid_argument);
  CHECK_THROWS_AS(density(1, 1.0, DensityMethod::convolution_oracle),
                  std::invalid_argument);
  CHECK_THROWS_AS(density(4, 1.0, DensityMethod::convolution_oracle),
                  std::invalid_argument);
  CHECK_THROWS_AS(density(0, 1.0), std::domain_error);
}

TEST_CASE("custom quadrature configuration reaches the backends") {
  QuadConfig tight;
  tight.abs_tol = 1e-12;
  tight.rel_tol = 1e-12;
  double loose = density(2, 0.5, DensityMethod::convolution_oracle);
  double strict = density(2, 0.5, DensityMethod::convolution_oracle, &tight);
  double ref = density(2, 0.5);
  CHECK(std::abs(strict - ref) < 1e-9);
  CHECK(std::abs(loose - ref) < 1e-7);
}

TEST_CASE("characteristic function relation check") {
  const double grid[][2] = {{1, 0.0}, {2, 1.0}, {3, 0.5}, {4, 0.25}};
  for (auto& g : grid) {
    auto rep = pitman_yor_relation_check(static_cast<int>(g[0]), g[1]);
    CHECK(rep.identity_id == "characteristic-function-relation");
    CHECK(rep.passed);
    CHECK(rep.residual < 1e-9);
    CHECK(rep.tolerance == 1e-9);
    REQUIRE(rep.parameters.size() == 2);
    CHECK(rep.parameters[0].name == "ell");
    CHECK(rep.parameters[1].name == "x");
    REQUIRE(rep.quadrature_errors.size() == 1);
    CHECK(rep.quadrature_errors[0] <= 5e-10);
  }
  CHECK_THROWS_AS(pitman_yor_relation_check(5, 0.0), std::invalid_argument);
}
