#include "norlund/density.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include "norlund/hyper.hpp"
#include "norlund/special.hpp"

namespace norlund {

namespace {

double factorial_d(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

QuadResult density_result(int ell, double x, DensityMethod method,
                          const QuadConfig* cfg) {
  if (ell < 1) throw std::domain_error("density: ell must be positive");
  QuadConfig qc = cfg ? *cfg : QuadConfig{};
  switch (method) {
    case DensityMethod::closed_form:
      return {rho_closed_form(ell).eval(x), 0.0};

    case DensityMethod::recurrence:
      if (ell < 3)
        throw std::invalid_argument(
            "density: the recurrence route needs ell >= 3 (got " +
            std::to_string(ell) + ")");
      return {rho_from_recurrence(ell).eval(x), 0.0};

    case DensityMethod::fourier:
      return fourier_density(ell, x, qc);

    case DensityMethod::barnes_zeta: {
      std::complex<double> w(ell / 2.0, x);
      std::complex<double> z = barnes_zeta(ell, ell + 1, w);
      return {factorial_d(ell) / kPi * z.real(), 0.0};
    }

    case DensityMethod::convolution_oracle: {
      if (ell != 2 && ell != 3)
        throw std::invalid_argument(
            "density: the convolution oracle supports ell in {2, 3} (got " +
            std::to_string(ell) + ")");
      const HyperExpr& prev = rho_closed_form(ell - 1);
      const HyperExpr& base = rho_closed_form(1);
      // both factors decay like exp(-2 pi |u|); 25 units past the support
      // window leaves a tail far below any tolerance in use
      double lo = std::min(0.0, x) - 25.0;
      double hi = std::max(0.0, x) + 25.0;
      return integrate_finite(
          [&prev, &base, x](double u) { return prev.eval(u) * base.eval(x - u); },
          lo, hi, qc);
    }
  }
  throw std::logic_error("density: unhandled method");
}

double density(int ell, double x, DensityMethod method, const QuadConfig* cfg) {
  return density_result(ell, x, method, cfg).value;
}

VerificationReport pitman_yor_relation_check(int ell, double x) {
  if (ell < 1 || ell > 4)
    throw std::invalid_argument(
        "pitman_yor_relation_check: supported for 1 <= ell <= 4 (got " +
        std::to_string(ell) + ")");
  double lhs = rho_closed_form(ell).eval(x);
  QuadConfig qc;
  auto rhs = fourier_density(ell, x, qc);
  return make_numeric_report(
      "characteristic-function-relation", {param("ell", ell), param("x", x)}, lhs,
      rhs.value, 1e-9, {rhs.error_estimate},
      "closed form vs cosine transform of (y / sinh y)^ell");
}

}  // namespace norlund
