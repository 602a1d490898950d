#pragma once

#include "norlund/quadrature.hpp"
#include "norlund/report.hpp"

namespace norlund {

// Independent evaluation routes for the convolution densities rho_ell.
//   closed_form        hyperbolic closed form (reference route)
//   recurrence         second-order recurrence lifting rho_{ell-2}, ell >= 3
//   fourier            cosine-transform route via (y / sinh y)^ell
//   barnes_zeta        (ell! / pi) Re zeta_ell(ell + 1, ell/2 + i x)
//   convolution_oracle numeric rho_{ell-1} * rho_1, ell in {2, 3} only
enum class DensityMethod {
  closed_form,
  recurrence,
  fourier,
  barnes_zeta,
  convolution_oracle,
};

// Evaluates rho_ell(x) by the requested route.  Quadrature-backed routes use
// *cfg when given.  Throws std::invalid_argument when the method does not
// support this ell.
double density(int ell, double x, DensityMethod method = DensityMethod::closed_form,
               const QuadConfig* cfg = nullptr);

// Same evaluation, but keeps the route's quadrature error estimate (zero for
// the exact routes: closed_form, recurrence, barnes_zeta).
QuadResult density_result(int ell, double x,
                          DensityMethod method = DensityMethod::closed_form,
                          const QuadConfig* cfg = nullptr);

// Checks the closed form against the cosine-transform route, which evaluates
// the scaled characteristic function directly.  Supported for ell <= 4.
VerificationReport pitman_yor_relation_check(int ell, double x);

}  // namespace norlund
