#pragma once

#include <functional>

namespace norlund {

enum class TailMode { exponential, algebraic, oscillatory };

struct QuadConfig {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;       // must be > 0
  int max_levels = 12;          // step halvings, at most 16
  double tail_cutoff = 1e3;     // where analytic tail handling takes over
  TailMode tail_mode = TailMode::exponential;
  double tail_power = 3.0;      // algebraic: integrand ~ (A log u + B) u^{-tail_power}
  double tail_frequency = 0.0;  // oscillatory: frequency of the cosine factor
};

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;  // always >= 0
  long long evaluations = 0;
  bool converged = false;
};

using Integrand = std::function<double(double)>;

// tanh-sinh quadrature on [a, b] with level doubling and node reuse. Throws
// std::runtime_error naming the abscissa if the integrand returns a
// non-finite value, std::invalid_argument on a bad config.
QuadResult integrate_finite(const Integrand& f, double a, double b,
                            const QuadConfig& cfg = {});

// Integral over (0, infinity). Strategy depends on cfg.tail_mode:
//  - exponential: single exp-sinh transform;
//  - algebraic: doubling segments [0,1],[1,2],...,[C,2C] past tail_cutoff,
//    then a closed-form (A log u + B) u^{-tail_power} tail fitted from two
//    integrand samples, with the fit's self-consistency charged to the error;
//  - oscillatory: exp-sinh when tail_frequency * tail_cutoff <= 40, otherwise
//    summation of half-period segments of the cosine factor until the partial
//    sums settle.
QuadResult integrate_semi_infinite(const Integrand& f, const QuadConfig& cfg = {});

// (2/pi) * int_0^inf (y/sinh y)^ell cos(2 x y) dy  -- the inverse transform
// representation of the ell-fold convolution density.
QuadResult fourier_density(int ell, double x, const QuadConfig& cfg = {});

// int_0^inf log(1 + b u^2) rho_ell(u) du for b > 0.
QuadResult log_moment(int ell, double b, const QuadConfig& cfg = {});

struct MomentFractionIntegrals {
  QuadResult u2_frac;     // int_0^inf u^2 rho_ell(u) / (1 + b u^2)     du
  QuadResult u2_frac_sq;  // int_0^inf u^2 rho_ell(u) / (1 + b u^2)^2   du
  QuadResult frac_sq;     // int_0^inf     rho_ell(u) / (1 + b u^2)^2   du
};
// The derivative building blocks for the difference-equation checks.
MomentFractionIntegrals moment_fraction_integrals(int ell, double b,
                                                  const QuadConfig& cfg = {});

}  // namespace norlund
