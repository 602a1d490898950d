#include "norlund/quadrature.hpp"

#include "norlund/hyper.hpp"
#include "norlund/special.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace norlund {

namespace {

void validate(const QuadConfig& cfg) {
  if (!(cfg.rel_tol > 0.0)) throw std::invalid_argument("QuadConfig: rel_tol must be > 0");
  if (!(cfg.abs_tol >= 0.0)) throw std::invalid_argument("QuadConfig: abs_tol must be >= 0");
  if (cfg.max_levels < 1 || cfg.max_levels > 16)
    throw std::invalid_argument("QuadConfig: max_levels must be in [1, 16]");
  if (!(cfg.tail_cutoff > 0.0))
    throw std::invalid_argument("QuadConfig: tail_cutoff must be > 0");
  if (cfg.tail_mode == TailMode::algebraic && !(cfg.tail_power > 1.0))
    throw std::invalid_argument("QuadConfig: algebraic tail needs tail_power > 1");
  if (cfg.tail_mode == TailMode::oscillatory && !(cfg.tail_frequency >= 0.0))
    throw std::invalid_argument("QuadConfig: oscillatory tail needs tail_frequency >= 0");
}

[[noreturn]] void non_finite(double x) {
  throw std::runtime_error("quadrature: integrand returned a non-finite value at x = " +
                           std::to_string(x));
}

// Shared trapezoid-with-level-doubling driver over a node transform.
// node(u) must return the weighted integrand w(u) f(x(u)), or 0.0 when the
// weight has underflowed.
template <class Node>
QuadResult levelled_sum(const Node& node, const QuadConfig& cfg, double umax) {
  QuadResult res;
  double h = 1.0;
  double node_sum = node(0.0);
  double abs_sum = std::abs(node_sum);
  res.evaluations = 1;
  // remaining level-0 nodes
  for (int dir = 0; dir < 2; ++dir) {
    int quiet = 0;
    for (int j = 1; quiet < 2; ++j) {
      double u = dir == 0 ? j * h : -j * h;
      if (std::abs(u) > umax) break;
      double t = node(u);
      ++res.evaluations;
      node_sum += t;
      abs_sum += std::abs(t);
      quiet = std::abs(t) <= 1e-17 * std::max(abs_sum, 1e-300) ? quiet + 1 : 0;
    }
  }
  double prev = node_sum * h;
  double err = std::abs(prev);
  for (int level = 1; level <= cfg.max_levels; ++level) {
    h *= 0.5;
    // new nodes: odd multiples of the current step
    for (int dir = 0; dir < 2; ++dir) {
      int quiet = 0;
      for (long long m = 1; quiet < 2; m += 2) {
        double u = dir == 0 ? m * h : -m * h;
        if (std::abs(u) > umax) break;
        double t = node(u);
        ++res.evaluations;
        node_sum += t;
        abs_sum += std::abs(t);
        quiet = std::abs(t) <= 1e-17 * std::max(abs_sum, 1e-300) ? quiet + 1 : 0;
      }
    }
    double cur = node_sum * h;
    err = std::abs(cur - prev);
    prev = cur;
    if (level >= 3 && err <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(cur))) {
      res.converged = true;
      break;
    }
  }
  res.value = prev;
  // never report below the roundoff floor of the node sums
  res.error_estimate = std::max(err, 2e-16 * abs_sum * h);
  return res;
}

QuadResult exp_sinh_semi_infinite(const Integrand& f, const QuadConfig& cfg) {
  auto node = [&f](double u) {
    const double sh = (kPi / 2) * std::sinh(u);
    if (std::abs(sh) > 700.0) return 0.0;  // e^{sh} out of double range
    const double ex = std::exp(sh);
    const double x = ex;  // integral starts at 0
    const double w = (kPi / 2) * std::cosh(u) * ex;
    const double fv = f(x);
    if (!std::isfinite(fv)) non_finite(x);
    return w * fv;
  };
  return levelled_sum(node, cfg, 7.0);
}

}  // namespace

QuadResult integrate_finite(const Integrand& f, double a, double b, const QuadConfig& cfg) {
  validate(cfg);
  if (a == b) return {0.0, 0.0, 0, true};
  if (a > b) {
    QuadResult r = integrate_finite(f, b, a, cfg);
    r.value = -r.value;
    return r;
  }
  const double half = 0.5 * (b - a);
  auto node = [&](double u) {
    const double sh = (kPi / 2) * std::sinh(u);
    if (std::abs(sh) > 350.0) return 0.0;  // weight underflows
    const double em = std::exp(-2.0 * std::abs(sh));
    const double q = 2.0 * em / (1.0 + em);  // 1 -| tanh(sh) |
    // keep full precision near the endpoints by working with the distance
    // from the nearer endpoint instead of tanh itself
    const double x = u >= 0.0 ? b - half * q : a + half * q;
    const double sech2 = 4.0 * em / ((1.0 + em) * (1.0 + em));
    const double w = half * (kPi / 2) * std::cosh(u) * sech2;
    if (w == 0.0) return 0.0;
    const double fv = f(x);
    if (!std::isfinite(fv)) non_finite(x);
    return w * fv;
  };
  return levelled_sum(node, cfg, 7.0);
}

namespace {

// Closed-form integral of (A log u + B) u^{-p} from c to infinity, with A and
// B fitted from integrand samples at c and 2c.
struct TailFit {
  double value = 0.0;
  long long evaluations = 0;
};

TailFit algebraic_tail(const Integrand& f, double c, double p) {
  const double fc = f(c), f2c = f(2.0 * c);
  if (!std::isfinite(fc)) non_finite(c);
  if (!std::isfinite(f2c)) non_finite(2.0 * c);
  const double cp = std::pow(c, p), c2p = std::pow(2.0 * c, p);
  const double A = (f2c * c2p - fc * cp) / std::log(2.0);
  const double B = fc * cp - A * std::log(c);
  const double pm1 = p - 1.0;
  TailFit t;
  t.value = std::pow(c, 1.0 - p) * (A * std::log(c) / pm1 + A / (pm1 * pm1) + B / pm1);
  t.evaluations = 2;
  return t;
}

QuadResult algebraic_semi_infinite(const Integrand& f, const QuadConfig& cfg) {
  // power-of-two cutoff at or above the configured one
  double c_big = 1.0;
  while (c_big < cfg.tail_cutoff) c_big *= 2.0;
  QuadConfig seg_cfg = cfg;
  seg_cfg.abs_tol = cfg.abs_tol / 8.0;
  QuadResult res;
  bool all_conv = true;
  double lo = 0.0, hi = 1.0;
  while (lo < c_big) {
    QuadResult seg = integrate_finite(f, lo, hi, seg_cfg);
    res.value += seg.value;
    res.error_estimate += seg.error_estimate;
    res.evaluations += seg.evaluations;
    all_conv = all_conv && seg.converged;
    lo = hi;
    hi *= 2.0;
  }
  // one more segment [C, 2C], then the fitted analytic tail from 2C; the fit
  // from C must agree with (segment + fit from 2C), and the mismatch is
  // charged to the error estimate
  QuadResult last = integrate_finite(f, c_big, 2.0 * c_big, seg_cfg);
  TailFit tail_far = algebraic_tail(f, 2.0 * c_big, cfg.tail_power);
  TailFit tail_near = algebraic_tail(f, c_big, cfg.tail_power);
  res.value += last.value + tail_far.value;
  res.evaluations += last.evaluations + tail_far.evaluations + tail_near.evaluations;
  const double mismatch = std::abs(tail_near.value - (last.value + tail_far.value));
  res.error_estimate += last.error_estimate + mismatch;
  res.converged = all_conv && last.converged;
  return res;
}

QuadResult oscillatory_semi_infinite(const Integrand& f, const QuadConfig& cfg) {
  if (cfg.tail_frequency * cfg.tail_cutoff <= 40.0) {
    QuadConfig c2 = cfg;
    c2.tail_mode = TailMode::exponential;
    return exp_sinh_semi_infinite(f, c2);
  }
  const double period_half = kPi / cfg.tail_frequency;
  QuadConfig seg_cfg = cfg;
  seg_cfg.abs_tol = cfg.abs_tol / 8.0;
  QuadResult res;
  res.converged = false;
  bool all_conv = true;
  int quiet = 0;
  double last_mag = 0.0;
  for (long long k = 0;; ++k) {
    const double lo = k * period_half, hi = (k + 1) * period_half;
    if (lo >= cfg.tail_cutoff) break;  // ran past the cutoff without settling
    QuadResult seg = integrate_finite(f, lo, hi, seg_cfg);
    res.value += seg.value;
    res.error_estimate += seg.error_estimate;
    res.evaluations += seg.evaluations;
    all_conv = all_conv && seg.converged;
    last_mag = std::abs(seg.value);
    const double goal = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(res.value)) / 4.0;
    quiet = last_mag <= goal ? quiet + 1 : 0;
    if (quiet >= 3) {
      res.converged = all_conv;
      break;
    }
  }
  // truncation bound for a decaying alternating tail
  res.error_estimate += last_mag;
  return res;
}

}  // namespace

QuadResult integrate_semi_infinite(const Integrand& f, const QuadConfig& cfg) {
  validate(cfg);
  switch (cfg.tail_mode) {
    case TailMode::exponential:
      return exp_sinh_semi_infinite(f, cfg);
    case TailMode::algebraic:
      return algebraic_semi_infinite(f, cfg);
    case TailMode::oscillatory:
      return oscillatory_semi_infinite(f, cfg);
  }
  throw std::invalid_argument("integrate_semi_infinite: unknown tail mode");
}

namespace {

// y / sinh y, stable at 0 and harmlessly 0 once sinh overflows.
double y_over_sinh(double y) {
  y = std::abs(y);
  if (y < 1e-4) {
    const double y2 = y * y;
    return 1.0 - y2 / 6.0 + 7.0 * y2 * y2 / 360.0;
  }
  if (y > 700.0) return 0.0;
  return y / std::sinh(y);
}

}  // namespace

QuadResult fourier_density(int ell, double x, const QuadConfig& cfg) {
  if (ell < 1) throw std::domain_error("fourier_density: requires ell >= 1");
  QuadConfig c2 = cfg;
  c2.tail_mode = TailMode::oscillatory;
  c2.tail_frequency = 2.0 * std::abs(x);
  auto f = [ell, x](double y) {
    const double r = y_over_sinh(y);
    if (r == 0.0) return 0.0;
    double p = 1.0;
    for (int i = 0; i < ell; ++i) p *= r;
    return p * std::cos(2.0 * x * y);
  };
  QuadResult res = integrate_semi_infinite(f, c2);
  res.value *= 2.0 / kPi;
  res.error_estimate *= 2.0 / kPi;
  return res;
}

QuadResult log_moment(int ell, double b, const QuadConfig& cfg) {
  if (!(b > 0.0)) throw std::domain_error("log_moment: requires b > 0");
  const HyperExpr& rho = rho_closed_form(ell);
  QuadConfig c2 = cfg;
  c2.tail_mode = TailMode::exponential;
  auto f = [&rho, b](double u) { return std::log1p(b * u * u) * rho.eval(u); };
  return integrate_semi_infinite(f, c2);
}

MomentFractionIntegrals moment_fraction_integrals(int ell, double b, const QuadConfig& cfg) {
  if (!(b > 0.0)) throw std::domain_error("moment_fraction_integrals: requires b > 0");
  const HyperExpr& rho = rho_closed_form(ell);
  QuadConfig c2 = cfg;
  c2.tail_mode = TailMode::exponential;
  MomentFractionIntegrals out;
  out.u2_frac = integrate_semi_infinite(
      [&rho, b](double u) { return u * u * rho.eval(u) / (1.0 + b * u * u); }, c2);
  out.u2_frac_sq = integrate_semi_infinite(
      [&rho, b](double u) {
        const double d = 1.0 + b * u * u;
        return u * u * rho.eval(u) / (d * d);
      },
      c2);
  out.frac_sq = integrate_semi_infinite(
      [&rho, b](double u) {
        const double d = 1.0 + b * u * u;
        return rho.eval(u) / (d * d);
      },
      c2);
  return out;
}

}  // namespace norlund
