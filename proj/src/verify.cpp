#include "norlund/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>

#include "norlund/density.hpp"
#include "norlund/exact.hpp"
#include "norlund/hyper.hpp"
#include "norlund/quadrature.hpp"
#include "norlund/special.hpp"

namespace norlund {

namespace {

using cplx = std::complex<double>;

double resolve_tol(const VerifyOptions& o, const std::string& id, double fallback) {
  auto it = o.tolerance_overrides.find(id);
  double t = it != o.tolerance_overrides.end() ? it->second : fallback;
  return t * o.tolerance_scale;
}

// Tracks the worst grid point of an aggregated check so the report can carry
// a concrete lhs/rhs pair instead of an anonymous maximum.
struct Worst {
  double resid = -1.0;
  double lhs = 0.0;
  double rhs = 0.0;
  std::string where;

  void feed(double l, double r, std::string w) {
    double d = std::abs(l - r);
    if (!(d <= resid)) {  // also promotes NaN
      resid = d;
      lhs = l;
      rhs = r;
      where = std::move(w);
    }
  }
};

std::string join_xs(const std::vector<double>& xs) {
  std::string s;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ", ";
    s += format_double(xs[i]);
  }
  return s;
}

double poly_at(const Poly<Rational>& p, double x) {
  return p.eval_as<double>(x, [](const Rational& c) { return to_double(c); });
}

std::vector<double> dcoeffs(const Poly<Rational>& p) {
  std::vector<double> c;
  c.reserve(p.coeffs().size());
  for (const Rational& r : p.coeffs()) c.push_back(to_double(r));
  return c;
}

double horner(const std::vector<double>& c, double x) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double cothm1(double y) { return y > 350.0 ? 0.0 : 2.0 / std::expm1(2.0 * y); }
double tanhm1(double y) { return y > 350.0 ? 0.0 : -2.0 / (std::exp(2.0 * y) + 1.0); }

double sech_sq(double y) {
  double e = std::exp(-2.0 * std::abs(y));
  double d = 1.0 + e;
  return 4.0 * e / (d * d);
}

cplx ipow(cplx z, int k) {
  cplx r(1.0, 0.0);
  for (int i = 0; i < k; ++i) r *= z;
  return r;
}

// ---------------------------------------------------------------------------
// umbral-inversion
// ---------------------------------------------------------------------------

std::vector<VerificationReport> check_umbral(const VerifyOptions& opts) {
  (void)opts;
  const int n_max = 20;
  bool equal = true;
  int first_bad = -1;
  for (int n = 0; n <= n_max && equal; ++n) {
    Poly<Rational> a = bernoulli_poly(n).antiderivative();
    Poly<Rational> avg = a.shifted(Rational(1)) - a;
    if (!(avg == Poly<Rational>::monomial(Rational(1), n))) {
      equal = false;
      first_bad = n;
    }
  }
  std::string notes = equal
      ? "averaging the degree-n Bernoulli polynomial over a unit shift recovers "
        "the pure power exactly, in rational arithmetic"
      : "first mismatch at n = " + std::to_string(first_bad);
  return {make_exact_report("umbral-inversion", {param("n_max", n_max)},
                            "integral of B_n(x + u) for u from 0 to 1, n <= 20",
                            "x^n", equal, std::move(notes))};
}

// ---------------------------------------------------------------------------
// digamma-log-integrals
// ---------------------------------------------------------------------------

std::vector<VerificationReport> check_digamma_log(const VerifyOptions& opts) {
  const std::string id = "digamma-log-integrals";
  std::vector<double> xs = opts.xs.empty() ? std::vector<double>{1.0, 2.0, 3.7, 5.0}
                                           : opts.xs;
  for (double x : xs)
    if (!(x > 0.5))
      throw std::domain_error(id + ": needs x > 1/2, got " + format_double(x));

  double tol = resolve_tol(opts, id, 1e-8);
  Worst worst;
  std::vector<double> errs;
  bool consistent = true;
  for (double x : xs) {
    auto unit = integrate_finite([x](double t) { return digamma(x + t); }, 0.0, 1.0);
    worst.feed(unit.value, std::log(x), "unit-interval integral at x = " + format_double(x));
    errs.push_back(unit.error_estimate);

    auto inv = integrate_semi_infinite([x](double u) {
      double d = x - 0.5;
      return std::log(d * d + u * u) * sech_sq(kPi * u);
    });
    worst.feed(kPi / 2.0 * inv.value, digamma(x),
               "inversion integral at x = " + format_double(x));
    errs.push_back(kPi / 2.0 * inv.error_estimate);

    if (std::abs(leibniz_rhs(1, x) - digamma(x)) > 1e-12) consistent = false;
  }
  std::string notes =
      "unit average of psi equals log x; the half-line log integral against the "
      "squared-secant weight inverts back to psi (odd imaginary part drops out); "
      "largest residual from the " + worst.where;
  notes += consistent
      ? "; order-1 log-moment route reproduces the same psi values to 1e-12"
      : "; CROSS-CHECK FAILED: order-1 log-moment route disagrees with psi";
  auto rep = make_numeric_report(id, {param("x", join_xs(xs))}, worst.lhs, worst.rhs,
                                 tol, std::move(errs), std::move(notes));
  rep.residual = worst.resid;
  rep.passed = rep.passed && consistent;
  return {rep};
}

// ---------------------------------------------------------------------------
// digamma-difference-lemma
// ---------------------------------------------------------------------------

std::vector<VerificationReport> check_delta_lemma(const VerifyOptions& opts) {
  const std::string id = "digamma-difference-lemma";
  std::vector<int> ells;
  if (opts.ell) {
    if (*opts.ell < 1 || *opts.ell > 8)
      throw std::invalid_argument(id + ": ell must be in 1..8");
    ells = {*opts.ell};
  } else {
    ells = {1, 2, 3, 4, 5};
  }
  std::vector<double> xs = opts.xs.empty() ? std::vector<double>{1.2, 2.5, 4.0}
                                           : opts.xs;
  for (double x : xs)
    if (!(x > 0.0))
      throw std::domain_error(id + ": needs x > 0, got " + format_double(x));

  double tol = resolve_tol(opts, id, 1e-10);
  std::vector<VerificationReport> out;
  for (int ell : ells) {
    Worst worst;
    for (int p = -1; p <= ell - 1; ++p) {
      Poly<Rational> factor = binom_poly(p, ell);
      for (double x : xs) {
        double lhs = forward_difference(
            [&factor](double t) { return poly_at(factor, t) * digamma(t); }, ell, x);
        double rhs = to_double(harmonic(ell)) + digamma(x + p + 1);
        worst.feed(lhs, rhs,
                   "p = " + std::to_string(p) + ", x = " + format_double(x));
      }
    }
    auto rep = make_numeric_report(
        id,
        {param("ell", ell), param("p", "-1.." + std::to_string(ell - 1)),
         param("x", join_xs(xs))},
        worst.lhs, worst.rhs, tol, {},
        "order-ell forward difference of binom(x+p, ell) * psi(x); largest "
        "residual at " + worst.where);
    rep.residual = worst.resid;
    out.push_back(std::move(rep));
  }
  return out;
}

// ---------------------------------------------------------------------------
// log-moment-closed-form
// ---------------------------------------------------------------------------

const std::map<int, std::vector<double>>& log_moment_grids() {
  static const std::map<int, std::vector<double>> grids = {
      {1, {1.7, 3.0, 3.7, 7.0}},
      {2, {2.6, 3.0, 5.0, 8.0}},
      {3, {3.7, 4.5, 6.0, 9.0}},
      {4, {4.8, 6.0, 8.0, 10.0}},
      {5, {5.9, 7.0, 9.0, 12.0}},
  };
  return grids;
}

std::vector<VerificationReport> check_log_moment(const VerifyOptions& opts) {
  const std::string id = "log-moment-closed-form";
  std::vector<std::pair<int, std::vector<double>>> blocks;
  if (opts.ell) {
    auto it = log_moment_grids().find(*opts.ell);
    if (it == log_moment_grids().end())
      throw std::invalid_argument(id + ": ell must be in 1..5");
    blocks.push_back(*it);
  } else {
    for (const auto& kv : log_moment_grids()) blocks.push_back(kv);
  }
  double tol = resolve_tol(opts, id, 1e-8);

  std::vector<VerificationReport> out;
  for (auto& [ell, default_grid] : blocks) {
    bool custom = !opts.xs.empty();
    const std::vector<double>& grid = custom ? opts.xs : default_grid;
    double half = ell / 2.0;
    for (double x : grid) {
      if (!(x > std::floor(half)) || std::abs(x - half) < 1e-9)
        throw std::domain_error(id + ": x must exceed floor(ell/2) and avoid ell/2, got " +
                                format_double(x));
    }
    Worst worst;
    std::vector<double> errs;
    for (double x : grid) {
      double w = x - half;
      double b = 1.0 / (w * w);
      auto q = log_moment(ell, b);
      double rhs = -std::log(std::abs(w)) + leibniz_rhs(ell, x);
      worst.feed(q.value, rhs, "x = " + format_double(x));
      errs.push_back(q.error_estimate);
    }
    std::string notes =
        "half-line log moment of the order-" + std::to_string(ell) +
        " density against the closed digamma-derivative form; largest residual at " +
        worst.where;
    bool extras_ok = true;
    if (!custom) {
      // one reflection point exercises the |x - ell/2| branch below ell/2
      double xr = half - 1.3;
      auto qr = log_moment(ell, 1.0 / (1.3 * 1.3));
      double rhs_r = -std::log(1.3) + leibniz_rhs(ell, half + 1.3);
      worst.feed(qr.value, rhs_r, "reflected x = " + format_double(xr));
      errs.push_back(qr.error_estimate);
      notes += "; reflected point checked at x = " + format_double(xr);
      if (ell == 1) {
        double spot = -std::log(2.5) + leibniz_rhs(1, 3.0);
        extras_ok = std::abs(spot - 0.0064936032243120742) < 1e-13;
        notes += extras_ok ? "; frozen spot value at x = 3 reproduced"
                           : "; FROZEN SPOT MISMATCH at x = 3";
      } else if (ell == 2) {
        double spot = -std::log(2.0) + leibniz_rhs(2, 3.0);
        extras_ok = std::abs(spot - 0.019505288234974703) < 1e-13;
        notes += extras_ok ? "; frozen spot value at x = 3 reproduced"
                           : "; FROZEN SPOT MISMATCH at x = 3";
      }
    }
    auto rep = make_numeric_report(id, {param("ell", ell), param("x", join_xs(grid))},
                                   worst.lhs, worst.rhs, tol, std::move(errs),
                                   std::move(notes));
    rep.residual = worst.resid;
    rep.passed = rep.passed && extras_ok;
    out.push_back(std::move(rep));
  }
  return out;
}

// ---------------------------------------------------------------------------
// modified-norlund-genfun
// ---------------------------------------------------------------------------

struct GenfunBlock {
  int ell;
  int n_terms;
  std::vector<double> zs;
};

const std::vector<GenfunBlock>& genfun_blocks() {
  static const std::vector<GenfunBlock> blocks = {
      {1, 6, {0.2, 0.14, 0.1, 0.07, 0.05, 0.035, 0.025}},
      {2, 6, {0.05, 0.04, 0.03, 0.024, 0.02, 0.017}},
      {3, 4, {0.1, 0.07, 0.05, 0.035, 0.025, 0.0175}},
  };
  return blocks;
}

std::vector<VerificationReport> check_genfun(const VerifyOptions& opts) {
  const std::string id = "modified-norlund-genfun";
  std::vector<GenfunBlock> blocks;
  if (opts.ell) {
    for (const auto& b : genfun_blocks())
      if (b.ell == *opts.ell) blocks.push_back(b);
    if (blocks.empty())
      throw std::invalid_argument(id + ": ell must be in 1..3 (validated grids)");
  } else {
    blocks = genfun_blocks();
  }
  double tol = resolve_tol(opts, id, 0.5);

  std::vector<VerificationReport> out;
  for (const auto& blk : blocks) {
    std::vector<double> coeffs;
    for (int n = 1; n <= blk.n_terms; ++n)
      coeffs.push_back(to_double(modified_norlund(n, Rational(blk.ell))));

    std::vector<double> lx, ly;
    for (double z : blk.zs) {
      double partial = 0.0;
      for (int n = blk.n_terms; n >= 1; --n) partial = (partial + coeffs[n - 1]) * z;
      double r = std::abs(genfun_modified_norlund(blk.ell, z) - partial);
      lx.push_back(std::log(z));
      ly.push_back(std::log(r));
    }
    double mx = 0, my = 0;
    for (size_t i = 0; i < lx.size(); ++i) {
      mx += lx[i];
      my += ly[i];
    }
    mx /= lx.size();
    my /= ly.size();
    double num = 0, den = 0;
    for (size_t i = 0; i < lx.size(); ++i) {
      num += (lx[i] - mx) * (ly[i] - my);
      den += (lx[i] - mx) * (lx[i] - mx);
    }
    double slope = num / den;

    bool closed_ok = true;
    std::string closed_note;
    if (blk.ell == 1) {
      double z = 0.1;
      double want = -0.5 * std::log(z) - 0.5 * digamma(z + 1.0 / z - 1.0);
      closed_ok = std::abs(genfun_modified_norlund(1, z) - want) < 1e-12;
      closed_note = "; explicit digamma form matched at z = 0.1";
    } else if (blk.ell == 2) {
      double z = 0.1;
      double xx = z + 1.0 / z;
      double want = -0.5 * std::log(z) -
                    0.5 * (digamma(xx - 1) + (xx - 1) * polygamma(1, xx - 1) - 1.0);
      closed_ok = std::abs(genfun_modified_norlund(2, z) - want) < 1e-12;
      closed_note = "; explicit digamma form matched at z = 0.1";
    }
    if (!closed_ok) closed_note = "; CLOSED-FORM CHECK FAILED at z = 0.1";

    auto rep = make_numeric_report(
        id,
        {param("ell", blk.ell), param("terms", blk.n_terms),
         param("z", join_xs(blk.zs))},
        slope, double(blk.n_terms + 1), tol, {},
        "asymptotic-order test only (the series is formal): log-log slope of the "
        "tail after " + std::to_string(blk.n_terms) + " exact terms" + closed_note);
    rep.passed = rep.passed && closed_ok;
    out.push_back(std::move(rep));
  }
  return out;
}

// ---------------------------------------------------------------------------
// density-difference-equation
// ---------------------------------------------------------------------------

std::vector<VerificationReport> check_dde(const VerifyOptions& opts) {
  const std::string id = "density-difference-equation";
  std::vector<std::pair<int, std::vector<double>>> blocks = {
      {1, {3.0, 4.0, 5.0}}, {2, {4.0, 5.0, 6.0}}, {3, {5.0, 6.0, 7.0}}};
  if (opts.ell) {
    if (*opts.ell < 1 || *opts.ell > 3)
      throw std::invalid_argument(id + ": ell must be in 1..3");
    blocks = {{*opts.ell, blocks[*opts.ell - 1].second}};
  }
  double tol = resolve_tol(opts, id, 1e-6);

  Worst direct, inter;
  std::vector<double> errs;
  std::string grid_desc;
  for (auto& [ell, default_grid] : blocks) {
    const std::vector<double>& grid = opts.xs.empty() ? default_grid : opts.xs;
    for (double x : grid)
      if (!(x > ell / 2.0 + 1e-9))
        throw std::domain_error(id + ": needs x > ell/2, got " + format_double(x));
    if (!grid_desc.empty()) grid_desc += "; ";
    grid_desc += "ell = " + std::to_string(ell) + ": x = " + join_xs(grid);

    for (double x : grid) {
      double w = x - ell / 2.0;
      double b = 1.0 / (w * w);
      auto z = log_moment(ell, b);
      auto mfi = moment_fraction_integrals(ell, b);
      auto z_next = log_moment(ell + 2, b);
      errs.push_back(z.error_estimate);
      errs.push_back(mfi.u2_frac.error_estimate);
      errs.push_back(mfi.u2_frac_sq.error_estimate);
      errs.push_back(z_next.error_estimate);

      double zp = mfi.u2_frac.value;
      double zpp = (mfi.u2_frac_sq.value - zp) / b;
      double y = z.value;
      double yp = -2.0 * zp / (w * w * w);
      double ypp = 4.0 * zpp / std::pow(w, 6) - 3.0 * yp / w;

      std::string at = "(ell, x) = (" + std::to_string(ell) + ", " + format_double(x) + ")";
      // direct variant: all terms in the x variable
      double lhs_a = ell * (ell + 1.0) * z_next.value;
      double rhs_a = x * (x - ell) * ypp + 2.0 * (ell + 1.0) * w * yp +
                     ell * (ell + 1.0) * y + ell * ell / (4.0 * w * w);
      direct.feed(lhs_a, rhs_a, at);
      // intermediate variant: all terms in the b variable
      double lhs_b = ell * (ell + 2.0) * z_next.value;
      double rhs_b = b * b * (4.0 - b * ell * ell) * zpp +
                     2.0 * b * (1.0 - 2.0 * ell - 0.75 * b * ell * ell) * zp +
                     ell * (ell + 1.0) * y + b * ell * ell / 4.0;
      inter.feed(lhs_b, rhs_b, at);
    }
  }

  bool direct_wins = direct.resid <= inter.resid;
  const Worst& win = direct_wins ? direct : inter;
  const Worst& lose = direct_wins ? inter : direct;
  std::string notes =
      std::string("two printed coefficient variants tested; the ") +
      (direct_wins ? "x-variable statement" : "b-variable intermediate display") +
      " holds (max residual " + format_double(win.resid) + " at " + win.where +
      ") while the " +
      (direct_wins ? "b-variable intermediate display" : "x-variable statement") +
      " fails (max residual " + format_double(lose.resid) + " at " + lose.where + ")";
  auto rep = make_numeric_report(id, {param("grid", grid_desc)}, win.lhs, win.rhs,
                                 tol, std::move(errs), std::move(notes));
  rep.residual = win.resid;
  // exactly one variant may satisfy the equation across the whole grid
  rep.passed = rep.passed && lose.resid > tol;
  return {rep};
}

// ---------------------------------------------------------------------------
// coth-log-integral
// ---------------------------------------------------------------------------

double coth_log_kernel(double x) {
  // (x coth x - 1) / sinh^2 x, stable at both ends
  if (x < 0.003) {
    double x2 = x * x;
    return 1.0 / 3.0 - 2.0 * x2 / 15.0 + 2.0 * x2 * x2 / 63.0;
  }
  if (x > 300.0) return 0.0;
  double coth = 1.0 + cothm1(x);
  double sh = std::sinh(x);
  return (x * coth - 1.0) / (sh * sh);
}

double x_over_sinh(double x) {
  if (x < 1e-4) return 1.0 - x * x / 6.0;
  if (x > 700.0) return 0.0;
  return x / std::sinh(x);
}

std::vector<VerificationReport> check_coth_log(const VerifyOptions& opts) {
  const std::string id = "coth-log-integral";
  double tol = resolve_tol(opts, id, 1e-8);
  const std::vector<double> as = {0.1, 1.0 / kPi, 1.0, 5.0};

  auto rhs_closed = [](double a) {
    double c = 1.0 / (kPi * a);
    return -std::log(c) - 1.0 + digamma(c) + c * polygamma(1, c);
  };

  Worst worst;
  std::vector<double> errs;
  for (double a : as) {
    auto q = integrate_semi_infinite(
        [a](double x) { return coth_log_kernel(x) * std::log1p(a * a * x * x); });
    worst.feed(q.value, rhs_closed(a), "a = " + format_double(a));
    errs.push_back(q.error_estimate);
  }

  bool extras_ok = true;
  std::string notes =
      "half-line integral of the squared-cosecant log kernel against the "
      "digamma/trigamma closed form; largest residual at " + worst.where;

  // at a = 1/pi the closed form collapses to -1 - gamma + pi^2/6
  if (std::abs(rhs_closed(1.0 / kPi) - (-1.0 - kEulerGamma + kPi * kPi / 6.0)) >
      1e-13) {
    extras_ok = false;
    notes += "; SPECIAL-VALUE CHECK FAILED at a = 1/pi";
  } else {
    notes += "; a = 1/pi special value reproduced";
  }

  // split-form cross-check at a = 1
  {
    const double a = 1.0;
    const double c = 1.0 / (kPi * a);
    auto q1 = integrate_semi_infinite([a](double x) {
      return -2.0 * x / std::expm1(2.0 * x) / (1.0 + a * a * x * x);
    });
    double i1_rhs = (digamma(c) + kPi * a / 2.0 + std::log(kPi * a)) / (a * a);
    auto q2 = integrate_semi_infinite([a](double x) {
      double t = x_over_sinh(x);
      return t * t / (1.0 + a * a * x * x);
    });
    double i2_rhs = -kPi / (2.0 * a) - 1.0 / (a * a) +
                    polygamma(1, c) / (kPi * a * a * a);
    auto qa = integrate_semi_infinite(
        [a](double x) { return coth_log_kernel(x) * std::log1p(a * a * x * x); });
    bool sub_ok = std::abs(q1.value - i1_rhs) < tol &&
                  std::abs(q2.value - i2_rhs) < tol &&
                  std::abs(qa.value - a * a * (q1.value + q2.value)) < tol;
    errs.push_back(q1.error_estimate);
    errs.push_back(q2.error_estimate);
    extras_ok = extras_ok && sub_ok;
    notes += sub_ok ? "; split-form pieces match their closed forms at a = 1"
                    : "; SPLIT-FORM CHECK FAILED at a = 1";
  }

  // a -> 0 limit: both sides fade out
  {
    const double a = 1e-3;
    auto q = integrate_semi_infinite(
        [a](double x) { return coth_log_kernel(x) * std::log1p(a * a * x * x); });
    bool lim_ok = std::abs(q.value) < 1e-4 && std::abs(rhs_closed(a)) < 1e-4;
    extras_ok = extras_ok && lim_ok;
    notes += lim_ok ? "; both sides vanish at a = 0.001"
                    : "; LIMIT CHECK FAILED at a = 0.001";
  }

  auto rep = make_numeric_report(id, {param("a", "0.1, 1/pi, 1, 5")}, worst.lhs,
                                 worst.rhs, tol, std::move(errs), std::move(notes));
  rep.residual = worst.resid;
  rep.passed = rep.passed && extras_ok;
  return {rep};
}

// ---------------------------------------------------------------------------
// log-derivative-chebyshev-lemma
// ---------------------------------------------------------------------------

std::vector<VerificationReport> check_log_derivative(const VerifyOptions& opts) {
  (void)opts;
  const std::string id = "log-derivative-chebyshev-lemma";
  const std::vector<Rational> bs = {Rational(1), Rational(1, 2), Rational(7, 5)};

  bool equal = true;
  std::string sample_lhs, sample_rhs;
  for (const Rational& b : bs) {
    // D = 1 + b u^2; successive numerators of d^k log(1 + b u^2) over D^k
    Poly<Rational> D =
        Poly<Rational>::constant(Rational(1)) + Poly<Rational>::monomial(b, 2);
    std::vector<Poly<Rational>> nums;  // nums[k] for order k+1
    Poly<Rational> n = Poly<Rational>::monomial(b * 2, 1);
    nums.push_back(n);
    for (int k = 1; k <= 6; ++k) {
      n = n.derivative() * D - Poly<Rational>::monomial(Rational(2 * k) * b, 1) * n;
      nums.push_back(n);
    }
    for (int m = 1; m <= 3; ++m) {
      // even order 2m with the first-kind kernel
      Rational c_even = Rational(2) * Rational(factorial(2 * m - 1));
      if (m % 2 == 0) c_even = -c_even;
      for (int i = 0; i < m; ++i) c_even *= b;
      Poly<Rational> t = chebyshev(ChebKind::first, 2 * m);
      Poly<Rational> rhs_even;
      for (int k = 0; k <= m; ++k) {
        Rational coef = 2 * k < static_cast<int>(t.coeffs().size())
                            ? t.coeffs()[2 * k]
                            : Rational(0);
        if (coef == Rational(0)) continue;
        Poly<Rational> dpow = Poly<Rational>::constant(Rational(1));
        for (int i = 0; i < m - k; ++i) dpow = dpow * D;
        rhs_even = rhs_even + dpow.scaled(coef);
      }
      rhs_even = rhs_even.scaled(c_even);
      if (!(nums[2 * m - 1] == rhs_even)) equal = false;
      if (m == 1 && b == Rational(1)) {
        sample_lhs = poly_to_string(nums[1], "u");
        sample_rhs = poly_to_string(rhs_even, "u");
      }
      // odd order 2m+1 with the second-kind kernel and the odd factor u
      Rational c_odd = Rational(2) * Rational(factorial(2 * m));
      if (m % 2 == 1) c_odd = -c_odd;
      for (int i = 0; i < m + 1; ++i) c_odd *= b;
      Poly<Rational> uu = chebyshev(ChebKind::second, 2 * m);
      Poly<Rational> rhs_odd;
      for (int k = 0; k <= m; ++k) {
        Rational coef = 2 * k < static_cast<int>(uu.coeffs().size())
                            ? uu.coeffs()[2 * k]
                            : Rational(0);
        if (coef == Rational(0)) continue;
        Poly<Rational> dpow = Poly<Rational>::constant(Rational(1));
        for (int i = 0; i < m - k; ++i) dpow = dpow * D;
        rhs_odd = rhs_odd + dpow.scaled(coef);
      }
      rhs_odd = rhs_odd * Poly<Rational>::monomial(c_odd, 1);
      if (!(nums[2 * m] == rhs_odd)) equal = false;
    }
  }
  return {make_exact_report(
      id, {param("orders", "2..7"), param("b", "1, 1/2, 7/5")},
      "derivative numerators over (1 + b*u^2)^k, e.g. order 2 at b = 1: " + sample_lhs,
      "kernel expansion cleared to the same denominator, e.g. " + sample_rhs, equal,
      "repeated derivatives of log(1 + b*u^2) match the first/second-kind "
      "Chebyshev kernels of the algebraic (Binet-type) closed forms; 18 "
      "order/parameter cases compared as exact rational polynomials")};
}

// ---------------------------------------------------------------------------
// chebyshev-kernel-integral-first / -second
// ---------------------------------------------------------------------------

std::vector<VerificationReport> check_chebyshev_first(const VerifyOptions& opts) {
  const std::string id = "chebyshev-kernel-integral-first";
  std::vector<std::pair<int, std::vector<double>>> blocks = {{1, {3.0, 5.0}},
                                                             {2, {5.0, 7.0}}};
  if (opts.ell) {
    if (*opts.ell < 1 || *opts.ell > 2)
      throw std::invalid_argument(id + ": ell must be 1 or 2");
    blocks = {blocks[*opts.ell - 1]};
  }
  double tol = resolve_tol(opts, id, 1e-6);

  std::vector<VerificationReport> out;
  for (auto& [ell, default_grid] : blocks) {
    const std::vector<double>& grid = opts.xs.empty() ? default_grid : opts.xs;
    for (double x : grid)
      if (!(x > ell))
        throw std::domain_error(id + ": needs x > ell, got " + format_double(x));

    Poly<Rational> p1 = p_polys(ell).first;
    Poly<Rational> head =
        Poly<Rational>::monomial(Rational(1), 1) * p1 -
        Poly<Rational>::monomial(Rational(1), 2 * ell - 1);
    std::vector<double> headd = dcoeffs(head);
    std::vector<double> p1d = dcoeffs(p1);
    std::vector<double> td = dcoeffs(chebyshev(ChebKind::first, 2 * ell));
    double sign = ell % 2 ? -1.0 : 1.0;

    Worst worst;
    std::vector<double> errs;
    for (double x : grid) {
      double w = x - ell;
      auto f = [&, w](double u) {
        double s2 = u * u + w * w;
        double v = w / std::sqrt(s2);
        double bracket = horner(headd, u) + u * horner(p1d, u) * cothm1(kPi * u);
        return bracket * horner(td, v) / std::pow(s2, ell);
      };
      QuadConfig cfg;
      if (ell >= 2) {
        cfg.tail_mode = TailMode::algebraic;
        cfg.tail_power = 3.0;
        cfg.tail_cutoff = 1e3;
      }
      auto q = integrate_semi_infinite(f, cfg);
      double rhs = sign * (std::log(w) - leibniz_rhs(2 * ell, x));
      worst.feed(q.value, rhs, "x = " + format_double(x));
      errs.push_back(q.error_estimate);
    }
    auto rep = make_numeric_report(
        id, {param("ell", ell), param("x", join_xs(grid))}, worst.lhs, worst.rhs,
        tol, std::move(errs),
        "first-kind kernel against the hyperbolic-cotangent bracket, polynomial "
        "head subtracted exactly; largest residual at " + worst.where);
    rep.residual = worst.resid;
    out.push_back(std::move(rep));
  }
  return out;
}

std::vector<VerificationReport> check_chebyshev_second(const VerifyOptions& opts) {
  const std::string id = "chebyshev-kernel-integral-second";
  std::vector<std::pair<int, std::vector<double>>> blocks = {{1, {3.0, 4.5}},
                                                             {2, {5.0, 6.0}}};
  if (opts.ell) {
    if (*opts.ell < 1 || *opts.ell > 2)
      throw std::invalid_argument(id + ": ell must be 1 or 2");
    blocks = {blocks[*opts.ell - 1]};
  }
  double tol = resolve_tol(opts, id, 1e-6);

  std::vector<VerificationReport> out;
  for (auto& [ell, default_grid] : blocks) {
    const std::vector<double>& grid = opts.xs.empty() ? default_grid : opts.xs;
    for (double x : grid)
      if (!(x > ell + 0.5))
        throw std::domain_error(id + ": needs x > ell + 1/2, got " + format_double(x));

    Poly<Rational> p2 = p_polys(ell).second;
    Poly<Rational> head = p2 - Poly<Rational>::monomial(Rational(1), 2 * ell);
    std::vector<double> headd = dcoeffs(head);
    std::vector<double> p2d = dcoeffs(p2);
    std::vector<double> ud = dcoeffs(chebyshev(ChebKind::second, 2 * ell));
    double sign = ell % 2 ? -1.0 : 1.0;

    Worst worst;
    double printed_resid = 0.0;
    std::vector<double> errs;
    for (double x : grid) {
      double w = x - ell - 0.5;
      auto f = [&, w](double u) {
        double s2 = u * u + w * w;
        double v = w / std::sqrt(s2);
        double bracket = horner(headd, u) + horner(p2d, u) * tanhm1(kPi * u);
        return bracket * horner(ud, v) * u / std::pow(s2, ell + 1);
      };
      QuadConfig cfg;
      cfg.tail_mode = TailMode::algebraic;
      cfg.tail_power = 3.0;
      cfg.tail_cutoff = 1e3;
      auto q = integrate_semi_infinite(f, cfg);
      double rhs = sign * (std::log(w) - leibniz_rhs(2 * ell + 1, x));
      double rhs_printed =
          sign * (std::log(w) + to_double(harmonic(2 * ell)) -
                  leibniz_derivative(2 * ell, x, ell + 0.5));
      worst.feed(q.value, rhs, "x = " + format_double(x));
      printed_resid = std::max(printed_resid, std::abs(q.value - rhs_printed));
      errs.push_back(q.error_estimate);
    }
    auto rep = make_numeric_report(
        id, {param("ell", ell), param("x", join_xs(grid))}, worst.lhs, worst.rhs,
        tol, std::move(errs),
        "second-kind kernel against the hyperbolic-tangent bracket; the digamma "
        "argument must be shifted by ell, not ell + 1/2: the half-shifted variant "
        "is rejected with max residual " + format_double(printed_resid) +
        "; largest residual at " + worst.where);
    rep.residual = worst.resid;
    out.push_back(std::move(rep));
  }
  return out;
}

// ---------------------------------------------------------------------------
// hurwitz-sum-first / -second
// ---------------------------------------------------------------------------

// Shared engine: order-L combination of Hurwitz-zeta log integrals with
// Stirling/binomial weights, equal to -(2 pi / L)(log(x - L/2) - closed form).
struct HurwitzSumResult {
  double lhs = 0.0;
  double rhs = 0.0;
  double rhs_half_shifted = 0.0;  // variant with the extra half shift inside psi
  bool consistency_ok = false;
  std::vector<double> errs;
};

HurwitzSumResult hurwitz_sum_eval(int order, double x) {
  HurwitzSumResult res;
  const double shift = order / 2.0;
  const double w = x - shift;

  struct Term {
    int m, j;
    double weight;
  };
  std::vector<Term> terms;
  for (int j = 0; j <= order - 1; ++j) {
    double sgn = ((order + 1 - j) % 2 == 0) ? 1.0 : -1.0;
    for (int m = j; m <= order - 1; ++m) {
      double wgt = sgn * to_double(Rational(binomial(m, j)) *
                                   Rational(stirling_first(order, m + 1)));
      if (wgt != 0.0) terms.push_back({m, j, wgt});
    }
  }

  for (const Term& t : terms) {
    auto f = [&t, order, shift, w](double u) {
      cplx zw(shift, u);
      cplx val = ipow(zw, t.m - t.j) * hurwitz_zeta(order + 1 - t.j, zw);
      return 2.0 * val.real() * std::log1p(u * u / (w * w));
    };
    QuadConfig cfg;
    cfg.tail_mode = TailMode::algebraic;
    cfg.tail_power = 2.0;
    cfg.tail_cutoff = 2e4;
    auto q = integrate_semi_infinite(f, cfg);
    res.lhs += t.weight * q.value;
    res.errs.push_back(std::abs(t.weight) * q.error_estimate);
  }

  res.rhs = -(2.0 * kPi / order) * (std::log(w) - leibniz_rhs(order, x));
  res.rhs_half_shifted =
      -(2.0 * kPi / order) * (std::log(w) + to_double(harmonic(order - 1)) -
                              leibniz_derivative(order - 1, x, order / 2.0));

  // integrand consistency at u = 1/2: the weighted zeta combination must equal
  // the multi-dimensional zeta route and reproduce the density pointwise
  {
    const double u = 0.5;
    cplx zw(shift, u);
    cplx s(0.0, 0.0);
    for (const Term& t : terms)
      s += t.weight * ipow(zw, t.m - t.j) * hurwitz_zeta(order + 1 - t.j, zw);
    cplx via_barnes = to_double(Rational(factorial(order - 1))) *
                      barnes_zeta(order, order + 1, zw);
    double rho_pt = (order / kPi) * s.real();
    res.consistency_ok = std::abs(s - via_barnes) < 1e-8 &&
                         std::abs(rho_pt - rho_closed_form(order).eval(u)) < 1e-8;
  }
  return res;
}

std::vector<VerificationReport> check_hurwitz_first(const VerifyOptions& opts) {
  const std::string id = "hurwitz-sum-first";
  std::vector<std::pair<int, double>> blocks = {{1, 3.0}, {2, 4.0}};
  if (opts.ell) {
    if (*opts.ell < 1 || *opts.ell > 2)
      throw std::invalid_argument(id + ": ell must be 1 or 2");
    blocks = {blocks[*opts.ell - 1]};
  }
  double tol = resolve_tol(opts, id, 1e-5);

  std::vector<VerificationReport> out;
  for (auto& [ell, default_x] : blocks) {
    std::vector<double> grid = opts.xs.empty() ? std::vector<double>{default_x}
                                               : opts.xs;
    int order = 2 * ell;
    for (double x : grid)
      if (!(x > ell))
        throw std::domain_error(id + ": needs x > ell, got " + format_double(x));
    Worst worst;
    std::vector<double> errs;
    bool consistent = true;
    for (double x : grid) {
      auto r = hurwitz_sum_eval(order, x);
      worst.feed(r.lhs, r.rhs, "x = " + format_double(x));
      errs.insert(errs.end(), r.errs.begin(), r.errs.end());
      consistent = consistent && r.consistency_ok;
    }
    auto rep = make_numeric_report(
        id, {param("ell", ell), param("x", join_xs(grid))}, worst.lhs, worst.rhs,
        tol, std::move(errs),
        std::string("Stirling/binomial-weighted Hurwitz zeta log integrals, even "
                    "order ") + std::to_string(order) +
            (consistent ? "; pointwise integrand cross-check against the "
                          "multi-dimensional zeta route passed at u = 1/2"
                        : "; INTEGRAND CROSS-CHECK FAILED at u = 1/2"));
    rep.residual = worst.resid;
    rep.passed = rep.passed && consistent;
    out.push_back(std::move(rep));
  }
  return out;
}

std::vector<VerificationReport> check_hurwitz_second(const VerifyOptions& opts) {
  const std::string id = "hurwitz-sum-second";
  if (opts.ell && *opts.ell != 1)
    throw std::invalid_argument(id + ": only ell = 1 is registered");
  double tol = resolve_tol(opts, id, 1e-5);
  const int ell = 1;
  const int order = 2 * ell + 1;
  std::vector<double> grid = opts.xs.empty() ? std::vector<double>{3.0} : opts.xs;
  for (double x : grid)
    if (!(x > ell + 0.5))
      throw std::domain_error(id + ": needs x > ell + 1/2, got " + format_double(x));

  Worst worst;
  std::vector<double> errs;
  bool consistent = true;
  double printed_resid = 0.0;
  for (double x : grid) {
    auto r = hurwitz_sum_eval(order, x);
    worst.feed(r.lhs, r.rhs, "x = " + format_double(x));
    printed_resid = std::max(printed_resid, std::abs(r.lhs - r.rhs_half_shifted));
    errs.insert(errs.end(), r.errs.begin(), r.errs.end());
    consistent = consistent && r.consistency_ok;
  }
  auto rep = make_numeric_report(
      id, {param("ell", ell), param("x", join_xs(grid))}, worst.lhs, worst.rhs, tol,
      std::move(errs),
      std::string("Stirling/binomial-weighted Hurwitz zeta log integrals, odd "
                  "order ") + std::to_string(order) +
          "; the digamma argument must be shifted by ell, not ell + 1/2: the "
          "half-shifted variant is rejected with max residual " +
          format_double(printed_resid) +
          (consistent ? "; pointwise integrand cross-check against the "
                        "multi-dimensional zeta route passed at u = 1/2"
                      : "; INTEGRAND CROSS-CHECK FAILED at u = 1/2"));
  rep.residual = worst.resid;
  rep.passed = rep.passed && consistent;
  return {rep};
}

// ---------------------------------------------------------------------------
// cosine-cosh-integrals
// ---------------------------------------------------------------------------

std::vector<VerificationReport> check_cosine_cosh(const VerifyOptions& opts) {
  const std::string id = "cosine-cosh-integrals";
  double tol = resolve_tol(opts, id, 1e-9);

  Worst worst;
  std::vector<double> errs;
  const double cases[][2] = {{1.0, 1.0}, {2.0, 0.5}, {0.3, 2.0}};
  for (auto& ab : cases) {
    double a = ab[0], beta = ab[1];
    QuadConfig cfg;
    cfg.tail_mode = TailMode::oscillatory;
    cfg.tail_frequency = a;
    auto q = integrate_semi_infinite(
        [a, beta](double u) { return std::cos(a * u) * sech_sq(beta * u); }, cfg);
    double arg = kPi * a / (2.0 * beta);
    double rhs = (kPi * a / (2.0 * beta * beta)) / std::sinh(arg);
    worst.feed(q.value, rhs,
               "(a, beta) = (" + format_double(a) + ", " + format_double(beta) + ")");
    errs.push_back(q.error_estimate);
  }

  const HyperExpr& rho = rho_closed_form(1);
  for (double xi : {0.0, 0.5, 1.0, 2.0}) {
    QuadConfig cfg;
    cfg.tail_mode = TailMode::oscillatory;
    cfg.tail_frequency = 2.0 * kPi * xi;
    auto q = integrate_semi_infinite(
        [&rho, xi](double u) { return rho.eval(u) * std::cos(2.0 * kPi * xi * u); },
        cfg);
    double rhs = xi == 0.0 ? 1.0 : kPi * xi / std::sinh(kPi * xi);
    worst.feed(2.0 * q.value, rhs, "xi = " + format_double(xi));
    errs.push_back(2.0 * q.error_estimate);
  }

  auto rep = make_numeric_report(
      id, {param("kernel", "(a, beta) in (1, 1), (2, 1/2), (3/10, 2)"),
           param("xi", "0, 1/2, 1, 2")},
      worst.lhs, worst.rhs, tol, std::move(errs),
      "cosine transforms of squared-secant kernels and of the base density "
      "against their cosecant closed forms; largest residual at " + worst.where);
  rep.residual = worst.resid;
  return {rep};
}

// ---------------------------------------------------------------------------
// density-normalization / density-cross-validation
// ---------------------------------------------------------------------------

std::vector<VerificationReport> check_density_norm(const VerifyOptions& opts) {
  const std::string id = "density-normalization";
  std::vector<int> ells;
  if (opts.ell) {
    if (*opts.ell < 1 || *opts.ell > 8)
      throw std::invalid_argument(id + ": ell must be in 1..8");
    ells = {*opts.ell};
  } else {
    ells = {1, 2, 3, 4, 5, 6};
  }
  double tol = resolve_tol(opts, id, 1e-9);

  Worst worst;
  std::vector<double> errs;
  std::string ell_list;
  for (int ell : ells) {
    if (!ell_list.empty()) ell_list += ", ";
    ell_list += std::to_string(ell);
    const HyperExpr& rho = rho_closed_form(ell);
    QuadConfig cfg;
    cfg.abs_tol = 1e-12;
    cfg.rel_tol = 1e-12;
    auto q = integrate_semi_infinite([&rho](double u) { return rho.eval(u); }, cfg);
    worst.feed(2.0 * q.value, 1.0, "ell = " + std::to_string(ell));
    errs.push_back(2.0 * q.error_estimate);
  }
  auto rep = make_numeric_report(
      id, {param("ell", ell_list)}, worst.lhs, worst.rhs, tol, std::move(errs),
      "total mass of each closed-form density; largest residual at " + worst.where);
  rep.residual = worst.resid;
  return {rep};
}

std::vector<VerificationReport> check_density_cross(const VerifyOptions& opts) {
  const std::string id = "density-cross-validation";
  std::vector<int> ells;
  if (opts.ell) {
    if (*opts.ell < 1 || *opts.ell > 8)
      throw std::invalid_argument(id + ": ell must be in 1..8");
    ells = {*opts.ell};
  } else {
    ells = {1, 2, 3, 4, 5, 6};
  }
  std::vector<double> xs =
      opts.xs.empty() ? std::vector<double>{0.0, 0.25, 0.5, 1.0, 2.0} : opts.xs;
  double tol = resolve_tol(opts, id, 1e-7);

  Worst worst;
  std::vector<double> errs;
  std::string ell_list;
  for (int ell : ells) {
    if (!ell_list.empty()) ell_list += ", ";
    ell_list += std::to_string(ell);
    for (double x : xs) {
      double ref = density(ell, x, DensityMethod::closed_form);
      auto four = fourier_density(ell, x);
      worst.feed(four.value, ref,
                 "fourier at (ell, x) = (" + std::to_string(ell) + ", " +
                     format_double(x) + ")");
      errs.push_back(four.error_estimate);
      if (ell >= 3)
        worst.feed(density(ell, x, DensityMethod::recurrence), ref,
                   "recurrence at (ell, x) = (" + std::to_string(ell) + ", " +
                       format_double(x) + ")");
      if (ell <= 3)
        worst.feed(density(ell, x, DensityMethod::barnes_zeta), ref,
                   "zeta route at (ell, x) = (" + std::to_string(ell) + ", " +
                       format_double(x) + ")");
      if (ell == 2 || ell == 3)
        worst.feed(density(ell, x, DensityMethod::convolution_oracle), ref,
                   "convolution at (ell, x) = (" + std::to_string(ell) + ", " +
                       format_double(x) + ")");
    }
  }
  auto rep = make_numeric_report(
      id, {param("ell", ell_list), param("x", join_xs(xs))}, worst.lhs, worst.rhs,
      tol, std::move(errs),
      "closed form vs cosine transform, recurrence lift, zeta route, and direct "
      "convolution where each applies; largest deviation from the " + worst.where);
  rep.residual = worst.resid;
  return {rep};
}

// ---------------------------------------------------------------------------
// characteristic-function-relation
// ---------------------------------------------------------------------------

std::vector<VerificationReport> check_char_fn(const VerifyOptions& opts) {
  const std::string id = "characteristic-function-relation";
  std::vector<std::pair<int, double>> points;
  if (opts.ell) {
    if (*opts.ell < 1 || *opts.ell > 4)
      throw std::invalid_argument(id + ": ell must be in 1..4");
    std::vector<double> xs = opts.xs.empty() ? std::vector<double>{0.0, 0.5} : opts.xs;
    for (double x : xs) points.emplace_back(*opts.ell, x);
  } else if (!opts.xs.empty()) {
    for (int ell : {1, 2, 3, 4})
      for (double x : opts.xs) points.emplace_back(ell, x);
  } else {
    points = {{1, 0.0}, {2, 1.0}, {3, 0.5}, {4, 0.25}};
  }
  double tol = resolve_tol(opts, id, 1e-9);

  Worst worst;
  std::vector<double> errs;
  std::string grid_desc;
  for (auto& [ell, x] : points) {
    if (!grid_desc.empty()) grid_desc += ", ";
    grid_desc += "(" + std::to_string(ell) + ", " + format_double(x) + ")";
    auto sub = pitman_yor_relation_check(ell, x);
    worst.feed(sub.lhs.number, sub.rhs.number,
               "(ell, x) = (" + std::to_string(ell) + ", " + format_double(x) + ")");
    errs.insert(errs.end(), sub.quadrature_errors.begin(),
                sub.quadrature_errors.end());
  }
  auto rep = make_numeric_report(
      id, {param("grid", grid_desc)}, worst.lhs, worst.rhs, tol, std::move(errs),
      "closed form vs the cosine transform of the scaled characteristic "
      "function; largest residual at " + worst.where);
  rep.residual = worst.resid;
  return {rep};
}

// ---------------------------------------------------------------------------
// registry
// ---------------------------------------------------------------------------

struct IdentityCheck {
  const char* id;
  const char* description;
  std::vector<VerificationReport> (*fn)(const VerifyOptions&);
};

const std::vector<IdentityCheck>& registry() {
  static const std::vector<IdentityCheck> checks = {
      {"characteristic-function-relation",
       "closed-form densities match the cosine transform of (y/sinh y)^ell",
       check_char_fn},
      {"chebyshev-kernel-integral-first",
       "first-kind Chebyshev kernel integral equals its digamma closed form",
       check_chebyshev_first},
      {"chebyshev-kernel-integral-second",
       "second-kind Chebyshev kernel integral equals its digamma closed form",
       check_chebyshev_second},
      {"cosine-cosh-integrals",
       "cosine/squared-secant integrals and the base characteristic function",
       check_cosine_cosh},
      {"coth-log-integral",
       "log-kernel integral against cosh^-2 equals a digamma/trigamma form",
       check_coth_log},
      {"density-cross-validation",
       "all density evaluation routes agree on a shared grid", check_density_cross},
      {"density-difference-equation",
       "log moments satisfy a second-order differential-difference relation",
       check_dde},
      {"density-normalization", "each density integrates to one",
       check_density_norm},
      {"digamma-difference-lemma",
       "forward differences of binomial-weighted digamma telescope", check_delta_lemma},
      {"digamma-log-integrals",
       "unit-average and inversion integral representations of digamma",
       check_digamma_log},
      {"hurwitz-sum-first",
       "weighted Hurwitz zeta log integrals, even order", check_hurwitz_first},
      {"hurwitz-sum-second",
       "weighted Hurwitz zeta log integrals, odd order", check_hurwitz_second},
      {"log-derivative-chebyshev-lemma",
       "derivatives of log(1 + b u^2) produce Chebyshev kernels exactly",
       check_log_derivative},
      {"log-moment-closed-form",
       "half-line log moments of the densities in closed digamma form",
       check_log_moment},
      {"modified-norlund-genfun",
       "generating function tail scales at the expected order", check_genfun},
      {"umbral-inversion", "unit averaging inverts the Bernoulli-polynomial map",
       check_umbral},
  };
  return checks;
}

const IdentityCheck& find_check(const std::string& id) {
  for (const auto& c : registry())
    if (id == c.id) return c;
  throw std::invalid_argument("unknown identity id: " + id);
}

}  // namespace

const std::vector<std::string>& verifier_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& c : registry()) v.push_back(c.id);
    return v;
  }();
  return ids;
}

const std::string& verifier_description(const std::string& id) {
  static std::map<std::string, std::string> cache = [] {
    std::map<std::string, std::string> m;
    for (const auto& c : registry()) m[c.id] = c.description;
    return m;
  }();
  auto it = cache.find(id);
  if (it == cache.end()) throw std::invalid_argument("unknown identity id: " + id);
  return it->second;
}

std::vector<VerificationReport> run_verifier(const std::string& id,
                                             const VerifyOptions& opts) {
  return find_check(id).fn(opts);
}

std::vector<VerificationReport> run_suite(const std::vector<std::string>& ids,
                                          const VerifyOptions& opts) {
  std::vector<const IdentityCheck*> selected;
  if (ids.empty()) {
    for (const auto& c : registry()) selected.push_back(&c);
  } else {
    for (const auto& id : ids) selected.push_back(&find_check(id));
  }
  std::vector<VerificationReport> reports;
  for (const IdentityCheck* c : selected) {
    auto part = c->fn(opts);
    reports.insert(reports.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
  }
  sort_reports(reports);
  return reports;
}

}  // namespace norlund
