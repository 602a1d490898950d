#include "norlund/hyper.hpp"

#include "norlund/exact.hpp"
#include "norlund/special.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace norlund {

namespace {

constexpr int kSeriesOrder = 96;  // highest s-power kept around s = 0
constexpr int kDeltaOrder = 56;   // highest delta-power kept for |s| >= 1
constexpr double kRegionSwitch = 1.0;  // |s| threshold between the two forms

using RSeries = std::vector<Rational>;  // dense power series, index = s-power

RSeries mul_trunc(const RSeries& a, const RSeries& b, int len) {
  RSeries c(len, Rational(0));
  for (int i = 0; i < static_cast<int>(a.size()) && i < len; ++i) {
    if (a[i] == 0) continue;
    int jmax = std::min<int>(b.size(), len - i);
    for (int j = 0; j < jmax; ++j) {
      if (b[j] == 0) continue;
      c[i + j] += a[i] * b[j];
    }
  }
  return c;
}

// 1/a as a power series; requires a[0] != 0.
RSeries recip_trunc(const RSeries& a, int len) {
  RSeries r(len, Rational(0));
  r[0] = Rational(1) / a[0];
  for (int n = 1; n < len; ++n) {
    Rational s(0);
    int kmax = std::min<int>(a.size() - 1, n);
    for (int k = 1; k <= kmax; ++k) s += a[k] * r[n - k];
    r[n] = -s / a[0];
  }
  return r;
}

// tanh(s)/s = sum_{m>=1} 2^{2m} (2^{2m} - 1) B_{2m} / (2m)! s^{2m-2}
RSeries tanh_over_s_series(int len) {
  RSeries u(len, Rational(0));
  for (int m = 1; 2 * m - 2 < len; ++m) {
    Int p = Int(1) << (2 * m);  // 2^{2m}
    u[2 * m - 2] = Rational(p * (p - 1)) * bernoulli_number(2 * m) / Rational(factorial(2 * m));
  }
  return u;
}

double horner(const std::vector<double>& c, double x) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace

struct HyperExpr::Baked {
  // Laurent expansion around s = 0, exact-collected then rounded:
  // powers lo..-1 in neg (index i -> power lo + i), powers 0..kSeriesOrder in pos.
  int lo = 0;
  std::vector<double> neg, pos;
  bool pole = false;  // an exact nonzero coefficient at a negative power
  // delta-expansion coefficients: tail[j] holds the dense s-polynomial A_j
  // for sign(s) = +1 / -1 respectively.
  std::vector<std::vector<double>> tail_pos, tail_neg;
};

HyperExpr::HyperExpr(std::map<int, SPoly> terms) : terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
}

HyperExpr HyperExpr::operator+(const HyperExpr& o) const {
  std::map<int, SPoly> t = terms_;
  for (const auto& [k, c] : o.terms_) {
    auto it = t.find(k);
    if (it == t.end()) {
      t.emplace(k, c);
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) t.erase(it);
    }
  }
  return HyperExpr(std::move(t));
}

HyperExpr HyperExpr::operator-(const HyperExpr& o) const {
  return *this + o.scaled(PiScalar(-1));
}

HyperExpr HyperExpr::scaled(const PiScalar& f) const {
  std::map<int, SPoly> t;
  if (!f.is_zero())
    for (const auto& [k, c] : terms_) t.emplace(k, c.scaled(f));
  return HyperExpr(std::move(t));
}

HyperExpr HyperExpr::differentiate(int order) const {
  if (order < 0) throw std::domain_error("HyperExpr::differentiate: order must be >= 0");
  HyperExpr cur = *this;
  const PiScalar pi1 = PiScalar::pi_power(1);
  for (int step = 0; step < order; ++step) {
    std::map<int, SPoly> t;
    auto add = [&t](int k, const SPoly& p) {
      if (p.is_zero()) return;
      auto it = t.find(k);
      if (it == t.end()) {
        t.emplace(k, p);
      } else {
        it->second = it->second + p;
        if (it->second.is_zero()) t.erase(it);
      }
    };
    for (const auto& [k, c] : cur.terms_) {
      // d/dx [c(s) t^k] = pi c'(s) t^k + pi k c(s) (t^{k-1} - t^{k+1})
      add(k, c.derivative().scaled(pi1));
      if (k != 0) {
        SPoly kc = c.scaled(PiScalar::pi_power(1, Rational(k)));
        add(k - 1, kc);
        add(k + 1, -kc);
      }
    }
    cur = HyperExpr(std::move(t));
  }
  return cur;
}

HyperExpr HyperExpr::mul_x() const {
  // x = s / pi
  SPoly x_factor = SPoly::monomial(PiScalar::pi_power(-1), 1);
  std::map<int, SPoly> t;
  for (const auto& [k, c] : terms_) t.emplace(k, c * x_factor);
  return HyperExpr(std::move(t));
}

std::shared_ptr<const HyperExpr::Baked> HyperExpr::bake() const {
  static std::mutex m;
  std::scoped_lock lk(m);
  if (baked_) return baked_;

  auto b = std::make_shared<Baked>();
  if (terms_.empty()) {
    b->pos.assign(1, 0.0);
    b->tail_pos.assign(1, {0.0});
    b->tail_neg.assign(1, {0.0});
    baked_ = b;
    return baked_;
  }

  const int kmin = terms_.begin()->first;
  const int kmax = terms_.rbegin()->first;
  int maxdeg = 0;
  for (const auto& [k, c] : terms_) maxdeg = std::max(maxdeg, c.degree());

  // --- power series around s = 0, collected exactly over Q[pi] ---
  const int lo = std::min(kmin, 0);
  const int work = kSeriesOrder - lo + maxdeg + 2;
  RSeries u = tanh_over_s_series(work);
  std::map<int, RSeries> upow;
  upow[0] = RSeries(work, Rational(0));
  upow[0][0] = 1;
  for (int k = 1; k <= std::max(kmax, 0); ++k) upow[k] = mul_trunc(upow[k - 1], u, work);
  if (kmin < 0) {
    RSeries r = recip_trunc(u, work);
    for (int k = -1; k >= kmin; --k) upow[k] = mul_trunc(upow[k + 1], r, work);
  }
  std::vector<PiScalar> lau(kSeriesOrder - lo + 1);  // index i -> power lo + i
  for (const auto& [k, c] : terms_) {
    const RSeries& pu = upow[k];
    for (int d = 0; d <= c.degree(); ++d) {
      PiScalar gamma = c.coeff(d);
      if (gamma.is_zero()) continue;
      for (int i = 0; i < work; ++i) {
        if (pu[i] == 0) continue;
        int power = k + d + i;  // t^k = s^k u^k, c-term adds s^d
        if (power < lo || power > kSeriesOrder) continue;
        lau[power - lo] = lau[power - lo] + gamma * PiScalar(pu[i]);
      }
    }
  }
  b->lo = lo;
  b->neg.assign(-lo, 0.0);
  b->pos.assign(kSeriesOrder + 1, 0.0);
  for (int i = 0; i < static_cast<int>(lau.size()); ++i) {
    int power = lo + i;
    double v = lau[i].to_double();
    if (power < 0) {
      if (!lau[i].is_zero()) b->pole = true;
      b->neg[i] = v;
    } else {
      b->pos[power] = v;
    }
  }

  // --- delta expansion for |s| >= 1: t = sigma (1 - delta) ---
  for (int sig = 0; sig < 2; ++sig) {
    const int sigma = sig == 0 ? 1 : -1;
    std::vector<SPoly> acc(kDeltaOrder + 1);
    for (const auto& [k, c] : terms_) {
      const Rational sgn((k % 2 == 0) ? 1 : sigma);
      for (int j = 0; j <= kDeltaOrder; ++j) {
        // (1 - delta)^k = sum_j w_{k,j} delta^j
        Rational w;
        if (k >= 0) {
          if (j > k) break;
          w = Rational(binomial(k, j));
          if (j % 2 != 0) w = -w;
        } else {
          w = Rational(binomial(-k - 1 + j, j));
        }
        acc[j] = acc[j] + c.scaled(PiScalar(sgn * w));
      }
    }
    auto& tail = sig == 0 ? b->tail_pos : b->tail_neg;
    tail.resize(kDeltaOrder + 1);
    for (int j = 0; j <= kDeltaOrder; ++j) {
      std::vector<double> coeffs(std::max(acc[j].degree(), 0) + 1, 0.0);
      for (int d = 0; d <= acc[j].degree(); ++d) coeffs[d] = acc[j].coeff(d).to_double();
      tail[j] = std::move(coeffs);
    }
  }

  baked_ = b;
  return baked_;
}

double HyperExpr::eval(double x) const {
  auto b = bake();
  const double s = kPi * x;
  const double as = std::abs(s);
  if (as < kRegionSwitch) {
    double acc = horner(b->pos, s);
    if (s == 0.0) {
      if (b->pole) throw std::domain_error("HyperExpr::eval: pole at x = 0");
      return acc;
    }
    // negative powers: Horner in 1/s, neg[i] multiplies s^{lo+i}
    const double inv = 1.0 / s;
    double negacc = 0.0;
    for (std::size_t i = 0; i < b->neg.size(); ++i) negacc = (negacc + b->neg[i]) * inv;
    return acc + negacc;
  }
  const auto& tail = s >= 0.0 ? b->tail_pos : b->tail_neg;
  const double e2 = std::exp(-2.0 * as);
  const double delta = 2.0 * e2 / (1.0 + e2);
  double acc = 0.0;
  for (int j = static_cast<int>(tail.size()) - 1; j >= 0; --j)
    acc = acc * delta + horner(tail[j], s);
  return acc;
}

std::string HyperExpr::dump() const {
  std::string out;
  for (const auto& [k, c] : terms_) {
    if (!out.empty()) out += "\n";
    out += "t^" + std::to_string(k) + " * (";
    std::string body;
    for (int d = 0; d <= c.degree(); ++d) {
      const PiScalar& g = c.coeff(d);
      for (const auto& [m, r] : g.terms()) {
        if (!body.empty()) body += " + ";
        body += to_string(r) + "*pi^" + std::to_string(m) + "*s^" + std::to_string(d);
      }
    }
    out += body + ")";
  }
  return out;
}

namespace {

HyperExpr build_rho_closed(int ell) {
  if (ell == 1) {
    // (pi/2) sech^2(s) = (pi/2)(1 - t^2)
    PiScalar half_pi = PiScalar::pi_power(1, Rational(1, 2));
    return HyperExpr({{0, SPoly::constant(half_pi)},
                      {2, SPoly::constant(-half_pi)}});
  }
  if (ell == 2) {
    // pi (s/t^3 - 1/t^2 - s/t + 1)
    PiScalar pi1 = PiScalar::pi_power(1);
    return HyperExpr({{-3, SPoly::monomial(pi1, 1)},
                      {-2, SPoly::constant(-pi1)},
                      {-1, SPoly::monomial(-pi1, 1)},
                      {0, SPoly::constant(pi1)}});
  }
  if (ell % 2 == 0) {
    const int m = ell / 2;
    HyperExpr base({{-1, airault_q(2 * m - 1)}});
    return base.differentiate(2 * m)
        .scaled(PiScalar::pi_power(1 - 2 * m, Rational(1, Int(2) * factorial(2 * m - 1))));
  }
  const int m = (ell - 1) / 2;
  HyperExpr base({{1, airault_q(2 * m)}});
  return base.differentiate(2 * m + 1)
      .scaled(PiScalar::pi_power(-2 * m, Rational(1, Int(2) * factorial(2 * m))));
}

}  // namespace

const HyperExpr& rho_closed_form(int ell, int ell_max) {
  if (ell < 1) throw std::domain_error("rho_closed_form: requires ell >= 1");
  if (ell > ell_max)
    throw std::domain_error("rho_closed_form: ell = " + std::to_string(ell) +
                            " exceeds ell_max = " + std::to_string(ell_max));
  static std::mutex m;
  static std::map<int, HyperExpr> cache;
  std::scoped_lock lk(m);
  auto it = cache.find(ell);
  if (it == cache.end()) it = cache.emplace(ell, build_rho_closed(ell)).first;
  return it->second;
}

const HyperExpr& rho_from_recurrence(int ell, int ell_max) {
  if (ell < 3) throw std::domain_error("rho_from_recurrence: requires ell >= 3");
  if (ell > ell_max)
    throw std::domain_error("rho_from_recurrence: ell = " + std::to_string(ell) +
                            " exceeds ell_max = " + std::to_string(ell_max));
  static std::mutex m;
  static std::map<int, HyperExpr> cache;
  std::scoped_lock lk(m);
  auto it = cache.find(ell);
  if (it == cache.end()) {
    const int lp = ell - 2;
    const HyperExpr& base = rho_closed_form(lp, ell_max);
    HyperExpr d1 = base.differentiate(1);
    HyperExpr d2 = base.differentiate(2);
    // lp (lp+1) rho_{lp+2} = (x^2 + lp^2/4) rho'' + 2 (lp+2) x rho'
    //                        + (lp+1)(lp+2) rho
    HyperExpr sum = d2.mul_x().mul_x() + d2.scaled(PiScalar(Rational(lp * lp, 4))) +
                    d1.mul_x().scaled(PiScalar(2 * (lp + 2))) +
                    base.scaled(PiScalar((lp + 1) * (lp + 2)));
    it = cache.emplace(ell, sum.scaled(PiScalar(Rational(1, lp * (lp + 1))))).first;
  }
  return it->second;
}

}  // namespace norlund
