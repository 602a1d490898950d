#pragma once

#include "norlund/pi_scalar.hpp"
#include "norlund/poly.hpp"

#include <map>
#include <memory>
#include <string>

namespace norlund {

using SPoly = Poly<PiScalar>;  // polynomial in s = pi * x over Q[pi, 1/pi]

// Exact expression sum_k c_k(s) t^k with t = tanh(s), s = pi x: the carrier
// for the convolution densities and their derivatives. Closed under d/dx.
// Objects are immutable once built; eval() is thread-safe, construction is
// not synchronized.
//
// Numeric evaluation never touches the raw Laurent form directly: near the
// origin the negative t-powers blow up individually, and for large |s| the
// polynomial-in-s coefficients grow while the value decays like exp(-2|s|),
// so a naive sum loses every significant digit. Instead eval() expands the
// whole expression exactly (over Q[pi]) into
//   - a power series in s around 0 (used for |s| < 1), and
//   - a series in delta = 2 e^{-2|s|}/(1 + e^{-2|s|}) with polynomial-in-s
//     coefficients, from t = sign(s) (1 - delta) (used for |s| >= 1),
// where all cancellation happens in exact arithmetic before rounding.
class HyperExpr {
 public:
  HyperExpr() = default;
  explicit HyperExpr(std::map<int, SPoly> terms);
  HyperExpr(const HyperExpr& o) : terms_(o.terms_) {}
  HyperExpr(HyperExpr&&) = default;
  HyperExpr& operator=(const HyperExpr& o) {
    terms_ = o.terms_;
    baked_.reset();
    return *this;
  }
  HyperExpr& operator=(HyperExpr&&) = default;

  const std::map<int, SPoly>& terms() const { return terms_; }
  bool operator==(const HyperExpr& o) const { return terms_ == o.terms_; }
  bool operator!=(const HyperExpr& o) const { return !(*this == o); }

  HyperExpr operator+(const HyperExpr& o) const;
  HyperExpr operator-(const HyperExpr& o) const;
  HyperExpr scaled(const PiScalar& f) const;
  // d^order/dx^order, via ds/dx = pi and dt/dx = pi (1 - t^2)
  HyperExpr differentiate(int order = 1) const;
  // multiply by x = s / pi
  HyperExpr mul_x() const;

  // Numeric value at x. Throws std::domain_error at x = 0 if the expression
  // has a genuine pole there.
  double eval(double x) const;

  // Canonical text form, one line per t-power in ascending order:
  //   t^<k> * (<c1> + <c2> + ...)
  // with monomials p/q*pi^<m>*s^<d> ordered by ascending s-degree then
  // ascending pi-power. Stable; golden tests rely on it.
  std::string dump() const;

 private:
  struct Baked;
  std::shared_ptr<const Baked> bake() const;
  std::map<int, SPoly> terms_;
  mutable std::shared_ptr<const Baked> baked_;
};

// Exact density of the ell-fold convolution via the closed-form construction:
// hard-coded expressions for ell = 1, 2, and the differentiated product form
//   rho_{2m}   = pi^{1-2m} / (2 (2m-1)!) d^{2m}   [ q_{2m-1}(s) / t ]
//   rho_{2m+1} = pi^{-2m}  / (2 (2m)!)  d^{2m+1} [ q_{2m}(s) t ]
// for ell >= 3. Cached; the reference is valid for the process lifetime.
const HyperExpr& rho_closed_form(int ell, int ell_max = 8);

// Same density obtained by the second-order ascent recurrence from the
// closed form two orders down; defined for ell >= 3. Cached.
const HyperExpr& rho_from_recurrence(int ell, int ell_max = 8);

}  // namespace norlund
