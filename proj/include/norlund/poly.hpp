#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace norlund {

// Dense univariate polynomial over a commutative coefficient ring T.
// Coefficients are stored low degree first. Invariant: the trailing (highest
// degree) coefficient is nonzero unless the polynomial is zero, in which case
// the storage is empty. T needs T(int), +, -, *, ==, and / for the few places
// that divide by integer-valued ring elements (antiderivative, shifts).
template <class T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly monomial(const T& coef, std::size_t degree) {
    if (coef == T(0)) return Poly();
    std::vector<T> c(degree + 1, T(0));
    c[degree] = coef;
    return Poly(std::move(c));
  }
  static Poly constant(const T& coef) { return monomial(coef, 0); }
  static Poly identity() { return monomial(T(1), 1); }  // the variable itself

  bool is_zero() const { return c_.empty(); }
  // Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }
  const std::vector<T>& coeffs() const { return c_; }

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly operator-() const {
    std::vector<T> c = c_;
    for (auto& v : c) v = T(0) - v;
    return Poly(std::move(c));
  }

  Poly operator+(const Poly& o) const {
    std::vector<T> c(std::max(c_.size(), o.c_.size()), T(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] = c[i] + o.c_[i];
    return Poly(std::move(c));
  }

  Poly operator-(const Poly& o) const { return *this + (-o); }

  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<T> c(c_.size() + o.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] = c[i + j] + c_[i] * o.c_[j];
    return Poly(std::move(c));
  }

  Poly scaled(const T& f) const {
    std::vector<T> c = c_;
    for (auto& v : c) v = v * f;
    return Poly(std::move(c));
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<T> c(c_.size() - 1, T(0));
    for (std::size_t k = 1; k < c_.size(); ++k) c[k - 1] = c_[k] * T(static_cast<int>(k));
    return Poly(std::move(c));
  }

  // Antiderivative with zero constant term. Divides by integer-valued ring
  // elements, so T must support that exactly (rationals and rational multiples
  // of pi powers both do).
  Poly antiderivative() const {
    if (is_zero()) return Poly();
    std::vector<T> c(c_.size() + 1, T(0));
    for (std::size_t k = 0; k < c_.size(); ++k) c[k + 1] = c_[k] / T(static_cast<int>(k + 1));
    return Poly(std::move(c));
  }

  // p(q(x)) by Horner over Poly multiplication.
  Poly compose(const Poly& q) const {
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + constant(*it);
    return acc;
  }

  // p(x + a)
  Poly shifted(const T& a) const {
    std::vector<T> lin = {a, T(1)};
    return compose(Poly(std::move(lin)));
  }

  // Horner evaluation in a ring X reachable from T via lift(T) -> X.
  template <class X, class F>
  X eval_as(const X& x, F&& lift) const {
    X acc = lift(T(0));
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + lift(*it);
    return acc;
  }

  T operator()(const T& x) const {
    return eval_as(x, [](const T& v) { return v; });
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
  }
  std::vector<T> c_;
};

}  // namespace norlund
