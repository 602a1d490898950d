#pragma once

#include "norlund/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace norlund {

// Exact element of the Laurent ring Q[pi, 1/pi]: a map from pi-power to a
// nonzero rational coefficient. Zero is the empty map.
class PiScalar {
 public:
  PiScalar() = default;
  PiScalar(int v) {  // implicit: ring literal, needed by Poly<PiScalar>
    if (v != 0) terms_[0] = Rational(v);
  }
  PiScalar(const Rational& r) {
    if (r != 0) terms_[0] = r;
  }

  static PiScalar pi_power(int k, const Rational& coef = Rational(1)) {
    PiScalar s;
    if (coef != 0) s.terms_[k] = coef;
    return s;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<int, Rational>& terms() const { return terms_; }

  bool operator==(const PiScalar& o) const { return terms_ == o.terms_; }
  bool operator!=(const PiScalar& o) const { return !(*this == o); }

  PiScalar operator-() const {
    PiScalar r;
    for (const auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
  }

  PiScalar operator+(const PiScalar& o) const {
    PiScalar r = *this;
    for (const auto& [k, c] : o.terms_) {
      auto it = r.terms_.find(k);
      if (it == r.terms_.end()) {
        r.terms_[k] = c;
      } else {
        it->second += c;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
    return r;
  }

  PiScalar operator-(const PiScalar& o) const { return *this + (-o); }

  PiScalar operator*(const PiScalar& o) const {
    PiScalar r;
    for (const auto& [k1, c1] : terms_)
      for (const auto& [k2, c2] : o.terms_) {
        Rational c = c1 * c2;
        auto it = r.terms_.find(k1 + k2);
        if (it == r.terms_.end()) {
          if (c != 0) r.terms_[k1 + k2] = c;
        } else {
          it->second += c;
          if (it->second == 0) r.terms_.erase(it);
        }
      }
    return r;
  }

  // Division is only defined by a single-term divisor (a rational multiple of
  // one pi power); that is all the algebra here ever needs.
  PiScalar operator/(const PiScalar& o) const {
    if (o.terms_.size() != 1)
      throw std::domain_error("PiScalar: division only by a single pi-power monomial");
    const auto& [dk, dc] = *o.terms_.begin();
    PiScalar r;
    for (const auto& [k, c] : terms_) r.terms_[k - dk] = c / dc;
    return r;
  }

  double to_double() const {
    static const double kPi = 3.14159265358979323846264338327950288;
    double acc = 0.0;
    for (const auto& [k, c] : terms_) {
      double p = 1.0;
      int a = k < 0 ? -k : k;
      for (int i = 0; i < a; ++i) p *= kPi;
      if (k < 0) p = 1.0 / p;
      acc += norlund::to_double(c) * p;
    }
    return acc;
  }

  // Canonical text: terms by ascending pi-power, "p/q*pi^k", joined " + ".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += norlund::to_string(c) + "*pi^" + std::to_string(k);
    }
    return out;
  }

 private:
  std::map<int, Rational> terms_;
};

}  // namespace norlund
