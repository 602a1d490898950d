#include "norlund/exact.hpp"

#include <mutex>
#include <stdexcept>

namespace norlund {

std::string to_string(const Rational& r) {
  Int num = numerator(r);
  Int den = denominator(r);
  std::string s = num.str();
  if (den != 1) s += "/" + den.str();
  return s;
}

Rational rational_from_string(const std::string& text) {
  auto parse_int = [](const std::string& part) {
    if (part.empty()) throw std::invalid_argument("rational_from_string: empty component");
    std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (start == part.size()) throw std::invalid_argument("rational_from_string: sign only");
    for (std::size_t i = start; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9')
        throw std::invalid_argument("rational_from_string: bad digit in '" + part + "'");
    return Int(part);
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  Int num = parse_int(text.substr(0, slash));
  Int den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("rational_from_string: zero denominator");
  if (den < 0) {  // the two-argument constructor requires a positive denominator
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

Int binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

Int factorial(unsigned n) {
  Int r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

namespace {

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

// Shared Bernoulli cache, extended on demand.
std::vector<Rational>& bernoulli_cache_locked(int n_max) {
  static std::vector<Rational> cache{Rational(1)};
  int old = static_cast<int>(cache.size());
  for (int n = old; n <= n_max; ++n) {
    // sum_{k=0}^{n} C(n+1,k) B_k = 0  =>  B_n = -(1/(n+1)) sum_{k<n} C(n+1,k) B_k
    Rational s(0);
    for (int k = 0; k < n; ++k) s += Rational(binomial(n + 1, k)) * cache[k];
    cache.push_back(-s / Rational(n + 1));
  }
  return cache;
}

}  // namespace

std::vector<Rational> bernoulli_numbers(int n_max) {
  if (n_max < 0) throw std::domain_error("bernoulli_numbers: n_max must be >= 0");
  std::scoped_lock lk(cache_mutex());
  auto& cache = bernoulli_cache_locked(n_max);
  return std::vector<Rational>(cache.begin(), cache.begin() + n_max + 1);
}

Rational bernoulli_number(int n) {
  if (n < 0) throw std::domain_error("bernoulli_number: n must be >= 0");
  std::scoped_lock lk(cache_mutex());
  return bernoulli_cache_locked(n)[n];
}

Poly<Rational> bernoulli_poly(int n) {
  if (n < 0) throw std::domain_error("bernoulli_poly: n must be >= 0");
  auto bern = bernoulli_numbers(n);
  std::vector<Rational> c(n + 1, Rational(0));
  // B_n(x) = sum_k C(n,k) B_k x^{n-k}
  for (int k = 0; k <= n; ++k) c[n - k] = Rational(binomial(n, k)) * bern[k];
  return Poly<Rational>(std::move(c));
}

namespace {

// Power-series coefficients of log((e^z - 1)/z), cached; the order-alpha
// generating function is exp(-alpha * that series).
const std::vector<Rational>& log_series_locked(int n_max) {
  static std::vector<Rational> g{Rational(0)};
  int old = static_cast<int>(g.size());
  if (old > n_max) return g;
  // a_k = 1/(k+1)!  (coefficients of (e^z-1)/z)
  std::vector<Rational> a(n_max + 1);
  for (int k = 0; k <= n_max; ++k) a[k] = Rational(1, factorial(k + 1));
  g.resize(n_max + 1);
  for (int n = old; n <= n_max; ++n) {
    // g_n = a_n - (1/n) sum_{k=1}^{n-1} k g_k a_{n-k}
    Rational s(0);
    for (int k = 1; k < n; ++k) s += Rational(k) * g[k] * a[n - k];
    g[n] = a[n] - s / Rational(n);
  }
  return g;
}

const Poly<Rational>& norlund_poly_locked(int n) {
  static std::vector<Poly<Rational>> cache{Poly<Rational>::constant(Rational(1))};
  int old = static_cast<int>(cache.size());
  if (old > n) return cache[n];
  const auto& g = log_series_locked(n);
  // E(z) = exp(-alpha * g(z)); n E_n = -alpha sum_{m=1}^{n} m g_m E_{n-m}.
  // Entry k of cache holds B_k(alpha) = k! E_k.
  std::vector<Poly<Rational>> e(n + 1);
  for (int k = 0; k < old; ++k) e[k] = cache[k].scaled(Rational(1, factorial(k)));
  for (int m = old; m <= n; ++m) {
    Poly<Rational> s;
    for (int j = 1; j <= m; ++j) s = s + e[m - j].scaled(-Rational(j) * g[j] / Rational(m));
    e[m] = s * Poly<Rational>::identity();
    cache.push_back(e[m].scaled(Rational(factorial(m))));
  }
  return cache[n];
}

}  // namespace

Poly<Rational> norlund_poly(int n) {
  if (n < 0) throw std::domain_error("norlund_poly: n must be >= 0");
  std::scoped_lock lk(cache_mutex());
  return norlund_poly_locked(n);
}

Rational norlund_value(int n, const Rational& alpha) { return norlund_poly(n)(alpha); }

Rational modified_norlund(int n, const Rational& alpha) {
  if (n < 1) throw std::domain_error("modified_norlund: n must be >= 1");
  Rational s(0);
  for (int r = 0; r <= n; ++r)
    s += Rational(binomial(n + r, 2 * r)) * norlund_value(r, alpha) / Rational(n + r);
  return s;
}

Poly<Rational> modified_norlund_poly(int n) {
  if (n < 1) throw std::domain_error("modified_norlund_poly: n must be >= 1");
  Poly<Rational> s;
  for (int r = 0; r <= n; ++r)
    s = s + norlund_poly(r).scaled(Rational(binomial(n + r, 2 * r)) / Rational(n + r));
  return s;
}

Rational harmonic(int n) {
  if (n < 0) throw std::domain_error("harmonic: n must be >= 0");
  Rational s(0);
  for (int k = 1; k <= n; ++k) s += Rational(1, k);
  return s;
}

Int stirling_first(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  static std::mutex m;
  static std::vector<std::vector<Int>> rows{{Int(1)}};  // rows[n][k]
  std::scoped_lock lk(m);
  for (int r = static_cast<int>(rows.size()); r <= n; ++r) {
    std::vector<Int> row(r + 1, Int(0));
    // s(r, k) = s(r-1, k-1) - (r-1) s(r-1, k)
    for (int j = 1; j <= r; ++j) row[j] = rows[r - 1][j - 1];
    for (int j = 0; j < r; ++j) row[j] -= Int(r - 1) * rows[r - 1][j];
    rows.push_back(std::move(row));
  }
  return rows[n][k];
}

Poly<Rational> binom_poly(int p, int ell) {
  if (ell < 0) throw std::domain_error("binom_poly: ell must be >= 0");
  Poly<Rational> r = Poly<Rational>::constant(Rational(1));
  for (int i = 0; i < ell; ++i) {
    std::vector<Rational> lin = {Rational(p - i), Rational(1)};  // x + p - i
    r = r * Poly<Rational>(std::move(lin));
  }
  return r.scaled(Rational(1, factorial(ell)));
}

Poly<Rational> chebyshev(ChebKind kind, int n) {
  if (n < 0) throw std::domain_error("chebyshev: n must be >= 0");
  Poly<Rational> prev = Poly<Rational>::constant(Rational(1));
  if (n == 0) return prev;
  Poly<Rational> cur = kind == ChebKind::first
                           ? Poly<Rational>::identity()
                           : Poly<Rational>::identity().scaled(Rational(2));
  Poly<Rational> two_x = Poly<Rational>::identity().scaled(Rational(2));
  for (int k = 2; k <= n; ++k) {
    Poly<Rational> next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Poly<Rational> forward_difference(const Poly<Rational>& f, int order) {
  if (order < 0) throw std::domain_error("forward_difference: order must be >= 0");
  Poly<Rational> s;
  for (int j = 0; j <= order; ++j) {
    Rational c = Rational(binomial(order, j));
    if ((order - j) % 2 != 0) c = -c;
    s = s + f.shifted(Rational(j)).scaled(c);
  }
  return s;
}

double forward_difference(const std::function<double(double)>& f, int order, double x) {
  if (order < 0) throw std::domain_error("forward_difference: order must be >= 0");
  double s = 0.0;
  for (int j = 0; j <= order; ++j) {
    double c = to_double(Rational(binomial(order, j)));
    if ((order - j) % 2 != 0) c = -c;
    s += c * f(x + j);
  }
  return s;
}

Poly<PiScalar> airault_q(int k) {
  if (k < 1) throw std::domain_error("airault_q: k must be >= 1");
  Poly<PiScalar> x2 = Poly<PiScalar>::monomial(PiScalar(1), 2);
  Poly<PiScalar> r = Poly<PiScalar>::constant(PiScalar(1));
  if (k % 2 == 0) {
    // q_{2m} = prod over odd j <= 2m-1 of (x^2 + pi^2 j^2/4)
    for (int j = 1; j <= k - 1; j += 2)
      r = r * (x2 + Poly<PiScalar>::constant(PiScalar::pi_power(2, Rational(j * j, 4))));
  } else {
    // q_{2m+1} = x prod_{j=1}^{m} (x^2 + pi^2 j^2)
    for (int j = 1; 2 * j <= k - 1; ++j)
      r = r * (x2 + Poly<PiScalar>::constant(PiScalar::pi_power(2, Rational(j * j))));
    r = r * Poly<PiScalar>::identity();
  }
  return r;
}

Poly<Rational> choi_p(int ell, int j) {
  if (ell < 1) throw std::domain_error("choi_p: ell must be >= 1");
  if (j < 0 || j > ell - 1) throw std::domain_error("choi_p: j must be in [0, ell-1]");
  std::vector<Rational> c(ell - j, Rational(0));
  for (int m = j; m <= ell - 1; ++m)
    c[m - j] = Rational(binomial(m, j) * stirling_first(ell, m + 1));
  Poly<Rational> p{std::move(c)};
  Rational scale = Rational(1, factorial(ell - 1));
  if ((ell + 1 - j) % 2 != 0) scale = -scale;
  return p.scaled(scale);
}

std::pair<Poly<Rational>, Poly<Rational>> p_polys(int ell) {
  if (ell < 1) throw std::domain_error("p_polys: ell must be >= 1");
  Poly<Rational> u2 = Poly<Rational>::monomial(Rational(1), 2);
  Poly<Rational> p1 = Poly<Rational>::constant(Rational(1));
  for (int j = 1; j <= ell - 1; ++j)
    p1 = p1 * (u2 + Poly<Rational>::constant(Rational(j * j)));
  Poly<Rational> p2 = Poly<Rational>::constant(Rational(1));
  for (int j = 1; j <= ell; ++j)
    p2 = p2 * (u2 + Poly<Rational>::constant(Rational((2 * j - 1) * (2 * j - 1), 4)));
  return {p1, p2};
}

std::string poly_to_string(const Poly<Rational>& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    Rational c = p.coeff(k);
    if (c == 0) continue;
    bool neg = c < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    Rational a = neg ? Rational(-c) : c;
    std::string mono;
    if (k == 0) {
      mono = to_string(a);
    } else {
      mono = (a == 1) ? "" : to_string(a) + "*";
      mono += var;
      if (k >= 2) mono += "^" + std::to_string(k);
    }
    out += mono;
  }
  return out;
}

}  // namespace norlund
