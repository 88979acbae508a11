#pragma once

#include <algorithm>
#include <climits>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cylspec/algebra/modular.hpp"
#include "cylspec/algebra/scalar.hpp"
#include "cylspec/error.hpp"

namespace cylspec {

/// Dense univariate polynomial over a field `T`; `coeffs()[d]` is the coefficient of x^d.
///
/// Invariant: the leading stored coefficient is nonzero. The zero polynomial
/// stores no coefficients and reports degree `kZeroDegree`.
template <class T>
class BasicPolynomial {
 public:
  static constexpr int kZeroDegree = INT_MIN;

  BasicPolynomial() = default;
  explicit BasicPolynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  BasicPolynomial(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }
  static BasicPolynomial constant(const T& a) { return BasicPolynomial(std::vector<T>{a}); }
  static BasicPolynomial x() { return BasicPolynomial(std::vector<T>{T(0), T(1)}); }
  /// x - a
  static BasicPolynomial linear(const T& a) { return BasicPolynomial(std::vector<T>{T(-a), T(1)}); }
  static BasicPolynomial monomial(std::size_t d, const T& a = T(1)) {
    std::vector<T> c(d + 1, T(0));
    c[d] = a;
    return BasicPolynomial(std::move(c));
  }

  const std::vector<T>& coeffs() const { return c_; }
  int degree() const { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  T coeff(std::size_t d) const { return d < c_.size() ? c_[d] : T(0); }
  T leading() const { return c_.empty() ? T(0) : c_.back(); }

  template <class U = T>
  U operator()(const U& x) const {
    U acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + U(*it);
    return acc;
  }

  BasicPolynomial operator-() const {
    BasicPolynomial r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
  }

  friend BasicPolynomial operator+(const BasicPolynomial& a, const BasicPolynomial& b) {
    std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] + b.c_[i];
    return BasicPolynomial(std::move(c));
  }
  friend BasicPolynomial operator-(const BasicPolynomial& a, const BasicPolynomial& b) { return a + (-b); }

  friend BasicPolynomial operator*(const BasicPolynomial& a, const BasicPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return BasicPolynomial(std::move(c));
  }
  friend BasicPolynomial operator*(const T& s, const BasicPolynomial& a) {
    std::vector<T> c = a.c_;
    for (auto& v : c) v = s * v;
    return BasicPolynomial(std::move(c));
  }

  BasicPolynomial& operator+=(const BasicPolynomial& b) { return *this = *this + b; }
  BasicPolynomial& operator-=(const BasicPolynomial& b) { return *this = *this - b; }
  BasicPolynomial& operator*=(const BasicPolynomial& b) { return *this = *this * b; }

  friend bool operator==(const BasicPolynomial& a, const BasicPolynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const BasicPolynomial& a, const BasicPolynomial& b) { return !(a == b); }

  /// Euclidean division; returns (quotient, remainder).
  friend std::pair<BasicPolynomial, BasicPolynomial> divmod(const BasicPolynomial& a,
                                                            const BasicPolynomial& b) {
    if (b.is_zero()) throw ArgumentError("polynomial division by zero");
    if (a.degree() < b.degree()) return {BasicPolynomial(), a};
    std::vector<T> r = a.c_;
    const std::size_t db = b.c_.size() - 1;
    std::vector<T> q(r.size() - db, T(0));
    const T lead = b.c_.back();
    for (std::size_t k = q.size(); k-- > 0;) {
      T f = r[k + db] / lead;
      q[k] = f;
      if (f == 0) continue;
      for (std::size_t i = 0; i <= db; ++i) r[k + i] -= f * b.c_[i];
    }
    r.resize(db);
    return {BasicPolynomial(std::move(q)), BasicPolynomial(std::move(r))};
  }
  friend BasicPolynomial operator/(const BasicPolynomial& a, const BasicPolynomial& b) {
    return divmod(a, b).first;
  }
  friend BasicPolynomial operator%(const BasicPolynomial& a, const BasicPolynomial& b) {
    return divmod(a, b).second;
  }

  BasicPolynomial monic() const {
    if (is_zero()) return *this;
    const T lead = leading();
    std::vector<T> c = c_;
    for (auto& v : c) v = v / lead;
    return BasicPolynomial(std::move(c));
  }

  BasicPolynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = T(static_cast<long>(i)) * c_[i];
    return BasicPolynomial(std::move(d));
  }

  /// p(s·x)
  BasicPolynomial scale_argument(const T& s) const {
    std::vector<T> c = c_;
    T f(1);
    for (auto& v : c) {
      v = v * f;
      f = f * s;
    }
    return BasicPolynomial(std::move(c));
  }

  /// p(q(x))
  BasicPolynomial compose(const BasicPolynomial& q) const {
    BasicPolynomial acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + constant(*it);
    return acc;
  }

  BasicPolynomial pow(unsigned e) const {
    BasicPolynomial result = constant(T(1)), base = *this;
    while (e) {
      if (e & 1u) result *= base;
      e >>= 1u;
      if (e) base *= base;
    }
    return result;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<T> c_;
};

using Polynomial = BasicPolynomial<Rational>;
using RealPolynomial = BasicPolynomial<Real>;

inline Polynomial from_integers(const std::vector<long long>& c) {
  std::vector<Rational> q;
  q.reserve(c.size());
  for (long long v : c) q.emplace_back(static_cast<long>(v));
  return Polynomial(std::move(q));
}

inline Polynomial from_integers(std::initializer_list<long long> c) {
  return from_integers(std::vector<long long>(c));
}

inline Polynomial from_integers(const std::vector<Integer>& c) {
  std::vector<Rational> q(c.begin(), c.end());
  return Polynomial(std::move(q));
}

inline bool has_integer_coefficients(const Polynomial& p) {
  return std::all_of(p.coeffs().begin(), p.coeffs().end(),
                     [](const Rational& q) { return q.get_den() == 1; });
}

namespace detail {

/// Coefficients of c * p reduced mod `prime`, where c clears the denominators;
/// empty if the prime divides the scaled leading coefficient.
inline std::vector<std::uint64_t> scaled_residues(const Polynomial& p, std::uint64_t prime) {
  Integer l = 1;
  for (const auto& q : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
  std::vector<std::uint64_t> out;
  for (const auto& q : p.coeffs()) {
    Integer v = q.get_num() * (l / q.get_den());
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), prime);
    out.push_back(r.get_ui());
  }
  if (out.back() == 0) out.clear();
  return out;
}

/// Degree of gcd(a, b) in Z_p[x].
inline std::size_t gcd_degree_modp(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b, std::uint64_t p) {
  auto trim = [](std::vector<std::uint64_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    if (a.size() >= b.size()) {
      const std::uint64_t inv = modular::inverse(b.back(), p);
      while (a.size() >= b.size()) {
        const std::uint64_t f = modular::mulmod(a.back(), inv, p);
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
          a[shift + i] = (a[shift + i] + p - modular::mulmod(f, b[i], p)) % p;
        trim(a);
        if (a.empty()) break;
      }
    }
    std::swap(a, b);
  }
  return a.empty() ? 0 : a.size() - 1;
}

}  // namespace detail

/// Monic greatest common divisor over Q (zero if both inputs are zero). A
/// constant gcd modulo a prime not dividing either leading coefficient proves
/// coprimality, which skips the rational Euclidean loop in the common case.
inline Polynomial gcd(Polynomial a, Polynomial b) {
  if (a.degree() > 0 && b.degree() > 0) {
    constexpr std::uint64_t prime = 4611686018427387847ull;  // 2^62 - 57
    auto ra = detail::scaled_residues(a, prime), rb = detail::scaled_residues(b, prime);
    if (!ra.empty() && !rb.empty() && detail::gcd_degree_modp(ra, rb, prime) == 0) return Polynomial::constant(1);
  }
  while (!b.is_zero()) {
    Polynomial r = a % b;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

/// Divides exactly; throws if the remainder is nonzero.
inline Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw ConsistencyError("polynomial division left a nonzero remainder");
  return q;
}

inline RealPolynomial to_real(const Polynomial& p) {
  std::vector<Real> c;
  c.reserve(p.coeffs().size());
  for (const auto& q : p.coeffs()) c.push_back(to_real(q));
  return RealPolynomial(std::move(c));
}

/// Human-readable form, highest degree first, e.g. "x^3 - 3*x - 2".
template <class T>
std::string to_string(const BasicPolynomial<T>& p, const std::string& var = "x") {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = p.degree(); d >= 0; --d) {
    T a = p.coeff(static_cast<std::size_t>(d));
    if (a == 0) continue;
    bool neg = a < 0;
    T mag = neg ? T(-a) : a;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    bool unit = (mag == 1);
    if (!unit || d == 0) {
      if constexpr (std::is_same_v<T, Rational>)
        os << mag.get_str();
      else
        os << mag;
      if (d > 0) os << "*";
    }
    if (d >= 1) os << var;
    if (d >= 2) os << "^" << d;
  }
  return os.str();
}

}  // namespace cylspec
