#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cylspec/algebra/matrix.hpp"
#include "cylspec/algebra/modular.hpp"
#include "cylspec/algebra/polynomial.hpp"
#include "cylspec/algebra/scalar.hpp"

namespace cylspec {

/// Arithmetic of Z/pZ for word-size primes.
struct ModField {
  using value_type = std::uint64_t;
  std::uint64_t p;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(value_type a) const { return a == 0; }
  value_type add(value_type a, value_type b) const { return (a + b) % p; }
  value_type sub(value_type a, value_type b) const { return (a + p - b) % p; }
  value_type mul(value_type a, value_type b) const { return modular::mulmod(a, b, p); }
  value_type inv(value_type a) const { return modular::inverse(a, p); }
  bool better_pivot(value_type, value_type) const { return false; }
};

/// Field operations for types with the usual arithmetic operators.
/// For inexact types the larger-magnitude pivot wins.
template <class T, bool Inexact = std::is_same_v<T, Real> || std::is_floating_point_v<T>>
struct StdField {
  using value_type = T;
  value_type zero() const { return T(0); }
  value_type one() const { return T(1); }
  bool is_zero(const T& a) const { return a == 0; }
  value_type add(const T& a, const T& b) const { return a + b; }
  value_type sub(const T& a, const T& b) const { return a - b; }
  value_type mul(const T& a, const T& b) const { return a * b; }
  value_type inv(const T& a) const { return T(1) / a; }
  bool better_pivot(const T& cand, const T& best) const {
    if constexpr (Inexact) return abs_value(cand) > abs_value(best);
    else return false;
  }
};

namespace detail {

template <class F>
void hessenberg_reduce(Matrix<typename F::value_type>& a, const F& f) {
  using V = typename F::value_type;
  const std::size_t n = a.rows();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t piv = n;
    for (std::size_t i = m; i < n; ++i) {
      if (f.is_zero(a(i, m - 1))) continue;
      if (piv == n || f.better_pivot(a(i, m - 1), a(piv, m - 1))) piv = i;
    }
    if (piv == n) continue;
    if (piv != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(m, j));
      for (std::size_t j = 0; j < n; ++j) std::swap(a(j, piv), a(j, m));
    }
    const V pinv = f.inv(a(m, m - 1));
    for (std::size_t i = m + 1; i < n; ++i) {
      if (f.is_zero(a(i, m - 1))) continue;
      const V u = f.mul(a(i, m - 1), pinv);
      for (std::size_t j = 0; j < n; ++j) a(i, j) = f.sub(a(i, j), f.mul(u, a(m, j)));
      for (std::size_t j = 0; j < n; ++j) a(j, m) = f.add(a(j, m), f.mul(u, a(j, i)));
    }
  }
}

}  // namespace detail

/// det(xI - A) over the field `F`, as a coefficient vector (index = degree).
/// Similarity reduction to upper Hessenberg form followed by the standard
/// three-term-style recurrence; O(n^3) field operations.
template <class F>
std::vector<typename F::value_type> hessenberg_charpoly(Matrix<typename F::value_type> a, const F& f) {
  using V = typename F::value_type;
  if (!a.square()) throw DimensionError("characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  detail::hessenberg_reduce(a, f);

  std::vector<std::vector<V>> p(n + 1);
  p[0] = {f.one()};
  for (std::size_t m = 1; m <= n; ++m) {
    // (x - h_{m,m}) p_{m-1}
    std::vector<V> cur(m + 1, f.zero());
    const auto& prev = p[m - 1];
    const V diag = a(m - 1, m - 1);
    for (std::size_t k = 0; k < prev.size(); ++k) {
      cur[k + 1] = f.add(cur[k + 1], prev[k]);
      cur[k] = f.sub(cur[k], f.mul(diag, prev[k]));
    }
    V t = f.one();
    for (std::size_t i = 1; i < m; ++i) {
      t = f.mul(t, a(m - i, m - i - 1));
      if (f.is_zero(t)) break;
      const V coef = f.mul(a(m - i - 1, m - 1), t);
      if (f.is_zero(coef)) continue;
      const auto& q = p[m - i - 1];
      for (std::size_t k = 0; k < q.size(); ++k) cur[k] = f.sub(cur[k], f.mul(coef, q[k]));
    }
    p[m] = std::move(cur);
  }
  return std::move(p[n]);
}

/// Determinant by Gaussian elimination over the field `F`.
template <class F>
typename F::value_type determinant(Matrix<typename F::value_type> a, const F& f) {
  using V = typename F::value_type;
  if (!a.square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  V det = f.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = n;
    for (std::size_t i = c; i < n; ++i) {
      if (f.is_zero(a(i, c))) continue;
      if (piv == n || f.better_pivot(a(i, c), a(piv, c))) piv = i;
    }
    if (piv == n) return f.zero();
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(c, j));
      det = f.sub(f.zero(), det);
    }
    det = f.mul(det, a(c, c));
    const V inv = f.inv(a(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (f.is_zero(a(i, c))) continue;
      const V u = f.mul(a(i, c), inv);
      for (std::size_t j = c; j < n; ++j) a(i, j) = f.sub(a(i, j), f.mul(u, a(c, j)));
    }
  }
  return det;
}

/// Fraction-free (Bareiss) determinant over an integral domain with exact
/// division: integers or polynomials.
template <class T>
T bareiss_determinant(Matrix<T> a, const T& one) {
  if (!a.square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return one;
  T prev = one;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == T()) {
      std::size_t piv = k + 1;
      while (piv < n && a(piv, k) == T()) ++piv;
      if (piv == n) return T();
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(k, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = T();
    }
    prev = a(k, k);
  }
  return negate ? T() - a(n - 1, n - 1) : a(n - 1, n - 1);
}

inline Integer determinant(const Matrix<Integer>& a) { return bareiss_determinant(a, Integer(1)); }
inline Rational determinant(const Matrix<Rational>& a) { return determinant(a, StdField<Rational>{}); }
inline Real determinant(const Matrix<Real>& a) { return determinant(a, StdField<Real>{}); }

/// det(xI - A) mod p.
inline std::vector<std::uint64_t> charpoly_modp(const IntMatrix& a, std::uint64_t p) {
  if (!a.square()) throw DimensionError("charpoly_modp: matrix is " + IntMatrix::shape(a));
  if (!modular::is_prime(p)) throw ArgumentError("charpoly_modp: " + std::to_string(p) + " is not prime");
  Matrix<std::uint64_t> m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = modular::reduce(a(i, j), p);
  return hessenberg_charpoly(std::move(m), ModField{p});
}

/// (1 + r)^n with r the largest absolute row sum; bounds every coefficient of det(xI - A).
inline Integer charpoly_coefficient_bound(const IntMatrix& a) {
  std::int64_t r = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) < 0 ? -a(i, j) : a(i, j);
    r = std::max(r, s);
  }
  Integer bound;
  mpz_ui_pow_ui(bound.get_mpz_t(), static_cast<unsigned long>(r + 1), a.rows());
  return bound;
}

/// Exact det(xI - A) for an integer matrix: Hessenberg charpoly modulo enough
/// 62-bit primes to cover twice the coefficient bound, then Chinese remaindering.
inline Polynomial charpoly_exact(const IntMatrix& a) {
  if (!a.square()) throw DimensionError("charpoly_exact: matrix is " + IntMatrix::shape(a));
  const Integer need = 2 * charpoly_coefficient_bound(a) + 1;
  modular::CrtAccumulator crt;
  std::size_t used = 0;
  while (crt.modulus() <= need) {
    const std::uint64_t p = modular::large_primes(used + 1).back();
    crt.add(charpoly_modp(a, p), p);
    ++used;
  }
  return from_integers(crt.symmetric());
}

inline RealPolynomial charpoly_real(const Matrix<Real>& a) {
  return RealPolynomial(hessenberg_charpoly(a, StdField<Real>{}));
}

/// Exact det(xI - A) over Q. With L the common denominator, B = LA is integral
/// and det(xI - A) = L^{-n} det(LxI - B), so the modular path does the work
/// whenever B fits in 64-bit entries.
inline Polynomial charpoly_rational(const Matrix<Rational>& a) {
  if (!a.square()) throw DimensionError("charpoly_rational: matrix is " + Matrix<Rational>::shape(a));
  const std::size_t n = a.rows();
  Integer l = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den().get_mpz_t());
  IntMatrix b(n, n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    Integer row = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const Integer v = a(i, j).get_num() * (l / a(i, j).get_den());
      row += abs(v);
      if (!v.fits_slong_p() || !row.fits_slong_p()) return Polynomial(hessenberg_charpoly(a, StdField<Rational>{}));
      b(i, j) = v.get_si();
    }
  }
  const Polynomial scaled = charpoly_exact(b);
  std::vector<Rational> c(n + 1);
  Integer power = 1;
  for (std::size_t k = n + 1; k-- > 0;) {
    c[k] = scaled.coeff(k) / Rational(power);
    power *= l;
  }
  return Polynomial(std::move(c));
}

}  // namespace cylspec
