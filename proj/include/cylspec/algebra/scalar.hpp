#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <mutex>
#include <string>

#include "cylspec/error.hpp"

namespace cylspec {

using Integer = mpz_class;
using Rational = mpq_class;
using Real = boost::multiprecision::mpfr_float;

/// Sets the working precision of `Real` for the lifetime of the scope.
///
/// The MPFR backend keeps its default precision in a process-wide variable, so
/// scopes are serialized through a recursive mutex: nested scopes on the same
/// thread are fine, concurrent scopes on different threads wait for each other.
/// Worker threads spawned inside a scope inherit its precision.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits) : lock_(mutex()) {
    saved_ = Real::default_precision();
    Real::default_precision(bits_to_digits10(bits));
  }
  ~PrecisionScope() { Real::default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

  static unsigned bits_to_digits10(unsigned bits) {
    return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
  }

 private:
  static std::recursive_mutex& mutex() {
    static std::recursive_mutex m;
    return m;
  }
  std::unique_lock<std::recursive_mutex> lock_;
  unsigned saved_;
};

/// n/d in canonical form (mpq_class's two-argument constructor does not reduce).
inline Rational make_rational(long n, long d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

inline Real to_real(const Rational& q) { return Real(q.get_mpq_t()); }
inline Real to_real(const Integer& z) { return Real(z.get_mpz_t()); }

/// pi at the current `Real` precision.
inline Real real_pi() {
  Real pi;
  mpfr_const_pi(pi.backend().data(), MPFR_RNDN);
  return pi;
}

/// Nearest integer (ties away from zero).
inline Integer round_to_integer(const Real& r) {
  Integer z;
  mpfr_get_z(z.get_mpz_t(), r.backend().data(), MPFR_RNDN);
  return z;
}

inline double to_double(const Rational& q) { return q.get_d(); }
inline double to_double(const Real& r) { return r.convert_to<double>(); }

inline Rational parse_rational(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw ArgumentError("not a rational number: '" + s + "'");
  q.canonicalize();
  if (q.get_den() == 0) throw ArgumentError("zero denominator in '" + s + "'");
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(10); }
inline std::string to_string(const Integer& z) { return z.get_str(10); }

inline Rational abs_value(const Rational& q) { return abs(q); }
inline Real abs_value(const Real& r) { return boost::multiprecision::abs(r); }

}  // namespace cylspec
