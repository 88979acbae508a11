#pragma once

#include <string>
#include <utility>

#include "cylspec/algebra/polynomial.hpp"

namespace cylspec {

/// Element of Q(x), kept reduced with a monic denominator so that equality is
/// structural equality.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Polynomial::constant(1)) {}
  RationalFunction(Polynomial p) : num_(std::move(p)), den_(Polynomial::constant(1)) {}  // NOLINT
  RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
  }
  static RationalFunction constant(const Rational& a) { return RationalFunction(Polynomial::constant(a)); }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RationalFunction inverse() const {
    if (is_zero()) throw DegenerateLabelError("inverting the zero rational function");
    return RationalFunction(den_, num_);
  }

  Rational operator()(const Rational& x) const {
    Rational d = den_(x);
    if (d == 0) throw ArgumentError("rational function evaluated at a pole");
    return num_(x) / d;
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a) {
    RationalFunction r = a;
    r.num_ = -r.num_;
    return r;
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    // Cross-cancel first to keep intermediate degrees down.
    Polynomial g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
    Polynomial n = exact_div(a.num_, g1.is_zero() ? Polynomial::constant(1) : g1) *
                   exact_div(b.num_, g2.is_zero() ? Polynomial::constant(1) : g2);
    Polynomial d = exact_div(a.den_, g2.is_zero() ? Polynomial::constant(1) : g2) *
                   exact_div(b.den_, g1.is_zero() ? Polynomial::constant(1) : g1);
    return RationalFunction(std::move(n), std::move(d));
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    return a * b.inverse();
  }
  RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
  RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

 private:
  void normalize() {
    if (den_.is_zero()) throw ArgumentError("rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = Polynomial::constant(1);
      return;
    }
    Polynomial g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
    Rational lead = den_.leading();
    if (lead != 1) {
      Rational inv = 1 / lead;
      num_ = inv * num_;
      den_ = inv * den_;
    }
  }

  Polynomial num_;
  Polynomial den_;
};

inline std::string to_string(const RationalFunction& f) {
  if (f.is_polynomial()) return to_string(f.num());
  return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

}  // namespace cylspec
