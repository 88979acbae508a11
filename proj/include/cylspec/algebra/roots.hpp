#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "cylspec/algebra/polynomial.hpp"

namespace cylspec {

struct SquarefreeFactor {
  Polynomial factor;  ///< monic, squarefree
  unsigned multiplicity;
};

/// Yun's squarefree decomposition over Q: p = lc(p) * prod factor_i^{multiplicity_i}.
inline std::vector<SquarefreeFactor> squarefree_decomposition(const Polynomial& p) {
  if (p.is_zero()) throw ArgumentError("squarefree decomposition of the zero polynomial");
  std::vector<SquarefreeFactor> out;
  if (p.degree() == 0) return out;
  const Polynomial a = p.monic();
  const Polynomial b = a.derivative();
  const Polynomial c = gcd(a, b);
  Polynomial w = exact_div(a, c);
  Polynomial y = exact_div(b, c);
  Polynomial z = y - w.derivative();
  for (unsigned i = 1; w.degree() > 0; ++i) {
    Polynomial g = gcd(w, z);
    if (g.degree() > 0) out.push_back({g, i});
    w = exact_div(w, g);
    y = exact_div(z, g);
    z = y - w.derivative();
  }
  return out;
}

/// Sturm chain of a squarefree polynomial; members are scaled to keep |leading| = 1.
class SturmSequence {
 public:
  explicit SturmSequence(const Polynomial& p) {
    chain_.push_back(p.monic());
    Polynomial d = p.derivative();
    if (d.is_zero()) return;
    chain_.push_back(normalized(d));
    while (true) {
      Polynomial r = chain_[chain_.size() - 2] % chain_.back();
      if (r.is_zero()) break;
      chain_.push_back(normalized(-r));
    }
  }

  /// Number of sign changes of the chain at x.
  int variations(const Rational& x) const {
    int changes = 0, last = 0;
    for (const auto& s : chain_) {
      int sg = sgn(s(x));
      if (sg == 0) continue;
      if (last != 0 && sg != last) ++changes;
      last = sg;
    }
    return changes;
  }

  /// Distinct real roots in (lo, hi].
  int count(const Rational& lo, const Rational& hi) const { return variations(lo) - variations(hi); }

 private:
  static Polynomial normalized(const Polynomial& p) {
    Rational lead = abs(p.leading());
    return Rational(1 / lead) * p;
  }
  std::vector<Polynomial> chain_;
};

/// 1 + max |a_i / a_n|, rounded up to an integer.
inline Rational cauchy_root_bound(const Polynomial& p) {
  Rational m = 0;
  const Rational lead = abs(p.leading());
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p.coeff(static_cast<std::size_t>(i))) / lead));
  Integer c;
  mpz_cdiv_q(c.get_mpz_t(), m.get_num_mpz_t(), m.get_den_mpz_t());
  return Rational(c + 1);
}

struct RealRoot {
  double value;
  unsigned multiplicity;
};

namespace detail {

inline void isolate_and_refine(const SturmSequence& s, Rational lo, Rational hi, int count, const Rational& tol,
                               std::vector<double>& out) {
  while (true) {
    if (count <= 0) return;
    if (count == 1 && hi - lo <= tol) {
      out.push_back(to_double(Rational((lo + hi) / 2)));
      return;
    }
    Rational mid = (lo + hi) / 2;
    int left = s.count(lo, mid);
    if (left > 0 && count - left > 0) {
      isolate_and_refine(s, lo, mid, left, tol, out);
      lo = mid;
      count -= left;
    } else if (left > 0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
}

}  // namespace detail

/// All real roots of p with multiplicities, ascending; each located to within `tol`.
inline std::vector<RealRoot> real_roots(const Polynomial& p, double tol = 1e-10) {
  if (p.is_zero()) throw ArgumentError("real_roots of the zero polynomial");
  if (!(tol > 0)) throw ArgumentError("real_roots: tolerance must be positive");
  std::vector<RealRoot> roots;
  const Rational tol_q(tol);
  for (const auto& f : squarefree_decomposition(p)) {
    SturmSequence s(f.factor);
    const Rational bound = cauchy_root_bound(f.factor);
    std::vector<double> found;
    detail::isolate_and_refine(s, -bound, bound, s.count(-bound, bound), tol_q, found);
    for (double r : found) roots.push_back({r, f.multiplicity});
  }
  std::sort(roots.begin(), roots.end(), [](const RealRoot& a, const RealRoot& b) { return a.value < b.value; });
  return roots;
}

/// Roots repeated according to multiplicity.
inline std::vector<double> flatten(const std::vector<RealRoot>& roots) {
  std::vector<double> out;
  for (const auto& r : roots) out.insert(out.end(), r.multiplicity, r.value);
  return out;
}

}  // namespace cylspec
