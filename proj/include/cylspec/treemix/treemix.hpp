#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "cylspec/algebra/charpoly.hpp"
#include "cylspec/algebra/rational_function.hpp"
#include "cylspec/algebra/roots.hpp"
#include "cylspec/graph/trees.hpp"

namespace cylspec {

/// Complete cubic tree with one rational-function label per vertex.
struct LabeledTree {
  CubicTree tree;
  std::vector<RationalFunction> labels;  ///< indexed by tree vertex
};

struct MixResult {
  std::vector<RationalFunction> level_resultants;  ///< R_T(l), l = 0..h
  RationalFunction total;                          ///< R(T), product over all levels
};

/// Tree mixing: leaves carry the given labels; every other vertex with child
/// labels c_1..c_k receives x - sum 1/c_i (k = 3 at a rooted root, 2 elsewhere,
/// including both unrooted centers).
inline std::pair<LabeledTree, MixResult> tree_mix(TreeShape shape, unsigned h,
                                                  const std::vector<RationalFunction>& leaf_labels) {
  LabeledTree lt{CubicTree(shape, h), {}};
  const CubicTree& t = lt.tree;
  if (leaf_labels.size() != t.leaf_count())
    throw ArgumentError("tree_mix: expected " + std::to_string(t.leaf_count()) + " leaf labels, got " +
                        std::to_string(leaf_labels.size()));
  lt.labels.assign(t.order(), RationalFunction());
  for (std::size_t i = 0; i < leaf_labels.size(); ++i) {
    if (leaf_labels[i].is_zero()) throw DegenerateLabelError("leaf " + std::to_string(i) + " has the zero label");
    lt.labels[t.leaf(i)] = leaf_labels[i];
  }
  const RationalFunction x = Polynomial::x();
  for (std::size_t v = t.leaf(0); v-- > 0;) {
    RationalFunction sum;
    for (auto c : t.children(v)) sum += lt.labels[c].inverse();
    lt.labels[v] = x - sum;
  }
  MixResult mr;
  mr.total = RationalFunction::constant(1);
  for (unsigned l = 0; l <= h; ++l) {
    RationalFunction r = RationalFunction::constant(1);
    for (std::size_t k = 0; k < t.level_counts()[l]; ++k) r *= lt.labels[t.level_offset(l) + k];
    mr.level_resultants.push_back(r);
  }
  for (unsigned l = h + 1; l-- > 0;) mr.total *= mr.level_resultants[l];
  return {std::move(lt), std::move(mr)};
}

namespace detail {

inline Polynomial require_polynomial(const RationalFunction& f, const char* what) {
  if (!f.is_polynomial())
    throw ConsistencyError(std::string(what) + ": mixing result does not clear to a polynomial (denominator " +
                           to_string(f.den()) + ")");
  return f.den().leading() * f.num();
}

}  // namespace detail

/// det(xI - (T + Theta)) for the rooted tree, with leaf i labeled x - Theta_ii: R(T).
inline Polynomial charpoly_rooted(unsigned h, const std::vector<RationalFunction>& leaf_labels) {
  return detail::require_polynomial(tree_mix(TreeShape::Rooted, h, leaf_labels).second.total, "charpoly_rooted");
}

/// Unrooted version: R(T) (R_T(0) - 1) / R_T(0), the correction accounting for the
/// edge between the two centers.
inline Polynomial charpoly_unrooted(unsigned h, const std::vector<RationalFunction>& leaf_labels) {
  auto mr = tree_mix(TreeShape::Unrooted, h, leaf_labels).second;
  const RationalFunction& r0 = mr.level_resultants[0];
  RationalFunction f = mr.total * (r0 - RationalFunction::constant(1)) / r0;
  return detail::require_polynomial(f, "charpoly_unrooted");
}

/// Leaf labels x - theta_i.
inline std::vector<RationalFunction> linear_labels(const std::vector<Rational>& theta) {
  std::vector<RationalFunction> out;
  for (const auto& t : theta) out.emplace_back(Polynomial::linear(t));
  return out;
}

/// p_0 .. p_{n_max} with p_0 = 1, p_1 = x - 2, p_{n+2} = x p_{n+1} - 2 p_n.
inline std::vector<Polynomial> p_sequence(std::size_t n_max) {
  std::vector<Polynomial> p{Polynomial::constant(1)};
  if (n_max >= 1) p.push_back(Polynomial::linear(2));
  while (p.size() <= n_max) {
    const std::size_t k = p.size();
    p.push_back(Polynomial::x() * p[k - 1] - Rational(2) * p[k - 2]);
  }
  return p;
}

/// tau(n): tridiagonal with diagonal (2, 0, ..., 0), superdiagonal 1, subdiagonal 2.
inline IntMatrix tau_matrix(std::size_t n) {
  IntMatrix m(n, n, 0);
  if (n) m(0, 0) = 2;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    m(i, i + 1) = 1;
    m(i + 1, i) = 2;
  }
  return m;
}

/// Relative gap between the generating-function closed form of p_n(x0) and the
/// recurrence value, computed with 40 significant digits plus guard digits.
/// alpha, beta = (x0 ± sqrt(x0^2 - 8)) / 4 are taken real, so x0^2 > 8 is required.
inline double p_closed_form_check(std::size_t n, const Rational& x0) {
  const Rational disc = x0 * x0 - 8;
  if (disc == 0) throw ArgumentError("p_closed_form_check: x0^2 = 8 is the branch point");
  if (disc < 0) throw ArgumentError("p_closed_form_check: closed form is evaluated only for real x0 with x0^2 > 8");
  const Rational exact = p_sequence(n)[n](x0);
  PrecisionScope scope(200);
  const Real x = to_real(x0), root = boost::multiprecision::sqrt(to_real(disc));
  const Real alpha = (x + root) / 4, beta = (x - root) / 4;
  const auto n1 = static_cast<long>(n + 1), nn = static_cast<long>(n);
  const Real closed = (pow(beta, -n1) - pow(alpha, -n1) - 2 * (pow(beta, -nn) - pow(alpha, -nn))) / (2 * (alpha - beta));
  const Real ref = to_real(exact);
  const Real scale = std::max(Real(1), Real(abs_value(ref)));
  return to_double(Real(abs_value(closed - ref) / scale));
}

/// Checks mu_1 >= eta_1 >= mu_2 >= ... >= eta_{n-1} >= mu_n where mu are the
/// roots of p_n (descending) and eta_j = scale * 2cos(j pi / n).
inline bool interlacing_chain(std::size_t n, double scale, double tol = 1e-9) {
  if (n < 2) throw ArgumentError("interlacing_check: n must be at least 2");
  auto mu = flatten(real_roots(p_sequence(n)[n], 1e-12));
  if (mu.size() != n) return false;
  std::sort(mu.rbegin(), mu.rend());
  for (std::size_t j = 1; j < n; ++j) {
    const double eta = scale * 2 * std::cos(double(j) * M_PI / double(n));
    if (mu[j - 1] < eta - tol || eta < mu[j] - tol) return false;
  }
  return true;
}

/// The chain against eta_j = 2cos(j pi / n).
inline bool interlacing_check(std::size_t n, double tol = 1e-9) { return interlacing_chain(n, 1.0, tol); }

/// The chain against the eigenvalues 2 sqrt(2) cos(j pi / n) of tau-hat(n) with its
/// first row and column removed (off-diagonal sqrt 2).
inline bool interlacing_check_scaled(std::size_t n, double tol = 1e-9) {
  return interlacing_chain(n, std::sqrt(2.0), tol);
}

/// Roots of p_{n-1} interlace the roots of p_n.
inline bool consecutive_interlacing_check(std::size_t n, double tol = 1e-9) {
  if (n < 2) throw ArgumentError("consecutive_interlacing_check: n must be at least 2");
  auto ps = p_sequence(n);
  auto mu = flatten(real_roots(ps[n], 1e-12)), nu = flatten(real_roots(ps[n - 1], 1e-12));
  if (mu.size() != n || nu.size() != n - 1) return false;
  std::sort(mu.rbegin(), mu.rend());
  std::sort(nu.rbegin(), nu.rend());
  for (std::size_t j = 0; j + 1 < n; ++j)
    if (mu[j] < nu[j] - tol || nu[j] < mu[j + 1] - tol) return false;
  return true;
}

/// The j = n factor of the tree-cylinder spectral product.
/// Unrooted: (prod_{i=1}^{h} p_i^{L_{h-i+1}/2}) (p_{h+1}^2 - p_h^2).
/// Rooted:   (prod_{i=1}^{h-1} p_i^{L_{h-i+1}/2}) p_h^2 (x p_h - 3 p_{h-1}).
inline Polynomial uniform_term(TreeShape shape, unsigned h) {
  if (h < 1) throw ArgumentError("uniform_term: h must be at least 1");
  const CubicTree t(shape, h);
  const auto& lam = t.level_counts();
  const auto p = p_sequence(h + 1);
  Polynomial out = Polynomial::constant(1);
  if (shape == TreeShape::Unrooted) {
    for (unsigned i = 1; i <= h; ++i) out *= p[i].pow(static_cast<unsigned>(lam[h - i + 1] / 2));
    return out * (p[h + 1] * p[h + 1] - p[h] * p[h]);
  }
  for (unsigned i = 1; i + 1 <= h; ++i) out *= p[i].pow(static_cast<unsigned>(lam[h - i + 1] / 2));
  return out * p[h] * p[h] * (Polynomial::x() * p[h] - Rational(3) * p[h - 1]);
}

/// Integer matrix T + 2 I_leaves whose characteristic polynomial the uniform term describes.
inline IntMatrix tree_plus_leaf_diagonal(TreeShape shape, unsigned h, std::int64_t value) {
  const CubicTree t(shape, h);
  IntMatrix a = t.graph().adjacency();
  for (std::size_t i = 0; i < t.leaf_count(); ++i) a(t.leaf(i), t.leaf(i)) = value;
  return a;
}

}  // namespace cylspec
