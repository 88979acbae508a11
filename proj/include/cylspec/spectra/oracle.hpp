#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cylspec/algebra/eigen.hpp"
#include "cylspec/algebra/roots.hpp"
#include "cylspec/spectra/theorem.hpp"

namespace cylspec {

enum class Regime { Auto, NoInner, Regular, General };

inline std::string to_string(Regime r) {
  switch (r) {
    case Regime::Auto: return "auto";
    case Regime::NoInner: return "no_inner";
    case Regime::Regular: return "regular";
    case Regime::General: return "general";
  }
  return "?";
}

/// The most specific regime whose preconditions hold.
inline Regime best_regime(const Decomposition& d, const CoherentList& h) {
  if (!h.any_inner()) return Regime::NoInner;
  if (d.regular_degrees()) return Regime::Regular;
  return Regime::General;
}

struct OracleReport {
  Regime regime = Regime::Auto;
  std::optional<FactoredCharpoly> factored;  ///< absent for the general regime
  Polynomial theorem;
  Polynomial oracle;
  bool match = false;
  Integer max_coeff_diff;
  double rounding_residual = 0;
  double eig_max_diff = 0;
  std::size_t order = 0;
};

/// Theorem-side eigenvalues. The no-inner regime reads them off the per-j
/// |B| x |B| matrices directly; the other regimes use the real roots of the
/// theorem polynomial.
inline std::vector<double> theorem_eigenvalues(const Decomposition& d, const CoherentList& h, Regime regime,
                                               const Polynomial& theorem) {
  if (regime == Regime::NoInner) {
    std::vector<double> out;
    const std::size_t b = h.base_size();
    for (std::size_t j = 1; j <= d.order(); ++j) {
      Matrix<double> m = h.base().cast<double>();
      for (std::size_t i = 0; i < d.t(); ++i)
        for (std::size_t p = 0; p < b; ++p)
          for (std::size_t q = 0; q < b; ++q)
            if (h[i].Ebb(p, q)) m(p, q) += d.theta()[i][j - 1];
      for (double e : eig_symmetric(m)) out.push_back(e);
    }
    return out;
  }
  return flatten(real_roots(theorem));
}

/// Assembles the construct, computes its exact characteristic polynomial and
/// compares it with the theorem-side result of `regime` (Auto picks the most
/// specific applicable one).
inline OracleReport compare_with_oracle(const Decomposition& d, const CoherentList& h, Regime regime = Regime::Auto,
                                        const SpectraOptions& opts = {}, bool with_eigenvalues = true) {
  OracleReport rep;
  rep.regime = regime == Regime::Auto ? best_regime(d, h) : regime;
  const Construct c = assemble(d, h);
  rep.order = c.graph.order();
  rep.oracle = charpoly_exact(c.graph.adjacency());
  switch (rep.regime) {
    case Regime::NoInner: rep.factored = charpoly_no_inner(d, h, opts); break;
    case Regime::Regular: rep.factored = charpoly_regular(d, h, opts); break;
    default: rep.theorem = charpoly_general(d, h, opts); break;
  }
  if (rep.factored) {
    rep.theorem = *rep.factored->product_exact;
    rep.rounding_residual = rep.factored->rounding_residual;
  }
  rep.max_coeff_diff = 0;
  const std::size_t len = std::max(rep.theorem.coeffs().size(), rep.oracle.coeffs().size());
  for (std::size_t k = 0; k < len; ++k) {
    Rational diff = abs(rep.theorem.coeff(k) - rep.oracle.coeff(k));
    Integer z = diff.get_num() / diff.get_den();
    if (diff != Rational(z)) z += 1;
    if (z > rep.max_coeff_diff) rep.max_coeff_diff = z;
  }
  rep.match = rep.theorem == rep.oracle;
  if (with_eigenvalues)
    rep.eig_max_diff =
        multiset_distance(theorem_eigenvalues(d, h, rep.regime, rep.theorem), eig_symmetric(c.graph.adjacency()));
  return rep;
}

}  // namespace cylspec
