#pragma once

#include "cylspec/algebra/charpoly.hpp"
#include "cylspec/algebra/chebyshev.hpp"
#include "cylspec/graph/graph.hpp"

namespace cylspec {

/// Characteristic polynomial of G ⊠ P_{k+2} (every edge subdivided k times):
/// U_k(x/2)^{|E|-n} det(x U_k(x/2) I - A - U_{k-1}(x/2) D), with the
/// determinant taken exactly over Q[x].
inline Polynomial subdivision_charpoly(const Graph& g, unsigned k) {
  if (k < 1) throw ArgumentError("subdivision_charpoly: k must be at least 1");
  const std::size_t n = g.order();
  const Polynomial uk = chebyshev_U_half(k), ukm1 = chebyshev_U_half(k - 1);
  const Polynomial diag = Polynomial::x() * uk;
  Matrix<Polynomial> m(n, n, Polynomial());
  for (std::size_t u = 0; u < n; ++u) {
    m(u, u) = diag - Rational(static_cast<long>(g.degree(u))) * ukm1;
    for (std::size_t v = 0; v < n; ++v)
      if (g.adjacent(u, v)) m(u, v) = Polynomial::constant(-1);
  }
  Polynomial det = bareiss_determinant(m, Polynomial::constant(1));
  const long e = static_cast<long>(g.size()) - static_cast<long>(n);
  if (e >= 0) return det * uk.pow(static_cast<unsigned>(e));
  return exact_div(det, uk.pow(static_cast<unsigned>(-e)));
}

}  // namespace cylspec
