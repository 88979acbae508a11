#pragma once

#include "cylspec/algebra/polynomial.hpp"

namespace cylspec {

/// Chebyshev polynomial of the second kind: U_0 = 1, U_1 = 2x, U_{k+1} = 2x U_k - U_{k-1}.
inline Polynomial chebyshev_U(unsigned k) {
  Polynomial prev = Polynomial::constant(1);
  if (k == 0) return prev;
  const Polynomial two_x = Polynomial::monomial(1, 2);
  Polynomial cur = two_x;
  for (unsigned i = 1; i < k; ++i) {
    Polynomial next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// U_k(x/2), which is monic with integer coefficients and equals det(xI - P_k).
inline Polynomial chebyshev_U_half(unsigned k) { return chebyshev_U(k).scale_argument(Rational(1, 2)); }

}  // namespace cylspec
