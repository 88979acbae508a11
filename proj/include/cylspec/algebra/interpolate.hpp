#pragma once

#include <vector>

#include "cylspec/algebra/polynomial.hpp"

namespace cylspec {

/// The unique polynomial of degree < xs.size() through the points (xs[k], ys[k]),
/// by Newton divided differences. Works over any field with exact or
/// floating arithmetic.
template <class T>
BasicPolynomial<T> interpolate(const std::vector<T>& xs, std::vector<T> ys) {
  if (xs.size() != ys.size()) throw ArgumentError("interpolate: node and value counts differ");
  const std::size_t n = xs.size();
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t k = n - 1; k >= level; --k) {
      if (xs[k] == xs[k - level]) throw ArgumentError("interpolate: repeated node");
      ys[k] = (ys[k] - ys[k - 1]) / (xs[k] - xs[k - level]);
    }
  // Horner in Newton form: p = c_{n-1}; p = p (x - x_k) + c_k.
  BasicPolynomial<T> p;
  for (std::size_t k = n; k-- > 0;) p = p * BasicPolynomial<T>::linear(xs[k]) + BasicPolynomial<T>::constant(ys[k]);
  return p;
}

}  // namespace cylspec
