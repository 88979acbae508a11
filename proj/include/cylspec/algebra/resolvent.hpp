#pragma once

#include <vector>

#include "cylspec/algebra/charpoly.hpp"
#include "cylspec/algebra/matrix.hpp"
#include "cylspec/algebra/rational_function.hpp"

namespace cylspec {

/// adj(xI - C) written as sum_k x^k A_k with integer matrices A_k.
struct Adjugate {
  Polynomial charpoly;                 ///< det(xI - C)
  std::vector<Matrix<Integer>> terms;  ///< terms[k] = A_k, k = 0..m-1

  Matrix<Integer> at(const Integer& x) const {
    const std::size_t m = charpoly.degree() > 0 ? static_cast<std::size_t>(charpoly.degree()) : 0;
    Matrix<Integer> acc(m, m, Integer(0));
    for (std::size_t k = terms.size(); k-- > 0;) acc = x * acc + terms[k];
    return acc;
  }
};

/// Cayley-Hamilton form of the adjugate: with det(xI - C) = sum c_i x^i,
/// A_{m-1} = I and A_{k-1} = C A_k + c_k I.
inline Adjugate adjugate_of_shift(const IntMatrix& c) {
  if (!c.square()) throw DimensionError("adjugate of a non-square matrix");
  const std::size_t m = c.rows();
  Adjugate adj{charpoly_exact(c), {}};
  if (m == 0) return adj;
  const Matrix<Integer> cz = c.cast<Integer>();
  adj.terms.resize(m);
  adj.terms[m - 1] = Matrix<Integer>::identity(m);
  for (std::size_t k = m - 1; k > 0; --k) {
    Matrix<Integer> next = cz * adj.terms[k];
    const Integer ck = adj.charpoly.coeff(k).get_num();
    for (std::size_t i = 0; i < m; ++i) next(i, i) += ck;
    adj.terms[k - 1] = std::move(next);
  }
  return adj;
}

/// Polynomial numerators of the link resolvent: with adj(xI - C) = sum_k x^k A_k,
/// diagonal[k] = Ebc A_k Ebc^T and across[k] = Ebc A_k Ebpc^T, so that
/// R_d = sum_k x^k diagonal[k] / phi(C, x) and likewise for R_a.
struct LinkAdjugate {
  Polynomial charpoly;
  std::vector<Matrix<Integer>> diagonal, across;

  static Matrix<Integer> horner(const std::vector<Matrix<Integer>>& terms, const Integer& x, std::size_t size) {
    Matrix<Integer> acc(size, size, Integer(0));
    for (std::size_t k = terms.size(); k-- > 0;) acc = x * acc + terms[k];
    return acc;
  }
};

inline LinkAdjugate link_adjugate(const IntMatrix& c, const IntMatrix& ebc, const IntMatrix& ebpc) {
  if (ebpc.rows() != ebc.rows() || ebc.cols() != c.rows() || ebpc.cols() != c.rows() || !c.square())
    throw DimensionError("resolvent_blocks: inconsistent block shapes");
  const Adjugate adj = adjugate_of_shift(c);
  LinkAdjugate out{adj.charpoly, {}, {}};
  const Matrix<Integer> e = ebc.cast<Integer>(), ep = ebpc.cast<Integer>();
  const Matrix<Integer> et = e.transpose(), ept = ep.transpose();
  for (const auto& ak : adj.terms) {
    out.diagonal.push_back(e * ak * et);
    out.across.push_back(e * ak * ept);
  }
  return out;
}

/// Diagonal and off-diagonal blocks of [Ebc; Ebpc] (xI - C)^{-1} [Ebc^T, Ebpc^T].
struct ResolventBlocks {
  Matrix<RationalFunction> diagonal;  ///< R_d
  Matrix<RationalFunction> across;    ///< R_a
};

inline ResolventBlocks resolvent_blocks(const IntMatrix& c, const IntMatrix& ebc, const IntMatrix& ebpc) {
  const std::size_t base = ebc.rows();
  const LinkAdjugate link = link_adjugate(c, ebc, ebpc);
  ResolventBlocks out{Matrix<RationalFunction>(base, base), Matrix<RationalFunction>(base, base)};
  if (c.rows() == 0) return out;
  auto entry = [&](const std::vector<Matrix<Integer>>& terms, std::size_t i, std::size_t j) {
    std::vector<Integer> coeffs;
    for (const auto& t : terms) coeffs.push_back(t(i, j));
    return RationalFunction(from_integers(coeffs), link.charpoly);
  };
  for (std::size_t i = 0; i < base; ++i)
    for (std::size_t j = 0; j < base; ++j) {
      out.diagonal(i, j) = entry(link.diagonal, i, j);
      out.across(i, j) = entry(link.across, i, j);
    }
  return out;
}

}  // namespace cylspec
