#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <vector>

#include "cylspec/algebra/matrix.hpp"
#include "cylspec/error.hpp"

namespace cylspec {

inline Eigen::MatrixXd to_eigen(const Matrix<double>& a) {
  Eigen::MatrixXd m(static_cast<Eigen::Index>(a.rows()), static_cast<Eigen::Index>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = a(i, j);
  return m;
}

/// Ascending eigenvalues of a real symmetric matrix (Householder tridiagonalization
/// plus implicit symmetric QR, via Eigen).
inline std::vector<double> eig_symmetric(const Matrix<double>& a) {
  if (!a.square()) throw DimensionError("eig_symmetric: matrix is not square");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j)
      if (std::abs(a(i, j) - a(j, i)) > 1e-12)
        throw ValidationError("eig_symmetric: matrix is not symmetric");
  if (a.rows() == 0) return {};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(to_eigen(a), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw Error("eig_symmetric: eigensolver did not converge");
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

inline std::vector<double> eig_symmetric(const IntMatrix& a) { return eig_symmetric(a.cast<double>()); }

/// Largest pointwise gap between two ascending eigenvalue lists of equal length.
inline double multiset_distance(std::vector<double> a, std::vector<double> b) {
  if (a.size() != b.size()) return INFINITY;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace cylspec
