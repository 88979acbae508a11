#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cylspec/algebra/scalar.hpp"
#include "cylspec/graph/graph.hpp"

namespace cylspec {

/// True iff all pairwise adjacency products commute (exact integer arithmetic).
inline bool check_commutative(const std::vector<Graph>& parts) {
  if (parts.empty()) return true;
  const std::size_t n = parts[0].order();
  for (const auto& g : parts)
    if (g.order() != n) throw ArgumentError("check_commutative: parts have different vertex counts");
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      const auto& a = parts[i].adjacency();
      const auto& b = parts[j].adjacency();
      if (!(a * b == b * a)) return false;
    }
  return true;
}

struct CompatibleNumbering {
  std::vector<std::vector<double>> theta;  ///< theta[i][j-1], i = part, j = 1..n
  double residual = 0;                     ///< max off-diagonal magnitude of U^T G_i U
};

/// Simultaneous diagonalization of commuting parts through a random real linear
/// combination. Retries with fresh weights (up to 5 attempts) when the residual
/// exceeds 1e-8.
inline CompatibleNumbering compatible_numbering_numeric(const std::vector<Graph>& parts, std::uint64_t seed = 1) {
  if (parts.empty()) throw ArgumentError("compatible numbering of an empty family");
  if (!check_commutative(parts)) throw ArgumentError("compatible numbering requires commuting parts");
  const auto n = static_cast<Eigen::Index>(parts[0].order());
  std::vector<Eigen::MatrixXd> mats;
  for (const auto& g : parts) {
    Eigen::MatrixXd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j)
        m(i, j) = static_cast<double>(g.adjacency()(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
    mats.push_back(std::move(m));
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> weight(0.5, 1.5);
  double last_residual = 0;
  for (int attempt = 0; attempt < 5; ++attempt) {
    Eigen::MatrixXd combo = Eigen::MatrixXd::Zero(n, n);
    for (const auto& m : mats) combo += weight(rng) * m;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(combo);
    const Eigen::MatrixXd& u = solver.eigenvectors();
    CompatibleNumbering out;
    for (const auto& m : mats) {
      Eigen::MatrixXd d = u.transpose() * m * u;
      std::vector<double> row(static_cast<std::size_t>(n));
      for (Eigen::Index j = 0; j < n; ++j) {
        row[static_cast<std::size_t>(j)] = d(j, j);
        for (Eigen::Index k = 0; k < n; ++k)
          if (k != j) out.residual = std::max(out.residual, std::abs(d(j, k)));
      }
      out.theta.push_back(std::move(row));
    }
    if (out.residual < 1e-8) return out;
    last_residual = out.residual;
  }
  throw DegeneracyError("compatible numbering: residual " + std::to_string(last_residual) +
                        " above 1e-8 after 5 random combinations");
}

/// Commutative t-decomposition of a graph with a compatible eigenvalue numbering.
///
/// Invariants: parts are edge-disjoint spanning subgraphs without isolated
/// vertices, pairwise commuting, summing to the parent; theta is t x n.
class Decomposition {
 public:
  struct CirculantSteps {
    std::size_t n;
    std::vector<std::size_t> ks;
  };

  Decomposition(std::vector<Graph> parts, std::vector<std::vector<double>> theta,
                std::optional<CirculantSteps> circulant = std::nullopt)
      : parts_(std::move(parts)), theta_(std::move(theta)), circulant_(std::move(circulant)) {
    if (parts_.empty()) throw ArgumentError("decomposition needs at least one part");
    const std::size_t n = parts_[0].order();
    IntMatrix sum(n, n, 0);
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      const Graph& g = parts_[i];
      if (g.order() != n) throw ValidationError("decomposition parts have different vertex counts");
      for (std::size_t v = 0; v < n; ++v)
        if (g.degree(v) == 0)
          throw ValidationError("part " + std::to_string(i) + " has isolated vertex " + std::to_string(v));
      sum = sum + g.adjacency();
    }
    if (!is_zero_one(sum)) throw ValidationError("decomposition parts are not edge-disjoint");
    parent_ = Graph::from_adjacency(sum);
    if (!check_commutative(parts_)) throw ValidationError("decomposition parts do not commute");
    if (theta_.size() != parts_.size()) throw ValidationError("theta table must have one row per part");
    for (const auto& row : theta_)
      if (row.size() != n) throw ValidationError("theta rows must have one entry per vertex");
    std::vector<std::size_t> regular;
    for (const auto& g : parts_) {
      long d = g.regular_degree();
      if (d < 0) break;
      regular.push_back(static_cast<std::size_t>(d));
    }
    if (regular.size() == parts_.size()) regular_degrees_ = std::move(regular);
  }

  const Graph& parent() const { return parent_; }
  const std::vector<Graph>& parts() const { return parts_; }
  std::size_t t() const { return parts_.size(); }
  std::size_t order() const { return parent_.order(); }
  const std::vector<std::vector<double>>& theta() const { return theta_; }
  const std::optional<std::vector<std::size_t>>& regular_degrees() const { return regular_degrees_; }
  const std::optional<CirculantSteps>& circulant() const { return circulant_; }

  /// Diagonal degree matrix D_i of part i.
  std::vector<std::size_t> degrees(std::size_t i) const { return parts_.at(i).degrees(); }

  /// theta_i^j with j in 1..n, at the current `Real` precision. Circulant
  /// decompositions are evaluated from the closed form 2cos(2 pi j k_i / n).
  Real theta_real(std::size_t i, std::size_t j) const {
    if (circulant_) {
      Real arg = 2 * real_pi() * Real(static_cast<unsigned long>(j * circulant_->ks[i] % circulant_->n)) /
                 Real(static_cast<unsigned long>(circulant_->n));
      return 2 * boost::multiprecision::cos(arg);
    }
    return Real(theta_[i].at(j - 1));
  }

 private:
  Graph parent_;
  std::vector<Graph> parts_;
  std::vector<std::vector<double>> theta_;
  std::optional<std::vector<std::size_t>> regular_degrees_;
  std::optional<CirculantSteps> circulant_;
};

/// (C_n(k_0), ..., C_n(k_{t-1})) with theta_i^j = 2cos(2 pi j k_i / n); the j = n
/// column belongs to the all-ones eigenvector.
inline Decomposition decompose_circulant(std::size_t n, const std::vector<std::size_t>& ks) {
  circulant(n, ks);  // validates the step set as a whole
  std::vector<Graph> parts;
  std::vector<std::vector<double>> theta;
  for (auto k : ks) {
    parts.push_back(circulant(n, {k}));
    std::vector<double> row(n);
    for (std::size_t j = 1; j <= n; ++j)
      row[j - 1] = 2 * std::cos(2 * std::numbers::pi * static_cast<double>(j * k % n) / static_cast<double>(n));
    theta.push_back(std::move(row));
  }
  return Decomposition(std::move(parts), std::move(theta), Decomposition::CirculantSteps{n, ks});
}

/// Decomposition with a numerically computed compatible numbering.
inline Decomposition decompose_numeric(std::vector<Graph> parts, std::uint64_t seed = 1) {
  auto numbering = compatible_numbering_numeric(parts, seed);
  return Decomposition(std::move(parts), std::move(numbering.theta));
}

}  // namespace cylspec
