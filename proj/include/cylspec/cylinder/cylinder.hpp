#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cylspec/algebra/matrix.hpp"
#include "cylspec/error.hpp"

namespace cylspec {

/// A bsymmetric cylinder H = (B, C) with non-intersecting bases.
///
/// Adjacency of the cylinder in block form, rows/columns ordered B, B', C:
///
///     [ B       Ebb     Ebc  ]
///     [ Ebb^T   B       Ebpc ]
///     [ Ebc^T   Ebpc^T  C    ]
///
/// P is the action of the base-swapping automorphism on the inner vertices.
struct Cylinder {
  std::string name;
  IntMatrix B;     ///< base adjacency, |B| x |B|
  IntMatrix C;     ///< inner adjacency, |C| x |C| (possibly 0 x 0)
  IntMatrix Ebb;   ///< base-to-base' links, |B| x |B|
  IntMatrix Ebc;   ///< base-to-inner links, |B| x |C|
  IntMatrix Ebpc;  ///< base'-to-inner links, |B| x |C|
  IntMatrix P;     ///< permutation on inner vertices, |C| x |C|

  std::size_t base_size() const { return B.rows(); }
  std::size_t inner_size() const { return C.rows(); }
  bool has_inner() const { return inner_size() > 0; }

  /// Full (2|B| + |C|)-square adjacency of the cylinder as a graph.
  IntMatrix adjacency() const {
    const std::size_t b = base_size(), c = inner_size(), n = 2 * b + c;
    IntMatrix a(n, n, 0);
    for (std::size_t i = 0; i < b; ++i)
      for (std::size_t j = 0; j < b; ++j) {
        a(i, j) = a(b + i, b + j) = B(i, j);
        a(i, b + j) = a(b + j, i) = Ebb(i, j);
      }
    for (std::size_t i = 0; i < b; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        a(i, 2 * b + j) = a(2 * b + j, i) = Ebc(i, j);
        a(b + i, 2 * b + j) = a(2 * b + j, b + i) = Ebpc(i, j);
      }
    for (std::size_t i = 0; i < c; ++i)
      for (std::size_t j = 0; j < c; ++j) a(2 * b + i, 2 * b + j) = C(i, j);
    return a;
  }
};

namespace detail {

inline bool is_simple_adjacency(const IntMatrix& m) {
  if (!m.square() || !is_zero_one(m) || !m.symmetric()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (m(i, i)) return false;
  return true;
}

}  // namespace detail

/// Checks block shapes, 0/1 entries and the four swap relations
/// Ebb = Ebb^T, Ebpc = Ebc P, Ebc = Ebpc P, PC = CP.
/// Returns the first failing identity, or nullopt when the cylinder is valid.
inline std::optional<std::string> validate_bsymmetric(const Cylinder& c) {
  const std::size_t b = c.B.rows(), m = c.C.rows();
  if (!c.B.square()) return "B not square";
  if (!c.C.square()) return "C not square";
  if (c.Ebb.rows() != b || c.Ebb.cols() != b) return "Ebb shape mismatch";
  if (c.Ebc.rows() != b || c.Ebc.cols() != m) return "Ebc shape mismatch";
  if (c.Ebpc.rows() != b || c.Ebpc.cols() != m) return "Ebpc shape mismatch";
  if (c.P.rows() != m || c.P.cols() != m) return "P shape mismatch";
  if (!detail::is_simple_adjacency(c.B)) return "B not a simple adjacency matrix";
  if (!detail::is_simple_adjacency(c.C)) return "C not a simple adjacency matrix";
  if (!is_zero_one(c.Ebb) || !is_zero_one(c.Ebc) || !is_zero_one(c.Ebpc)) return "link block not 0/1";
  if (!is_permutation(c.P)) return "P not a permutation";
  if (!c.Ebb.symmetric()) return "Ebb not symmetric";
  if (!(c.Ebpc == c.Ebc * c.P)) return "Ebpc != Ebc P";
  if (!(c.Ebc == c.Ebpc * c.P)) return "Ebc != Ebpc P";
  if (!(c.P * c.C == c.C * c.P)) return "PC != CP";
  return std::nullopt;
}

inline void require_bsymmetric(const Cylinder& c) {
  if (auto v = validate_bsymmetric(c)) throw ValidationError("cylinder '" + c.name + "': " + *v);
}

/// True iff [Ebc; Ebpc] C^k [Ebc^T, Ebpc^T] is bsymmetric: symmetric blocks,
/// equal diagonal blocks and equal off-diagonal blocks.
inline bool link_power_bsymmetric(const Cylinder& c, unsigned k) {
  IntMatrix ck = IntMatrix::identity(c.inner_size());
  for (unsigned i = 0; i < k; ++i) ck = ck * c.C;
  const IntMatrix dd = c.Ebc * ck * c.Ebc.transpose();
  const IntMatrix da = c.Ebc * ck * c.Ebpc.transpose();
  const IntMatrix ad = c.Ebpc * ck * c.Ebc.transpose();
  const IntMatrix aa = c.Ebpc * ck * c.Ebpc.transpose();
  return dd == aa && da == ad && dd.symmetric() && da.symmetric();
}

/// Ordered list of cylinders sharing one labeled base.
class CoherentList {
 public:
  CoherentList() = default;
  explicit CoherentList(std::vector<Cylinder> cylinders) : cylinders_(std::move(cylinders)) {
    if (cylinders_.empty()) throw ArgumentError("coherent list needs at least one cylinder");
    for (const auto& c : cylinders_) require_bsymmetric(c);
    if (!coherent(cylinders_)) throw ValidationError("cylinders do not share an identical base");
  }

  static bool coherent(const std::vector<Cylinder>& cs) {
    for (const auto& c : cs)
      if (!(c.B == cs.front().B)) return false;
    return true;
  }

  std::size_t size() const { return cylinders_.size(); }
  const Cylinder& operator[](std::size_t i) const { return cylinders_.at(i); }
  const std::vector<Cylinder>& cylinders() const { return cylinders_; }
  const IntMatrix& base() const { return cylinders_.front().B; }
  std::size_t base_size() const { return base().rows(); }
  bool any_inner() const {
    for (const auto& c : cylinders_)
      if (c.has_inner()) return true;
    return false;
  }

  auto begin() const { return cylinders_.begin(); }
  auto end() const { return cylinders_.end(); }

 private:
  std::vector<Cylinder> cylinders_;
};

/// True iff all base blocks are identical under the fixed vertex labeling.
inline bool check_coherent(const std::vector<Cylinder>& cs) { return CoherentList::coherent(cs); }

}  // namespace cylspec
