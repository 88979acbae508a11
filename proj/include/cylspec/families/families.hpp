#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cylspec/algebra/eigen.hpp"
#include "cylspec/construct/assemble.hpp"
#include "cylspec/cylinder/zoo.hpp"
#include "cylspec/graph/decomposition.hpp"
#include "cylspec/spectra/factored.hpp"
#include "cylspec/treemix/treemix.hpp"

namespace cylspec {

/// Coset labels of a cubic tree by subsets of Z*_n, one sorted residue list per
/// tree vertex.
struct TreeLabeling {
  TreeShape shape;
  unsigned h;
  std::uint64_t n;
  std::vector<std::vector<std::uint64_t>> cosets;
};

struct FamilySpec {
  std::string name;
  std::map<std::string, std::string> parameters;
  Decomposition decomposition;
  CoherentList cylinders;
  std::optional<TreeLabeling> labeling;  ///< set for the symmetric tree families
};

namespace detail {

inline std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

/// Binary string of the given length for big-endian value v ('0'/'1', first char most significant).
inline std::string bits_of(std::size_t v, unsigned len) {
  std::string s(len, '0');
  for (unsigned k = 0; k < len; ++k)
    if ((v >> (len - 1 - k)) & 1) s[k] = '1';
  return s;
}

}  // namespace detail

using modular::is_prime;

/// Smallest generator of Z*_p for a prime p.
inline std::uint64_t smallest_primitive_root(std::uint64_t p) {
  if (!is_prime(p)) throw ArgumentError("smallest_primitive_root: " + std::to_string(p) + " is not prime");
  if (p == 2) return 1;
  std::vector<std::uint64_t> factors;
  std::uint64_t m = p - 1;
  for (std::uint64_t q = 2; q * q <= m; ++q)
    if (m % q == 0) {
      factors.push_back(q);
      while (m % q == 0) m /= q;
    }
  if (m > 1) factors.push_back(m);
  for (std::uint64_t g = 2;; ++g) {
    bool ok = true;
    for (auto q : factors) ok = ok && modular::powmod(g, (p - 1) / q, p) != 1;
    if (ok) return g;
  }
}

/// gamma(s) = a^{(s^)_2} <a^{2^{|s|}}> on binary strings of length <= h, in a cyclic
/// group of order N. The offset reads s with its first character as least
/// significant bit.
class CyclicLabeling {
 public:
  struct Coset {
    std::uint64_t offset;
    std::uint64_t modulus;
    friend bool operator==(const Coset&, const Coset&) = default;
  };

  CyclicLabeling(unsigned h, std::uint64_t N) : h_(h), n_(N) {
    if (h >= 63 || N == 0 || N % (std::uint64_t{1} << h) != 0)
      throw ArgumentError("cyclic_labeling: 2^h must divide N (h=" + std::to_string(h) + ", N=" + std::to_string(N) + ")");
  }

  unsigned height() const { return h_; }
  std::uint64_t group_order() const { return n_; }

  Coset coset_of(const std::string& s) const {
    if (s.size() > h_) throw ArgumentError("cyclic_labeling: string longer than the tree height");
    std::uint64_t off = 0;
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (s[k] != '0' && s[k] != '1') throw ArgumentError("cyclic_labeling: vertex strings are binary");
      if (s[k] == '1') off |= std::uint64_t{1} << k;
    }
    return {off, std::uint64_t{1} << s.size()};
  }

  /// Exponents e in [0, N) with a^e in gamma(s).
  std::vector<std::uint64_t> exponents(const std::string& s) const {
    auto c = coset_of(s);
    std::vector<std::uint64_t> out;
    for (std::uint64_t e = c.offset; e < n_; e += c.modulus) out.push_back(e);
    return out;
  }

  /// gamma(s) is the disjoint union of gamma(s0) and gamma(s1) at every internal vertex.
  bool union_property() const {
    for (unsigned len = 0; len < h_; ++len)
      for (std::size_t v = 0; v < (std::size_t{1} << len); ++v) {
        const std::string s = detail::bits_of(v, len);
        auto a = exponents(s + "0"), b = exponents(s + "1");
        std::vector<std::uint64_t> u;
        std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
        std::vector<std::uint64_t> inter;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));
        if (!inter.empty() || u != exponents(s)) return false;
      }
    return true;
  }

 private:
  unsigned h_;
  std::uint64_t n_;
};

inline CyclicLabeling cyclic_labeling(unsigned h, std::uint64_t N) { return CyclicLabeling(h, N); }

/// GI(n; k_0..k_{t-1}): circulant parts C_n(k_i) with the cylinder pi_{t,i} on part i.
inline FamilySpec gi_graph(std::size_t n, const std::vector<std::size_t>& ks) {
  if (n < 3) throw ArgumentError("gi_graph: n must be at least 3");
  if (ks.empty()) throw ArgumentError("gi_graph: need at least one step");
  std::set<std::size_t> seen;
  for (auto k : ks) {
    if (k < 1 || 2 * k >= n) throw ArgumentError("gi_graph: steps must satisfy 1 <= k < n/2");
    if (!seen.insert(k).second) throw ArgumentError("gi_graph: steps must be distinct");
  }
  std::vector<Cylinder> cyls;
  for (std::size_t i = 0; i < ks.size(); ++i) cyls.push_back(pi_t_cylinder(ks.size(), i));
  return FamilySpec{"gi", {{"n", std::to_string(n)}, {"ks", detail::join(ks)}}, decompose_circulant(n, ks),
                    CoherentList(std::move(cyls)), std::nullopt};
}

/// The 2n values cos(2jk pi/n) + cos(2jl pi/n) ± sqrt((cos(2jk pi/n) - cos(2jl pi/n))^2 + 1), j = 1..n.
inline std::vector<double> i_graph_eigenvalues(std::size_t n, std::size_t k, std::size_t l) {
  if (k == l) throw ArgumentError("i_graph_eigenvalues: k and l must be distinct");
  if (n < 3) throw ArgumentError("i_graph_eigenvalues: n must be at least 3");
  std::vector<double> out;
  for (std::size_t j = 1; j <= n; ++j) {
    const double a = std::cos(2 * std::numbers::pi * double(j * k % n) / double(n));
    const double b = std::cos(2 * std::numbers::pi * double(j * l % n) / double(n));
    const double r = std::sqrt((a - b) * (a - b) + 1);
    out.push_back(a + b + r);
    out.push_back(a + b - r);
  }
  return out;
}

inline FamilySpec coxeter() {
  return FamilySpec{"coxeter",
                    {},
                    decompose_circulant(7, {1, 2, 3}),
                    CoherentList({tree_cylinder_rooted(1, 0), tree_cylinder_rooted(1, 1), tree_cylinder_rooted(1, 2)}),
                    std::nullopt};
}

namespace detail {

inline std::vector<std::uint64_t> coset_elements(std::uint64_t n, std::uint64_t mult, std::uint64_t gen,
                                                 const std::vector<std::uint64_t>& exps) {
  std::vector<std::uint64_t> out;
  for (auto e : exps) out.push_back(modular::mulmod(mult, modular::powmod(gen, e, n), n));
  std::sort(out.begin(), out.end());
  return out;
}

/// Leaf cosets are {g, -g}; the step is the representative in 1..(n-1)/2.
inline std::vector<std::size_t> leaf_steps(const TreeLabeling& lab) {
  const CubicTree t(lab.shape, lab.h);
  std::vector<std::size_t> ks;
  for (std::size_t i = 0; i < t.leaf_count(); ++i) {
    const auto& c = lab.cosets[t.leaf(i)];
    if (c.size() != 2 || c[0] + c[1] != lab.n)
      throw ConsistencyError("leaf coset " + std::to_string(i) + " is not of the form {g, -g}");
    ks.push_back(static_cast<std::size_t>(c[0]));
  }
  return ks;
}

inline FamilySpec tree_family(std::string name, TreeLabeling lab, unsigned h) {
  auto ks = leaf_steps(lab);
  std::vector<Cylinder> cyls;
  for (std::size_t i = 0; i < ks.size(); ++i)
    cyls.push_back(lab.shape == TreeShape::Rooted ? tree_cylinder_rooted(h, i) : tree_cylinder_unrooted(h, i));
  const auto n = static_cast<std::size_t>(lab.n);
  return FamilySpec{std::move(name),
                    {{"h", std::to_string(h)}, {"n", std::to_string(n)}, {"ks", join(ks)}},
                    decompose_circulant(n, ks),
                    CoherentList(std::move(cyls)),
                    std::move(lab)};
}

}  // namespace detail

/// n = 2^{h+2} + 1 prime, a the smallest primitive root. The depth-(h+1) binary tree
/// labeled by gamma loses its root and becomes the unrooted tree of height h.
inline FamilySpec symmetric_family_unrooted(unsigned h) {
  if (h < 1 || h > 20) throw ArgumentError("symmetric_family_unrooted: h must be in [1, 20]");
  const std::uint64_t n = (std::uint64_t{1} << (h + 2)) + 1;
  if (!is_prime(n))
    throw UnsupportedError("symmetric_family_unrooted: n = 2^(h+2)+1 = " + std::to_string(n) + " is composite for h = " +
                           std::to_string(h));
  const std::uint64_t a = smallest_primitive_root(n);
  const CyclicLabeling gamma(h + 1, n - 1);
  const CubicTree t(TreeShape::Unrooted, h);
  TreeLabeling lab{TreeShape::Unrooted, h, n, std::vector<std::vector<std::uint64_t>>(t.order())};
  for (unsigned l = 0; l <= h; ++l)
    for (std::size_t p = 0; p < t.level_counts()[l]; ++p)
      lab.cosets[t.level_offset(l) + p] = detail::coset_elements(n, 1, a, gamma.exponents(detail::bits_of(p, l + 1)));
  auto spec = detail::tree_family("sym-unrooted", std::move(lab), h);
  spec.parameters["a"] = std::to_string(a);
  return spec;
}

/// n = 3 * 2^h + 1 prime, a0 the smallest primitive root, a = a0^3, b = a0^{(n-1)/3}.
/// The root carries the whole group, child s carries b^s <a>, and each subtree
/// below carries gamma translated by b^s.
inline FamilySpec symmetric_family_rooted(unsigned h) {
  if (h < 1 || h > 20) throw ArgumentError("symmetric_family_rooted: h must be in [1, 20]");
  const std::uint64_t n = 3 * (std::uint64_t{1} << h) + 1;
  if (!is_prime(n))
    throw UnsupportedError("symmetric_family_rooted: n = 3*2^h+1 = " + std::to_string(n) + " is composite for h = " +
                           std::to_string(h));
  const std::uint64_t a0 = smallest_primitive_root(n);
  const std::uint64_t a = modular::powmod(a0, 3, n), b = modular::powmod(a0, (n - 1) / 3, n);
  const CyclicLabeling gamma(h - 1, (n - 1) / 3);
  const CubicTree t(TreeShape::Rooted, h);
  TreeLabeling lab{TreeShape::Rooted, h, n, std::vector<std::vector<std::uint64_t>>(t.order())};
  for (std::uint64_t g = 1; g < n; ++g) lab.cosets[0].push_back(g);
  for (unsigned l = 1; l <= h; ++l) {
    const std::size_t per = std::size_t{1} << (l - 1);
    for (std::size_t p = 0; p < t.level_counts()[l]; ++p) {
      const std::uint64_t bs = modular::powmod(b, p / per, n);
      lab.cosets[t.level_offset(l) + p] =
          detail::coset_elements(n, bs, a, gamma.exponents(detail::bits_of(p % per, l - 1)));
    }
  }
  auto spec = detail::tree_family("sym-rooted", std::move(lab), h);
  spec.parameters["a"] = std::to_string(a);
  spec.parameters["b"] = std::to_string(b);
  return spec;
}

/// Multiplying every coset by g must permute each tree level. Returns the induced
/// leaf permutation, or nullopt if some translated coset is not a coset of the
/// same level.
inline std::optional<std::vector<std::size_t>> translation_leaf_permutation(const TreeLabeling& lab, std::uint64_t g) {
  if (g % lab.n == 0) throw ArgumentError("translation: g must be a unit");
  const CubicTree t(lab.shape, lab.h);
  std::vector<std::size_t> leaf_perm;
  for (unsigned l = 0; l <= lab.h; ++l) {
    const std::size_t off = t.level_offset(l), cnt = t.level_counts()[l];
    std::map<std::vector<std::uint64_t>, std::size_t> index;
    for (std::size_t p = 0; p < cnt; ++p) index[lab.cosets[off + p]] = p;
    for (std::size_t p = 0; p < cnt; ++p) {
      std::vector<std::uint64_t> moved;
      for (auto x : lab.cosets[off + p]) moved.push_back(modular::mulmod(x, g, lab.n));
      std::sort(moved.begin(), moved.end());
      auto it = index.find(moved);
      if (it == index.end()) return std::nullopt;
      if (l == lab.h) leaf_perm.push_back(it->second);
    }
  }
  return leaf_perm;
}

struct RamanujanReport {
  bool is_ramanujan = false;
  double second = 0;
  double bound = 0;
};

/// Largest |lambda| among eigenvalues strictly inside (-d, d), against 2 sqrt(d - 1).
inline RamanujanReport ramanujan_check(const Graph& g, std::size_t d) {
  if (g.regular_degree() != static_cast<long>(d)) throw ArgumentError("ramanujan_check: graph is not " + std::to_string(d) + "-regular");
  if (!is_connected(g)) throw ArgumentError("ramanujan_check: graph is not connected");
  RamanujanReport r;
  const double dd = static_cast<double>(d);
  for (double e : eig_symmetric(g.adjacency()))
    if (std::abs(e) < dd - 1e-8) r.second = std::max(r.second, std::abs(e));
  r.bound = 2 * std::sqrt(dd - 1);
  r.is_ramanujan = r.second <= r.bound + 1e-9;
  return r;
}

struct InnerVertexReport {
  std::size_t n = 0, d = 0, order = 0;
  std::size_t zero_multiplicity = 0;
  long expected_zero_multiplicity = 0;  ///< nd/2 - n
  std::size_t displayed_zero_multiplicity = 0;  ///< nd/2, as the printed spectrum lists it
  bool zero_ok = false;
  bool listed_values_present = false;  ///< every theta-1 and quadratic root found within tol
  double predicted_spectrum_diff = 0;  ///< multiset distance from the fully predicted spectrum
  std::vector<std::string> discrepancies;
};

/// Assembles G with the myexample cylinder on every edge and checks the oracle
/// spectrum against 0^{nd/2 - n}, theta_j - 1 and the roots of
/// x^2 - (theta_j + 1) x - 2 (theta_j + d).
inline InnerVertexReport inner_vertex_demo(const Graph& g, double tol = 1e-8) {
  const long deg = g.regular_degree();
  if (deg < 2) throw ArgumentError("inner_vertex_demo: base graph must be d-regular with d >= 2");
  InnerVertexReport rep;
  rep.n = g.order();
  rep.d = static_cast<std::size_t>(deg);
  const Construct c = assemble(decompose_numeric({g}), CoherentList({myexample_cylinder()}));
  rep.order = c.graph.order();
  const auto spectrum = eig_symmetric(c.graph.adjacency());
  for (double e : spectrum)
    if (std::abs(e) <= tol) ++rep.zero_multiplicity;
  rep.expected_zero_multiplicity = static_cast<long>(rep.n * rep.d / 2) - static_cast<long>(rep.n);
  rep.displayed_zero_multiplicity = rep.n * rep.d / 2;
  rep.zero_ok = static_cast<long>(rep.zero_multiplicity) >= rep.expected_zero_multiplicity;

  std::vector<double> predicted(static_cast<std::size_t>(std::max(0L, rep.expected_zero_multiplicity)), 0.0);
  std::vector<double> listed;
  for (double th : eig_symmetric(g.adjacency())) {
    const double disc = std::sqrt((th + 1) * (th + 1) + 8 * (th + deg));
    listed.insert(listed.end(), {th - 1, (th + 1 + disc) / 2, (th + 1 - disc) / 2});
  }
  predicted.insert(predicted.end(), listed.begin(), listed.end());
  rep.listed_values_present = std::all_of(listed.begin(), listed.end(), [&](double v) {
    return std::any_of(spectrum.begin(), spectrum.end(), [&](double e) { return std::abs(e - v) <= tol; });
  });
  rep.predicted_spectrum_diff =
      predicted.size() == spectrum.size() ? multiset_distance(predicted, spectrum) : INFINITY;

  if (rep.zero_multiplicity != rep.displayed_zero_multiplicity)
    rep.discrepancies.push_back("eigenvalue 0 has multiplicity " + std::to_string(rep.zero_multiplicity) +
                                ", the displayed spectrum lists nd/2 = " +
                                std::to_string(rep.displayed_zero_multiplicity));
  if (rep.displayed_zero_multiplicity + 3 * rep.n != rep.order)
    rep.discrepancies.push_back("displayed eigenvalue count nd/2 + 3n = " +
                                std::to_string(rep.displayed_zero_multiplicity + 3 * rep.n) + " differs from order " +
                                std::to_string(rep.order));
  if (!rep.listed_values_present) rep.discrepancies.push_back("some listed eigenvalue is missing from the oracle spectrum");
  return rep;
}

struct FamilyFactorCheck {
  double per_j_spread = 0;       ///< max coefficient gap between factor j and factor 1, j < n
  bool uniform_term_match = false;  ///< factor j = n equals uniform_term exactly
};

/// Per-j factor structure of a symmetric tree family.
inline FamilyFactorCheck family_factor_check(const FamilySpec& spec, const FactoredCharpoly& f) {
  if (!spec.labeling) throw ArgumentError("family_factor_check: not a symmetric tree family");
  FamilyFactorCheck out;
  const std::size_t n = f.factors.size();
  for (std::size_t j = 1; j + 1 < n; ++j) {
    if (f.factors[j].size() != f.factors[0].size()) return out;
    for (std::size_t k = 0; k < f.factors[0].size(); ++k)
      out.per_j_spread = std::max(out.per_j_spread, std::abs(f.factors[j][k] - f.factors[0][k]));
  }
  const auto& last = f.factors_exact.at(n - 1);
  out.uniform_term_match = last && *last == uniform_term(spec.labeling->shape, spec.labeling->h);
  return out;
}

}  // namespace cylspec
