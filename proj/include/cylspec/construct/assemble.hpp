#pragma once

#include <map>
#include <string>
#include <vector>

#include "cylspec/cylinder/cylinder.hpp"
#include "cylspec/graph/decomposition.hpp"

namespace cylspec {

/// Where a construct vertex came from.
struct VertexOrigin {
  enum class Kind { Base, Inner } kind;
  std::size_t vertex = 0;  ///< base: vertex of G
  std::size_t slot = 0;    ///< base slot b, or inner slot c
  std::size_t part = 0;    ///< inner only: part index i
  std::size_t edge = 0;    ///< inner only: index of the edge within part i (lex order)
};

/// The assembled graph of a cylindrical construction together with its vertex manifest.
struct Construct {
  Graph graph;
  std::size_t base_size = 0;
  std::vector<VertexOrigin> manifest;
  std::vector<std::size_t> inner_offsets;  ///< first construct vertex of each part's inner block

  std::size_t base_index(std::size_t v, std::size_t b) const { return v * base_size + b; }
};

/// Builds the adjacency of G ⊠ H block by block. Vertex order: base copies
/// (v, b) as v|B| + b; then inner vertices grouped by part, then by edge of
/// G_i in lexicographic order, then by inner slot. Each edge (u, v), u < v,
/// attaches B at u and B' at v.
inline Construct assemble(const Decomposition& d, const CoherentList& h) {
  if (h.size() != d.t())
    throw ArgumentError("decomposition has " + std::to_string(d.t()) + " parts but " + std::to_string(h.size()) +
                        " cylinders were given");
  const std::size_t n = d.order(), b = h.base_size();
  std::size_t total = n * b;
  Construct out;
  out.base_size = b;
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t s = 0; s < b; ++s) out.manifest.push_back({VertexOrigin::Kind::Base, v, s, 0, 0});
  for (std::size_t i = 0; i < d.t(); ++i) {
    out.inner_offsets.push_back(total);
    const auto& edges = d.parts()[i].edges();
    for (std::size_t e = 0; e < edges.size(); ++e)
      for (std::size_t c = 0; c < h[i].inner_size(); ++c)
        out.manifest.push_back({VertexOrigin::Kind::Inner, 0, c, i, e});
    total += edges.size() * h[i].inner_size();
  }

  IntMatrix a(total, total, 0);
  auto link = [&](std::size_t x, std::size_t y) {
    if (x == y) throw ValidationError("assembly produced a loop at vertex " + std::to_string(x));
    if (a(x, y)) throw ValidationError("assembly produced a repeated edge (" + std::to_string(x) + "," +
                                       std::to_string(y) + ")");
    a(x, y) = a(y, x) = 1;
  };

  const IntMatrix& base = h.base();
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t p = 0; p < b; ++p)
      for (std::size_t q = p + 1; q < b; ++q)
        if (base(p, q)) link(out.base_index(v, p), out.base_index(v, q));

  for (std::size_t i = 0; i < d.t(); ++i) {
    const Cylinder& cyl = h[i];
    const auto& edges = d.parts()[i].edges();
    const std::size_t m = cyl.inner_size();
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const auto [u, v] = edges[e];
      for (std::size_t p = 0; p < b; ++p)
        for (std::size_t q = 0; q < b; ++q)
          if (cyl.Ebb(p, q)) link(out.base_index(u, p), out.base_index(v, q));
      const std::size_t inner0 = out.inner_offsets[i] + e * m;
      for (std::size_t p = 0; p < b; ++p)
        for (std::size_t c = 0; c < m; ++c) {
          if (cyl.Ebc(p, c)) link(out.base_index(u, p), inner0 + c);
          if (cyl.Ebpc(p, c)) link(out.base_index(v, p), inner0 + c);
        }
      for (std::size_t c = 0; c < m; ++c)
        for (std::size_t c2 = c + 1; c2 < m; ++c2)
          if (cyl.C(c, c2)) link(inner0 + c, inner0 + c2);
    }
  }
  out.graph = Graph::from_adjacency(a);
  return out;
}

inline std::size_t expected_order(const Decomposition& d, const CoherentList& h) {
  std::size_t total = d.order() * h.base_size();
  for (std::size_t i = 0; i < d.t(); ++i) total += d.parts()[i].size() * h[i].inner_size();
  return total;
}

inline std::map<std::size_t, std::size_t> degree_histogram(const Construct& c) { return degree_histogram(c.graph); }

}  // namespace cylspec
