#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "cylspec/algebra/matrix.hpp"
#include "cylspec/error.hpp"

namespace cylspec {

using Edge = std::pair<std::size_t, std::size_t>;

/// Simple undirected graph with a fixed vertex order.
///
/// Invariants: the adjacency matrix is symmetric 0/1 with zero diagonal and
/// `edges()` lists every edge once as (u, v) with u < v, lexicographically sorted.
class Graph {
 public:
  Graph() = default;

  static Graph from_edges(std::size_t n, std::vector<Edge> edges) {
    Graph g;
    g.adj_ = IntMatrix(n, n, 0);
    for (auto& [u, v] : edges) {
      if (u >= n || v >= n) throw ArgumentError("edge endpoint out of range");
      if (u == v) throw ValidationError("loop at vertex " + std::to_string(u));
      if (u > v) std::swap(u, v);
      if (g.adj_(u, v)) throw ValidationError("repeated edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
      g.adj_(u, v) = g.adj_(v, u) = 1;
    }
    std::sort(edges.begin(), edges.end());
    g.edges_ = std::move(edges);
    return g;
  }

  static Graph from_adjacency(const IntMatrix& a) {
    if (!a.square()) throw DimensionError("adjacency matrix is not square");
    if (!is_zero_one(a) || !a.symmetric()) throw ValidationError("adjacency must be symmetric 0/1");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (a(i, i)) throw ValidationError("adjacency has a loop at " + std::to_string(i));
      for (std::size_t j = i + 1; j < a.cols(); ++j)
        if (a(i, j)) edges.emplace_back(i, j);
    }
    return from_edges(a.rows(), std::move(edges));
  }

  std::size_t order() const { return adj_.rows(); }
  std::size_t size() const { return edges_.size(); }
  const IntMatrix& adjacency() const { return adj_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool adjacent(std::size_t u, std::size_t v) const { return adj_(u, v) != 0; }

  std::size_t degree(std::size_t v) const {
    std::size_t d = 0;
    for (std::size_t j = 0; j < order(); ++j) d += static_cast<std::size_t>(adj_(v, j));
    return d;
  }

  std::vector<std::size_t> degrees() const {
    std::vector<std::size_t> d(order());
    for (std::size_t v = 0; v < order(); ++v) d[v] = degree(v);
    return d;
  }

  /// The common degree, or -1 when the graph is not regular.
  long regular_degree() const {
    if (order() == 0) return 0;
    auto d = degrees();
    for (auto x : d)
      if (x != d[0]) return -1;
    return static_cast<long>(d[0]);
  }

  std::vector<std::size_t> neighbors(std::size_t v) const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < order(); ++j)
      if (adj_(v, j)) out.push_back(j);
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  IntMatrix adj_;
  std::vector<Edge> edges_;
};

inline Graph complete_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edges(n, std::move(e));
}

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, std::move(e));
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw ArgumentError("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
  return Graph::from_edges(n, std::move(e));
}

/// Circulant C_n(k_0, ..., k_{t-1}): uv is an edge iff v = u ± k_i (mod n).
inline Graph circulant(std::size_t n, const std::vector<std::size_t>& ks) {
  if (n < 3) throw ArgumentError("circulant: n must be at least 3");
  std::vector<bool> seen(n, false);
  for (auto k : ks) {
    if (k < 1 || 2 * k >= n) throw ArgumentError("circulant: step " + std::to_string(k) + " not in [1, n/2)");
    if (seen[k]) throw ArgumentError("circulant: repeated step " + std::to_string(k));
    seen[k] = true;
  }
  std::vector<Edge> e;
  for (auto k : ks)
    for (std::size_t u = 0; u < n; ++u) {
      std::size_t v = (u + k) % n;
      e.emplace_back(std::min(u, v), std::max(u, v));
    }
  return Graph::from_edges(n, std::move(e));
}

inline bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  std::vector<bool> seen(g.order(), false);
  std::queue<std::size_t> q;
  q.push(0);
  seen[0] = true;
  std::size_t count = 1;
  while (!q.empty()) {
    auto v = q.front();
    q.pop();
    for (auto w : g.neighbors(v))
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        q.push(w);
      }
  }
  return count == g.order();
}

/// Length of a shortest cycle (0 for forests), by BFS from every vertex.
inline std::size_t girth(const Graph& g) {
  const std::size_t n = g.order();
  std::size_t best = 0;
  std::vector<std::vector<std::size_t>> nbr(n);
  for (std::size_t v = 0; v < n; ++v) nbr[v] = g.neighbors(v);
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<long> dist(n, -1), parent(n, -1);
    std::queue<std::size_t> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      auto v = q.front();
      q.pop();
      for (auto w : nbr[v]) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          parent[w] = static_cast<long>(v);
          q.push(w);
        } else if (parent[v] != static_cast<long>(w)) {
          auto len = static_cast<std::size_t>(dist[v] + dist[w] + 1);
          if (best == 0 || len < best) best = len;
        }
      }
    }
  }
  return best;
}

inline std::map<std::size_t, std::size_t> degree_histogram(const Graph& g) {
  std::map<std::size_t, std::size_t> h;
  for (auto d : g.degrees()) ++h[d];
  return h;
}

}  // namespace cylspec
