#pragma once

#include <string>
#include <vector>

#include "cylspec/graph/graph.hpp"

namespace cylspec {

enum class TreeShape { Rooted, Unrooted };

inline std::string to_string(TreeShape s) { return s == TreeShape::Rooted ? "rooted" : "unrooted"; }

inline TreeShape parse_tree_shape(const std::string& s) {
  if (s == "rooted") return TreeShape::Rooted;
  if (s == "unrooted") return TreeShape::Unrooted;
  throw ArgumentError("tree shape must be 'rooted' or 'unrooted', got '" + s + "'");
}

/// Complete 3-regular tree of height h with level-major, left-to-right vertex order.
///
/// Rooted: one root with three children, every other internal vertex has two
/// children; level counts 1, 3, 6, 12, ...
/// Unrooted: two adjacent centers at level 0, each internal vertex has two
/// children; level counts 2, 4, 8, ...
class CubicTree {
 public:
  CubicTree(TreeShape shape, unsigned height) : shape_(shape), height_(height) {
    if (height < 1) throw ArgumentError("tree height must be at least 1");
    for (unsigned l = 0; l <= height; ++l) {
      std::size_t count = shape == TreeShape::Rooted ? (l == 0 ? 1 : 3 * (std::size_t{1} << (l - 1)))
                                                     : (std::size_t{2} << l);
      offsets_.push_back(total_);
      counts_.push_back(count);
      total_ += count;
    }
    children_.assign(total_, {});
    parent_.assign(total_, npos);
    for (unsigned l = 0; l < height; ++l)
      for (std::size_t p = 0; p < counts_[l]; ++p) {
        const std::size_t v = offsets_[l] + p;
        if (shape == TreeShape::Rooted && l == 0) {
          for (std::size_t c = 0; c < 3; ++c) link(v, offsets_[1] + c);
        } else {
          link(v, offsets_[l + 1] + 2 * p);
          link(v, offsets_[l + 1] + 2 * p + 1);
        }
      }
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  TreeShape shape() const { return shape_; }
  unsigned height() const { return height_; }
  std::size_t order() const { return total_; }
  const std::vector<std::size_t>& level_counts() const { return counts_; }
  std::size_t level_offset(unsigned l) const { return offsets_.at(l); }
  std::size_t leaf_count() const { return counts_.back(); }
  std::size_t leaf(std::size_t i) const {
    if (i >= leaf_count()) throw ArgumentError("leaf index out of range");
    return offsets_.back() + i;
  }
  const std::vector<std::size_t>& children(std::size_t v) const { return children_.at(v); }
  std::size_t parent(std::size_t v) const { return parent_.at(v); }

  Graph graph() const {
    std::vector<Edge> edges;
    for (std::size_t v = 0; v < total_; ++v)
      for (auto c : children_[v]) edges.emplace_back(v, c);
    if (shape_ == TreeShape::Unrooted) edges.emplace_back(0, 1);
    return Graph::from_edges(total_, std::move(edges));
  }

 private:
  void link(std::size_t p, std::size_t c) {
    children_[p].push_back(c);
    parent_[c] = p;
  }

  TreeShape shape_;
  unsigned height_;
  std::size_t total_ = 0;
  std::vector<std::size_t> offsets_, counts_;
  std::vector<std::vector<std::size_t>> children_;
  std::vector<std::size_t> parent_;
};

}  // namespace cylspec
