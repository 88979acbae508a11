#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "cylspec/cylinder/cylinder.hpp"
#include "cylspec/graph/trees.hpp"

namespace cylspec {

namespace detail {

inline Cylinder no_inner(std::string name, IntMatrix base, IntMatrix ebb) {
  const std::size_t b = base.rows();
  return Cylinder{std::move(name), std::move(base), IntMatrix(0, 0), std::move(ebb),
                  IntMatrix(b, 0),  IntMatrix(b, 0),  IntMatrix(0, 0)};
}

inline IntMatrix single_link(std::size_t n, std::size_t i) {
  IntMatrix m(n, n, 0);
  m(i, i) = 1;
  return m;
}

inline Cylinder tree_cylinder(TreeShape shape, unsigned h, std::size_t i, const std::string& name) {
  CubicTree tree(shape, h);
  if (i >= tree.leaf_count())
    throw ArgumentError(name + ": leaf index " + std::to_string(i) + " out of range [0, " +
                        std::to_string(tree.leaf_count()) + ")");
  return no_inner(name, tree.graph().adjacency(), single_link(tree.order(), tree.leaf(i)));
}

}  // namespace detail

/// P_{k+2}: one-vertex bases joined through an inner path on k vertices (k = 0
/// gives a single base-base edge).
inline Cylinder path_cylinder(std::size_t k) {
  const std::string name = "path:" + std::to_string(k);
  if (k == 0) return detail::no_inner(name, IntMatrix(1, 1, 0), IntMatrix(1, 1, 1));
  IntMatrix c(k, k, 0);
  for (std::size_t i = 0; i + 1 < k; ++i) c(i, i + 1) = c(i + 1, i) = 1;
  IntMatrix ebc(1, k, 0), ebpc(1, k, 0);
  ebc(0, 0) = 1;
  ebpc(0, k - 1) = 1;
  return Cylinder{name, IntMatrix(1, 1, 0), std::move(c), IntMatrix(1, 1, 0), std::move(ebc), std::move(ebpc),
                  anti_identity(k)};
}

inline Cylinder identity_cylinder() { return detail::no_inner("identity", IntMatrix(2, 2, 0), IntMatrix::identity(2)); }
inline Cylinder twist_cylinder() { return detail::no_inner("twist", IntMatrix(2, 2, 0), anti_identity(2)); }

inline CoherentList identity_and_twist() { return CoherentList({identity_cylinder(), twist_cylinder()}); }

/// Cylinder with base K_t and a single link joining the i-th base vertices.
inline Cylinder pi_t_cylinder(std::size_t t, std::size_t i) {
  if (t < 1 || i >= t) throw ArgumentError("pit: need 0 <= i < t");
  IntMatrix kt(t, t, 1);
  for (std::size_t v = 0; v < t; ++v) kt(v, v) = 0;
  return detail::no_inner("pit:" + std::to_string(t) + ":" + std::to_string(i), std::move(kt),
                          detail::single_link(t, i));
}

/// The pair (cap, cup) on a K_2 base: cap links the second base vertices, cup the first.
inline Cylinder pi_cylinder(std::size_t which) {
  if (which > 1) throw ArgumentError("pi: index must be 0 or 1");
  auto c = pi_t_cylinder(2, 1 - which);
  c.name = "pi:" + std::to_string(which);
  return c;
}

inline CoherentList pi_cylinders() { return CoherentList({pi_cylinder(0), pi_cylinder(1)}); }

inline Cylinder tree_cylinder_rooted(unsigned h, std::size_t i) {
  return detail::tree_cylinder(TreeShape::Rooted, h, i, "treeR:" + std::to_string(h) + ":" + std::to_string(i));
}

inline Cylinder tree_cylinder_unrooted(unsigned h, std::size_t i) {
  return detail::tree_cylinder(TreeShape::Unrooted, h, i, "treeU:" + std::to_string(h) + ":" + std::to_string(i));
}

/// K_2 bases linked by a perfect matching, plus one inner vertex adjacent to
/// all four base vertices.
inline Cylinder myexample_cylinder() {
  IntMatrix k2 = anti_identity(2);
  IntMatrix link(2, 1, 1);
  return Cylinder{"myexample", k2, IntMatrix(1, 1, 0), IntMatrix::identity(2), link, link, IntMatrix::identity(1)};
}

/// A representative instance of every zoo constructor.
inline std::vector<Cylinder> zoo_catalog() {
  std::vector<Cylinder> out;
  for (std::size_t k = 0; k <= 5; ++k) out.push_back(path_cylinder(k));
  out.push_back(identity_cylinder());
  out.push_back(twist_cylinder());
  out.push_back(pi_cylinder(0));
  out.push_back(pi_cylinder(1));
  for (std::size_t t = 1; t <= 5; ++t)
    for (std::size_t i = 0; i < t; ++i) out.push_back(pi_t_cylinder(t, i));
  for (unsigned h = 1; h <= 3; ++h) {
    for (std::size_t i = 0; i < 3u << (h - 1); ++i) out.push_back(tree_cylinder_rooted(h, i));
    for (std::size_t i = 0; i < 2u << h; ++i) out.push_back(tree_cylinder_unrooted(h, i));
  }
  out.push_back(myexample_cylinder());
  return out;
}

/// Parses a zoo address: path:k, pi:0, pi:1, pit:t:i, treeR:h:i, treeU:h:i,
/// identity, twist, myexample.
inline Cylinder cylinder_from_name(const std::string& spec) {
  std::vector<std::string> f;
  {
    std::stringstream ss(spec);
    std::string part;
    while (std::getline(ss, part, ':')) f.push_back(part);
  }
  if (f.empty()) throw ArgumentError("empty cylinder name");
  auto num = [&](std::size_t idx) -> std::size_t {
    if (idx >= f.size()) throw ArgumentError("cylinder '" + spec + "': missing parameter");
    const std::string& s = f[idx];
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 9)
      throw ArgumentError("cylinder '" + spec + "': bad parameter '" + s + "'");
    return std::stoul(s);
  };
  auto arity = [&](std::size_t n) {
    if (f.size() != n) throw ArgumentError("cylinder '" + spec + "': expected " + std::to_string(n - 1) + " parameters");
  };
  const std::string& kind = f[0];
  if (kind == "identity") return arity(1), identity_cylinder();
  if (kind == "twist") return arity(1), twist_cylinder();
  if (kind == "myexample") return arity(1), myexample_cylinder();
  if (kind == "path") return arity(2), path_cylinder(num(1));
  if (kind == "pi") return arity(2), pi_cylinder(num(1));
  if (kind == "pit") return arity(3), pi_t_cylinder(num(1), num(2));
  if (kind == "treeR") return arity(3), tree_cylinder_rooted(static_cast<unsigned>(num(1)), num(2));
  if (kind == "treeU") return arity(3), tree_cylinder_unrooted(static_cast<unsigned>(num(1)), num(2));
  throw ArgumentError("unknown cylinder '" + spec + "'");
}

}  // namespace cylspec
