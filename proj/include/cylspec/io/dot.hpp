#pragma once

#include <sstream>
#include <string>

#include "cylspec/construct/assemble.hpp"

namespace cylspec::io {

inline std::string to_dot(const Graph& g, const std::string& name = "G") {
  std::ostringstream os;
  os << "graph \"" << name << "\" {\n";
  for (std::size_t v = 0; v < g.order(); ++v) os << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

/// Base vertices are labeled v.b (vertex of G, base slot); inner vertices
/// i:e.c (part, edge, slot) and drawn as boxes.
inline std::string to_dot(const Construct& c, const std::string& name = "construct") {
  std::ostringstream os;
  os << "graph \"" << name << "\" {\n";
  for (std::size_t v = 0; v < c.manifest.size(); ++v) {
    const auto& o = c.manifest[v];
    if (o.kind == VertexOrigin::Kind::Base)
      os << "  " << v << " [label=\"" << o.vertex << "." << o.slot << "\"];\n";
    else
      os << "  " << v << " [label=\"" << o.part << ":" << o.edge << "." << o.slot << "\", shape=box];\n";
  }
  for (auto [u, v] : c.graph.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace cylspec::io
