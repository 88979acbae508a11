#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cylspec/families/families.hpp"
#include "cylspec/spectra/oracle.hpp"

namespace cylspec::io {

using nlohmann::json;

inline constexpr const char* kSchema = "cylspec/1";

inline json tagged(const char* kind) { return json{{"schema", kSchema}, {"kind", kind}}; }

// ---- scalars and polynomials ------------------------------------------------

inline json to_json(const Polynomial& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back({c.get_num().get_str(10), c.get_den().get_str(10)});
  return json{{"coeffs", coeffs}};
}

inline Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_array() && j.size() == 2) {
    Integer num(j[0].is_string() ? j[0].get<std::string>() : std::to_string(j[0].get<long>()));
    Integer den(j[1].is_string() ? j[1].get<std::string>() : std::to_string(j[1].get<long>()));
    if (den == 0) throw ArgumentError("json: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  throw ArgumentError("json: expected a rational as integer, \"p/q\" string or [num, den] pair");
}

inline Polynomial polynomial_from_json(const json& j) {
  if (!j.is_object() || !j.contains("coeffs")) throw ArgumentError("json: polynomial needs a \"coeffs\" array");
  std::vector<Rational> c;
  for (const auto& e : j.at("coeffs")) c.push_back(rational_from_json(e));
  return Polynomial(std::move(c));
}

inline json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

inline IntMatrix matrix_from_json(const json& j, const char* what) {
  if (!j.is_array()) throw ArgumentError(std::string("json: ") + what + " must be an array of rows");
  const std::size_t r = j.size(), c = r ? j[0].size() : 0;
  IntMatrix m(r, c, 0);
  for (std::size_t i = 0; i < r; ++i) {
    if (!j[i].is_array() || j[i].size() != c) throw ArgumentError(std::string("json: ") + what + " is ragged");
    for (std::size_t k = 0; k < c; ++k) m(i, k) = j[i][k].get<std::int64_t>();
  }
  return m;
}

// ---- graphs and decompositions ------------------------------------------------

inline json edge_list(const Graph& g) {
  json e = json::array();
  for (auto [u, v] : g.edges()) e.push_back({u, v});
  return e;
}

inline json to_json(const Graph& g) {
  json j = tagged("graph");
  j["n"] = g.order();
  j["edges"] = edge_list(g);
  return j;
}

/// Accepts {"n", "edges"} or {"adjacency"}.
inline Graph graph_from_json(const json& j) {
  if (j.contains("adjacency")) return Graph::from_adjacency(matrix_from_json(j.at("adjacency"), "adjacency"));
  if (!j.contains("n") || !j.contains("edges")) throw ArgumentError("json: graph needs \"n\" and \"edges\" or \"adjacency\"");
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw ArgumentError("json: edges are [u, v] pairs");
    edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
  }
  return Graph::from_edges(j.at("n").get<std::size_t>(), edges);
}

inline json to_json(const Decomposition& d) {
  json j = tagged("decomposition");
  j["n"] = d.order();
  json parts = json::array();
  for (const auto& p : d.parts()) parts.push_back(edge_list(p));
  j["parts"] = parts;
  j["theta"] = d.theta();
  if (d.circulant()) j["circulant"] = {{"n", d.circulant()->n}, {"ks", d.circulant()->ks}};
  return j;
}

/// Accepts {"circulant": {"n", "ks"}} or {"n", "parts": [edge lists]}; a numeric
/// compatible numbering is computed for the latter.
inline Decomposition decomposition_from_json(const json& j, std::uint64_t seed = 1) {
  if (j.contains("circulant")) {
    const auto& c = j.at("circulant");
    return decompose_circulant(c.at("n").get<std::size_t>(), c.at("ks").get<std::vector<std::size_t>>());
  }
  if (!j.contains("n") || !j.contains("parts")) throw ArgumentError("json: decomposition needs \"circulant\" or \"n\" and \"parts\"");
  const auto n = j.at("n").get<std::size_t>();
  std::vector<Graph> parts;
  for (const auto& p : j.at("parts")) parts.push_back(graph_from_json(json{{"n", n}, {"edges", p}}));
  return decompose_numeric(std::move(parts), seed);
}

// ---- cylinders --------------------------------------------------------------

inline json to_json(const Cylinder& c) {
  return json{{"name", c.name}, {"B", to_json(c.B)},     {"C", to_json(c.C)},   {"Ebb", to_json(c.Ebb)},
              {"Ebc", to_json(c.Ebc)}, {"Ebpc", to_json(c.Ebpc)}, {"P", to_json(c.P)}};
}

/// A zoo address string, {"zoo": address}, or explicit named blocks.
inline Cylinder cylinder_from_json(const json& j) {
  if (j.is_string()) return cylinder_from_name(j.get<std::string>());
  if (j.contains("zoo")) return cylinder_from_name(j.at("zoo").get<std::string>());
  Cylinder c;
  c.name = j.value("name", std::string("custom"));
  c.B = matrix_from_json(j.at("B"), "B");
  c.Ebb = matrix_from_json(j.at("Ebb"), "Ebb");
  const std::size_t b = c.B.rows();
  c.C = j.contains("C") ? matrix_from_json(j.at("C"), "C") : IntMatrix(0, 0, 0);
  const std::size_t m = c.C.rows();
  c.Ebc = j.contains("Ebc") ? matrix_from_json(j.at("Ebc"), "Ebc") : IntMatrix(b, m, 0);
  c.Ebpc = j.contains("Ebpc") ? matrix_from_json(j.at("Ebpc"), "Ebpc") : IntMatrix(b, m, 0);
  c.P = j.contains("P") ? matrix_from_json(j.at("P"), "P") : IntMatrix(m, m, 0);
  if (c.Ebc.rows() == 0 && m == 0) c.Ebc = IntMatrix(b, 0, 0);
  if (c.Ebpc.rows() == 0 && m == 0) c.Ebpc = IntMatrix(b, 0, 0);
  require_bsymmetric(c);
  return c;
}

inline json to_json(const CoherentList& h) {
  json j = tagged("cylinders");
  json arr = json::array();
  for (const auto& c : h) arr.push_back(to_json(c));
  j["cylinders"] = arr;
  return j;
}

/// A bare array or {"cylinders": [...]}.
inline CoherentList cylinders_from_json(const json& j) {
  const json& arr = j.is_array() ? j : j.at("cylinders");
  std::vector<Cylinder> out;
  for (const auto& c : arr) out.push_back(cylinder_from_json(c));
  return CoherentList(std::move(out));
}

// ---- constructs and families --------------------------------------------------

inline json manifest_json(const Construct& c) {
  json m = json::array();
  for (const auto& o : c.manifest) {
    if (o.kind == VertexOrigin::Kind::Base)
      m.push_back({{"kind", "base"}, {"vertex", o.vertex}, {"slot", o.slot}});
    else
      m.push_back({{"kind", "inner"}, {"part", o.part}, {"edge", o.edge}, {"slot", o.slot}});
  }
  return m;
}

inline json to_json(const Construct& c) {
  json j = tagged("construct");
  j["order"] = c.graph.order();
  j["size"] = c.graph.size();
  j["base_size"] = c.base_size;
  j["adjacency"] = to_json(c.graph.adjacency());
  j["manifest"] = manifest_json(c);
  return j;
}

inline json to_json(const FamilySpec& f) {
  json j = tagged("family");
  j["name"] = f.name;
  j["parameters"] = f.parameters;
  j["decomposition"] = to_json(f.decomposition);
  j["cylinders"] = to_json(f.cylinders)["cylinders"];
  if (f.labeling) {
    j["labeling"] = {{"shape", to_string(f.labeling->shape)},
                     {"h", f.labeling->h},
                     {"n", f.labeling->n},
                     {"cosets", f.labeling->cosets}};
  }
  return j;
}

// ---- spectral reports ---------------------------------------------------------

inline json to_json(const FactoredCharpoly& f) {
  json j;
  j["regime"] = f.regime;
  json pre = json::array();
  for (const auto& [p, m] : f.prefactor) pre.push_back({{"poly", to_json(p)}, {"exponent", m}});
  j["prefactor"] = pre;
  j["factors"] = f.factors;
  if (f.factor_denominator) j["factor_denominator"] = to_json(*f.factor_denominator);
  j["rounding_residual"] = f.rounding_residual;
  j["precision_bits"] = f.precision_bits;
  return j;
}

inline json to_json(const OracleReport& r) {
  json j = tagged("spectrum");
  j["regime"] = to_string(r.regime);
  j["order"] = r.order;
  if (r.factored) {
    json f = to_json(*r.factored);
    for (auto it = f.begin(); it != f.end(); ++it)
      if (it.key() != "regime") j[it.key()] = it.value();
  } else {
    j["prefactor"] = json::array();
    j["factors"] = json::array();
    j["rounding_residual"] = 0.0;
  }
  j["product"] = to_json(r.theorem);
  j["oracle"] = to_json(r.oracle);
  j["match"] = r.match;
  j["max_coeff_diff"] = r.max_coeff_diff.get_str(10);
  j["eig_max_diff"] = r.eig_max_diff;
  return j;
}

// ---- files ---------------------------------------------------------------------

inline json parse(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ArgumentError(origin + ": invalid JSON: " + e.what());
  }
}

inline json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path);
}

}  // namespace cylspec::io
