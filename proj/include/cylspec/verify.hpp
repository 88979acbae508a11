#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cylspec/families/families.hpp"
#include "cylspec/spectra/oracle.hpp"
#include "cylspec/spectra/subdivision.hpp"
#include "cylspec/treemix/treemix.hpp"

namespace cylspec {

struct VerifyOptions {
  std::uint64_t seed = 42;
  unsigned jobs = 1;
  double tol = 1e-6;
  int perturb = 0;  ///< criterion whose theorem-side polynomial gets +1 added (mutation test)
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

namespace verify_detail {

/// Portable draws: the standard distributions are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t below(std::uint64_t n) { return eng_() % n; }
  long between(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
  bool coin() { return below(2) == 1; }

 private:
  std::mt19937_64 eng_;
};

inline Polynomial lin(long a) { return from_integers({-a, 1}); }

inline Polynomial coxeter_golden() {
  Polynomial inner = lin(2) * lin(-1) * from_integers({-1, 2, 1});
  return lin(3) * lin(2).pow(2) * lin(-1) * inner.pow(6);
}

inline Polynomial eightleaves_golden() {
  Polynomial big = from_integers({7, -12, -116, 116, 345, -189, -319, 88, 116, -16, -18, 1, 1});
  return lin(3) * lin(2).pow(4) * from_integers({-2, -2, 1}).pow(2) * from_integers({-2, 0, 1}).pow(17) *
         from_integers({2, -6, -1, 1}) * big.pow(16);
}

inline Polynomial sixleaves_golden() {
  Polynomial big = from_integers({-10, 12, 69, -55, -115, 45, 65, -12, -14, 1, 1});
  return lin(3) * lin(1) * lin(-2) * lin(2).pow(3) * from_integers({-2, -2, 1}).pow(2) * big.pow(12);
}

inline Polynomial maybe_perturb(Polynomial p, const VerifyOptions& o, int id) {
  if (o.perturb == id) p += Polynomial::constant(1);
  return p;
}

inline SpectraOptions spectra_options(const VerifyOptions& o) {
  SpectraOptions s;
  s.jobs = o.jobs;
  s.tol = o.tol;
  return s;
}

struct GoldenOutcome {
  bool ok = false;
  std::string detail;
  Construct construct;
};

/// Theorem side and exact oracle of a family against its golden polynomial.
inline GoldenOutcome family_golden(const FamilySpec& f, const Polynomial& golden, const VerifyOptions& o, int id) {
  GoldenOutcome out;
  out.construct = assemble(f.decomposition, f.cylinders);
  auto fc = charpoly_no_inner(f.decomposition, f.cylinders, spectra_options(o));
  const Polynomial theorem = maybe_perturb(*fc.product_exact, o, id);
  const Polynomial oracle = charpoly_exact(out.construct.graph.adjacency());
  const bool th = theorem == golden, orc = oracle == golden, res = fc.rounding_residual < 1e-6;
  out.ok = th && orc && res;
  std::ostringstream d;
  d << out.construct.graph.order() << " vertices; theorem " << (th ? "=" : "!=") << " golden (residual "
    << fc.rounding_residual << ", " << fc.precision_bits << " bits); oracle " << (orc ? "=" : "!=") << " golden";
  out.detail = d.str();
  return out;
}

/// Random graph on 2..7 vertices with no isolated vertex.
inline Graph random_graph(Rng& rng) {
  for (;;) {
    const std::size_t n = static_cast<std::size_t>(rng.between(2, 7));
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        if (rng.coin()) edges.emplace_back(u, v);
    Graph g = Graph::from_edges(n, edges);
    bool isolated = false;
    for (std::size_t v = 0; v < n; ++v) isolated = isolated || g.degree(v) == 0;
    if (!isolated) return g;
  }
}

struct Instance {
  Decomposition d;
  CoherentList h;
  std::string label;
};

/// Circulant base on 4..8 vertices with a random built-in cylinder family.
inline Instance random_instance(Rng& rng) {
  const std::size_t n = static_cast<std::size_t>(rng.between(4, 8));
  const std::size_t max_step = (n - 1) / 2;
  const std::size_t t = static_cast<std::size_t>(rng.between(1, static_cast<long>(std::min<std::size_t>(3, max_step))));
  std::vector<std::size_t> pool;
  for (std::size_t k = 1; k <= max_step; ++k) pool.push_back(k);
  std::vector<std::size_t> ks;
  for (std::size_t i = 0; i < t; ++i) {
    const std::size_t at = rng.below(pool.size());
    ks.push_back(pool[at]);
    pool.erase(pool.begin() + static_cast<long>(at));
  }
  std::vector<Cylinder> cyls;
  const auto family = rng.below(5);
  std::vector<std::size_t> perm(t);
  for (std::size_t i = 0; i < t; ++i) perm[i] = i;
  for (std::size_t i = t; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
  for (std::size_t i = 0; i < t; ++i) {
    switch (family) {
      case 0: cyls.push_back(pi_t_cylinder(t, perm[i])); break;
      case 1: cyls.push_back(rng.coin() ? identity_cylinder() : twist_cylinder()); break;
      case 2: cyls.push_back(path_cylinder(rng.below(4))); break;
      case 3: cyls.push_back(rng.coin() ? myexample_cylinder() : pi_cylinder(rng.below(2))); break;
      default: cyls.push_back(tree_cylinder_rooted(1, rng.below(3))); break;
    }
  }
  std::ostringstream label;
  label << "C" << n << "(";
  for (std::size_t i = 0; i < t; ++i) label << (i ? "," : "") << ks[i];
  label << ") x [";
  for (std::size_t i = 0; i < t; ++i) label << (i ? " " : "") << cyls[i].name;
  label << "]";
  return Instance{decompose_circulant(n, ks), CoherentList(std::move(cyls)), label.str()};
}

inline std::vector<Rational> random_theta(Rng& rng, std::size_t count) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(make_rational(rng.between(-12, 12), rng.between(1, 7)));
  return out;
}

}  // namespace verify_detail

struct Criterion {
  int id;
  std::string name;
  std::function<bool(const VerifyOptions&, std::string&)> run;
};

inline std::vector<Criterion> acceptance_criteria() {
  using namespace verify_detail;
  std::vector<Criterion> cs;

  cs.push_back({1, "coxeter-golden", [](const VerifyOptions& o, std::string& detail) {
                  auto g = family_golden(coxeter(), coxeter_golden(), o, 1);
                  detail = g.detail;
                  return g.ok;
                }});

  cs.push_back({2, "eightleaves-238-golden", [](const VerifyOptions& o, std::string& detail) {
                  auto g = family_golden(symmetric_family_unrooted(2), eightleaves_golden(), o, 2);
                  detail = g.detail;
                  return g.ok;
                }});

  cs.push_back({3, "sixleaves-130-golden", [](const VerifyOptions& o, std::string& detail) {
                  auto g = family_golden(symmetric_family_rooted(2), sixleaves_golden(), o, 3);
                  detail = g.detail;
                  auto r = ramanujan_check(g.construct.graph, 3);
                  std::ostringstream d;
                  d << "; second eigenvalue " << r.second << " vs 2sqrt2 = " << r.bound
                    << (r.is_ramanujan ? " (Ramanujan)" : " (not Ramanujan)");
                  detail += d.str();
                  return g.ok && r.is_ramanujan && r.second <= 2 * std::sqrt(2.0) + 1e-9;
                }});

  cs.push_back({4, "subdivision-identity", [](const VerifyOptions& o, std::string& detail) {
                  Rng rng(o.seed * 1000003u + 5);
                  int bad = 0, total = 0;
                  for (int g = 0; g < 20; ++g) {
                    Graph base = random_graph(rng);
                    for (unsigned k = 1; k <= 3; ++k) {
                      const auto d = decompose_numeric({base});
                      const Construct c = assemble(d, CoherentList({path_cylinder(k)}));
                      ++total;
                      if (maybe_perturb(subdivision_charpoly(base, k), o, 4) != charpoly_exact(c.graph.adjacency())) ++bad;
                    }
                  }
                  detail = std::to_string(total - bad) + "/" + std::to_string(total) + " (graph, k) pairs agree exactly";
                  return bad == 0;
                }});

  cs.push_back({5, "i-graph-closed-form", [](const VerifyOptions&, std::string& detail) {
                  int total = 0, bad = 0;
                  double worst = 0;
                  for (std::size_t n = 5; n <= 12; ++n)
                    for (std::size_t k = 1; 2 * k < n; ++k)
                      for (std::size_t l = k + 1; 2 * l < n; ++l) {
                        auto f = gi_graph(n, {k, l});
                        auto g = assemble(f.decomposition, f.cylinders).graph;
                        double diff = multiset_distance(i_graph_eigenvalues(n, k, l), eig_symmetric(g.adjacency()));
                        worst = std::max(worst, diff);
                        ++total;
                        if (!(diff <= 1e-8)) ++bad;
                      }
                  std::ostringstream d;
                  d << total - bad << "/" << total << " triples within 1e-8 (worst " << worst << ")";
                  detail = d.str();
                  return bad == 0;
                }});

  cs.push_back({6, "regime-consistency", [](const VerifyOptions& o, std::string& detail) {
                  Rng rng(o.seed * 1000003u + 6);
                  const auto so = spectra_options(o);
                  int bad = 0, no_inner = 0, regular = 0;
                  std::string first_bad;
                  for (int i = 0; i < 50; ++i) {
                    auto inst = random_instance(rng);
                    const Polynomial oracle = charpoly_exact(assemble(inst.d, inst.h).graph.adjacency());
                    bool ok = maybe_perturb(charpoly_general(inst.d, inst.h, so), o, 6) == oracle;
                    if (!inst.h.any_inner()) {
                      ++no_inner;
                      auto f = charpoly_no_inner(inst.d, inst.h, so);
                      ok = ok && *f.product_exact == oracle && f.rounding_residual <= o.tol;
                    }
                    if (inst.d.regular_degrees() && inst.h.any_inner()) {
                      ++regular;
                      auto f = charpoly_regular(inst.d, inst.h, so);
                      ok = ok && *f.product_exact == oracle && f.rounding_residual <= o.tol;
                    }
                    if (!ok && first_bad.empty()) first_bad = inst.label;
                    bad += !ok;
                  }
                  detail = std::to_string(50 - bad) + "/50 instances agree (" + std::to_string(no_inner) +
                           " no-inner, " + std::to_string(regular) + " regular, 50 general)";
                  if (!first_bad.empty()) detail += "; first mismatch " + first_bad;
                  return bad == 0;
                }});

  cs.push_back({7, "tree-mixing-determinant", [](const VerifyOptions& o, std::string& detail) {
                  Rng rng(o.seed * 1000003u + 7);
                  int bad = 0, total = 0;
                  for (auto shape : {TreeShape::Rooted, TreeShape::Unrooted})
                    for (unsigned h = 1; h <= 4; ++h) {
                      const CubicTree t(shape, h);
                      const IntMatrix adj = t.graph().adjacency();
                      for (int trial = 0; trial < 20; ++trial) {
                        auto theta = random_theta(rng, t.leaf_count());
                        Matrix<Rational> m = adj.cast<Rational>();
                        for (std::size_t i = 0; i < theta.size(); ++i) m(t.leaf(i), t.leaf(i)) = theta[i];
                        Polynomial mixed;
                        try {
                          mixed = shape == TreeShape::Rooted ? charpoly_rooted(h, linear_labels(theta))
                                                             : charpoly_unrooted(h, linear_labels(theta));
                        } catch (const ConsistencyError&) {
                          ++bad;
                          ++total;
                          continue;
                        }
                        ++total;
                        if (maybe_perturb(mixed, o, 7) != charpoly_rational(m)) ++bad;
                      }
                    }
                  detail = std::to_string(total - bad) + "/" + std::to_string(total) +
                           " labelings give a polynomial equal to the determinant";
                  return bad == 0;
                }});

  cs.push_back({8, "p-sequence-suite", [](const VerifyOptions& o, std::string& detail) {
                  const std::vector<Rational> xs{3, make_rational(7, 2), 4, 5, 6, 8, 10, -3, -4, -5};
                  double worst = 0;
                  for (std::size_t n = 0; n <= 20; ++n)
                    for (const auto& x0 : xs) worst = std::max(worst, p_closed_form_check(n, x0));
                  const bool closed = worst < 1e-20;
                  const auto ps = p_sequence(8);
                  bool tau = true;
                  for (std::size_t n = 1; n <= 8; ++n) tau = tau && maybe_perturb(ps[n], o, 8) == charpoly_exact(tau_matrix(n));
                  std::vector<std::size_t> cos_fail, consec_fail, scaled_fail;
                  for (std::size_t n = 2; n <= 12; ++n) {
                    if (!interlacing_check(n)) cos_fail.push_back(n);
                    if (!consecutive_interlacing_check(n)) consec_fail.push_back(n);
                    if (!interlacing_check_scaled(n)) scaled_fail.push_back(n);
                  }
                  bool uniform = true;
                  for (auto shape : {TreeShape::Rooted, TreeShape::Unrooted})
                    for (unsigned h = 1; h <= 3; ++h)
                      uniform = uniform && uniform_term(shape, h) == charpoly_exact(tree_plus_leaf_diagonal(shape, h, 2));
                  auto list = [](const std::vector<std::size_t>& v) {
                    if (v.empty()) return std::string("holds for n <= 12");
                    std::string s = "fails for n =";
                    for (auto n : v) s += " " + std::to_string(n);
                    return s;
                  };
                  std::ostringstream d;
                  d << "closed form worst residual " << worst << (closed ? " ok" : " FAIL") << "; tau charpoly "
                    << (tau ? "ok" : "FAIL") << "; 2cos(j pi/n) chain " << list(cos_fail)
                    << "; consecutive chain " << list(consec_fail) << "; 2sqrt2 cos(j pi/n) chain " << list(scaled_fail)
                    << "; uniform term " << (uniform ? "ok" : "FAIL");
                  detail = d.str();
                  return closed && tau && cos_fail.empty() && consec_fail.empty() && uniform;
                }});

  cs.push_back({9, "bsymmetry-suite", [](const VerifyOptions&, std::string& detail) {
                  int cylinders = 0, with_inner = 0, bad = 0;
                  for (const auto& c : zoo_catalog()) {
                    ++cylinders;
                    if (auto v = validate_bsymmetric(c)) {
                      ++bad;
                      continue;
                    }
                    if (!c.has_inner()) continue;
                    ++with_inner;
                    for (unsigned k = 0; k <= 6; ++k) bad += !link_power_bsymmetric(c, k);
                  }
                  detail = std::to_string(cylinders) + " zoo cylinders validated, " + std::to_string(with_inner) +
                           " with inner vertices checked for k = 0..6; " + std::to_string(bad) + " violations";
                  return bad == 0;
                }});

  cs.push_back({10, "inner-vertex-demo", [](const VerifyOptions&, std::string& detail) {
                  bool ok = true;
                  std::ostringstream d;
                  for (std::size_t n : {4, 5}) {
                    auto rep = inner_vertex_demo(complete_graph(n));
                    ok = ok && rep.zero_ok && rep.listed_values_present;
                    d << "K" << n << ": order " << rep.order << ", zero multiplicity " << rep.zero_multiplicity
                      << " (>= " << rep.expected_zero_multiplicity << ")"
                      << (rep.listed_values_present ? ", listed values present" : ", listed values MISSING");
                    for (const auto& s : rep.discrepancies) d << "; reported: " << s;
                    d << (n == 4 ? " | " : "");
                  }
                  detail = d.str();
                  return ok;
                }});
  return cs;
}

/// Runs the selected criteria (all when `only` is empty).
inline std::vector<CriterionResult> run_acceptance(const VerifyOptions& o, const std::vector<int>& only = {}) {
  std::vector<CriterionResult> out;
  for (const auto& c : acceptance_criteria()) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    CriterionResult r{c.id, c.name, false, "", 0};
    const auto start = std::chrono::steady_clock::now();
    try {
      r.pass = c.run(o, r.detail);
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(r));
  }
  return out;
}

inline std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS" : "FAIL") << "  " << r.id << "  " << r.name << "  (" << std::fixed;
  os.precision(2);
  os << r.seconds << " s)  " << r.detail;
  return os.str();
}

}  // namespace cylspec
