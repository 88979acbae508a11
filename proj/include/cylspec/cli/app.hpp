#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cylspec/io/dot.hpp"
#include "cylspec/io/json.hpp"
#include "cylspec/verify.hpp"

namespace cylspec::cli {

enum ExitCode { kOk = 0, kMismatch = 1, kInputError = 2 };

/// Options shared by every subcommand.
struct RunConfig {
  std::string format = "json";
  std::string out;
  double tol = 1e-6;
  unsigned jobs = 1;
  std::uint64_t seed = 42;
};

/// What `build` and `spectrum` operate on: a named family or explicit
/// decomposition and cylinder files.
struct TargetArgs {
  std::vector<std::string> positional;
  std::size_t n = 0;
  std::vector<std::size_t> ks;
  unsigned h = 2;
  std::string decomp, cyls;
};

struct Target {
  std::string name;
  std::optional<FamilySpec> family;
  std::optional<Decomposition> decomposition;
  std::optional<CoherentList> cylinders;

  const Decomposition& d() const { return family ? family->decomposition : *decomposition; }
  const CoherentList& h() const { return family ? family->cylinders : *cylinders; }
};

inline FamilySpec family_by_name(const std::string& name, const TargetArgs& a) {
  if (name == "coxeter") return coxeter();
  if (name == "gi") {
    if (a.n == 0 || a.ks.empty()) throw ArgumentError("family gi needs --n and --ks");
    return gi_graph(a.n, a.ks);
  }
  if (name == "sym-unrooted") return symmetric_family_unrooted(a.h);
  if (name == "sym-rooted") return symmetric_family_rooted(a.h);
  throw ArgumentError("unknown family '" + name + "' (coxeter, gi, sym-unrooted, sym-rooted)");
}

inline Target resolve_target(const TargetArgs& a, const RunConfig& cfg) {
  Target t;
  if (!a.positional.empty()) {
    if (a.positional[0] != "family" || a.positional.size() != 2)
      throw ArgumentError("expected 'family <name>' or --decomp/--cyls");
    t.family = family_by_name(a.positional[1], a);
    t.name = t.family->name;
    return t;
  }
  if (a.decomp.empty() || a.cyls.empty()) throw ArgumentError("need 'family <name>' or both --decomp and --cyls");
  t.decomposition = io::decomposition_from_json(io::read_file(a.decomp), cfg.seed);
  t.cylinders = io::cylinders_from_json(io::read_file(a.cyls));
  t.name = "construct";
  return t;
}

inline void add_target_options(CLI::App* sub, TargetArgs& a) {
  sub->set_help_flag("--help", "Print this help message and exit");
  sub->add_option("target", a.positional, "'family <name>' with name in coxeter, gi, sym-unrooted, sym-rooted");
  sub->add_option("--n", a.n, "Circulant order for family gi");
  sub->add_option("--ks", a.ks, "Comma-separated steps for family gi")->delimiter(',');
  sub->add_option("--h", a.h, "Tree height for the symmetric families");
  sub->add_option("--decomp", a.decomp, "Decomposition JSON file");
  sub->add_option("--cyls", a.cyls, "Cylinder list JSON file");
}

inline void add_common_options(CLI::App* sub, RunConfig& cfg, const std::vector<std::string>& formats) {
  sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(formats));
  sub->add_option("--out", cfg.out, "Output path prefix (stdout when absent)");
  sub->add_option("--tol", cfg.tol, "Rounding residual tolerance")->check(CLI::PositiveNumber);
  sub->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  sub->add_option("--seed", cfg.seed, "Seed for randomized steps");
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw ArgumentError("cannot write " + path);
  f << text;
}

/// Prints to `out`, or writes `<prefix><suffix>` when --out is set.
inline void emit(const RunConfig& cfg, std::ostream& out, const std::string& suffix, const std::string& text) {
  if (cfg.out.empty())
    out << text;
  else
    write_file(cfg.out + suffix, text);
}

inline std::string summary(const Graph& g) {
  std::ostringstream os;
  os << "order " << g.order() << ", size " << g.size() << ", connected " << (is_connected(g) ? "yes" : "no")
     << ", girth ";
  const auto gi = girth(g);
  if (gi == 0)
    os << "inf";
  else
    os << gi;
  os << ", degrees";
  for (auto [d, c] : degree_histogram(g)) os << " " << d << "^" << c;
  os << "\n";
  return os.str();
}

inline int cmd_build(const TargetArgs& a, const RunConfig& cfg, std::ostream& out) {
  const Target t = resolve_target(a, cfg);
  const Construct c = assemble(t.d(), t.h());
  if (!cfg.out.empty()) {
    write_file(cfg.out + ".json", io::to_json(c).dump(2) + "\n");
    write_file(cfg.out + ".dot", io::to_dot(c, t.name));
    io::json m = io::tagged("manifest");
    m["manifest"] = io::manifest_json(c);
    write_file(cfg.out + ".manifest.json", m.dump(2) + "\n");
    return kOk;
  }
  if (cfg.format == "dot")
    out << io::to_dot(c, t.name);
  else if (cfg.format == "text")
    out << t.name << ": " << summary(c.graph);
  else
    out << io::to_json(c).dump(2) << "\n";
  return kOk;
}

inline int cmd_spectrum(const TargetArgs& a, const RunConfig& cfg, const std::string& oracle_only,
                        const std::string& regime_name, bool factored, std::ostream& out) {
  if (!oracle_only.empty()) {
    const Graph g = io::graph_from_json(io::read_file(oracle_only));
    io::json j = io::tagged("charpoly");
    j["order"] = g.order();
    j["charpoly"] = io::to_json(charpoly_exact(g.adjacency()));
    if (cfg.format == "text")
      emit(cfg, out, ".txt", to_string(charpoly_exact(g.adjacency())) + "\n");
    else
      emit(cfg, out, ".json", j.dump(2) + "\n");
    return kOk;
  }
  const Target t = resolve_target(a, cfg);
  Regime regime = Regime::Auto;
  if (regime_name == "no_inner") regime = Regime::NoInner;
  if (regime_name == "regular") regime = Regime::Regular;
  if (regime_name == "general") regime = Regime::General;
  SpectraOptions so;
  so.jobs = cfg.jobs;
  so.tol = cfg.tol;
  const OracleReport rep = compare_with_oracle(t.d(), t.h(), regime, so);
  io::json j = io::to_json(rep);
  j["target"] = t.name;
  const Graph g = assemble(t.d(), t.h()).graph;
  const long deg = g.regular_degree();
  if (deg >= 1 && is_connected(g)) {
    auto r = ramanujan_check(g, static_cast<std::size_t>(deg));
    j["ramanujan"] = {{"is_ramanujan", r.is_ramanujan}, {"second", r.second}, {"bound", r.bound}};
    j["is_ramanujan"] = r.is_ramanujan;
  }
  if (cfg.format == "text" || factored) {
    std::ostringstream os;
    os << t.name << ": regime " << to_string(rep.regime) << ", order " << rep.order << ", match "
       << (rep.match ? "true" : "false") << "\n";
    if (factored && rep.factored) os << to_string(*rep.factored);
    os << "theorem: " << to_string(rep.theorem) << "\n";
    os << "oracle:  " << to_string(rep.oracle) << "\n";
    emit(cfg, out, ".txt", os.str());
  } else {
    emit(cfg, out, ".json", j.dump(2) + "\n");
  }
  return rep.match ? kOk : kMismatch;
}

inline RationalFunction label_from_json(const io::json& j) {
  if (j.is_number_integer() || j.is_string() || (j.is_array() && j.size() == 2))
    return RationalFunction(Polynomial::linear(io::rational_from_json(j)));
  if (j.is_object() && j.contains("num"))
    return RationalFunction(io::polynomial_from_json(j.at("num")),
                            j.contains("den") ? io::polynomial_from_json(j.at("den")) : Polynomial::constant(1));
  if (j.is_object() && j.contains("coeffs")) return RationalFunction(io::polynomial_from_json(j));
  throw ArgumentError("leaf label must be a rational theta (label x - theta), a polynomial or {num, den}");
}

inline io::json to_json(const RationalFunction& f) {
  return io::json{{"num", io::to_json(f.num())}, {"den", io::to_json(f.den())}};
}

inline int cmd_treemix(const std::string& shape_name, unsigned height, const std::string& labels,
                       const RunConfig& cfg, std::ostream& out) {
  const TreeShape shape = parse_tree_shape(shape_name);
  const io::json lj = !labels.empty() && (labels[0] == '[' || labels[0] == '{') ? io::parse(labels, "--labels")
                                                                                : io::read_file(labels);
  const io::json& arr = lj.is_array() ? lj : lj.at("labels");
  std::vector<RationalFunction> leaf;
  for (const auto& e : arr) leaf.push_back(label_from_json(e));
  auto [tree, mix] = tree_mix(shape, height, leaf);
  const Polynomial poly = shape == TreeShape::Rooted ? charpoly_rooted(height, leaf) : charpoly_unrooted(height, leaf);
  if (cfg.format == "text") {
    std::ostringstream os;
    for (std::size_t l = 0; l < mix.level_resultants.size(); ++l)
      os << "R(" << l << ") = " << to_string(mix.level_resultants[l]) << "\n";
    os << "charpoly: " << to_string(poly) << "\n";
    emit(cfg, out, ".txt", os.str());
    return kOk;
  }
  io::json j = io::tagged("treemix");
  j["shape"] = to_string(shape);
  j["height"] = height;
  io::json levels = io::json::array();
  for (const auto& r : mix.level_resultants) levels.push_back(to_json(r));
  j["levels"] = levels;
  j["total"] = to_json(mix.total);
  j["charpoly"] = io::to_json(poly);
  emit(cfg, out, ".json", j.dump(2) + "\n");
  return kOk;
}

inline int cmd_family(const TargetArgs& a, const RunConfig& cfg, std::ostream& out) {
  if (a.positional.size() != 1) throw ArgumentError("usage: family <coxeter|gi|sym-unrooted|sym-rooted>");
  const FamilySpec f = family_by_name(a.positional[0], a);
  const std::string dot = io::to_dot(assemble(f.decomposition, f.cylinders), f.name);
  if (!cfg.out.empty()) {
    write_file(cfg.out + ".json", io::to_json(f).dump(2) + "\n");
    write_file(cfg.out + ".dot", dot);
    return kOk;
  }
  if (cfg.format == "dot") {
    out << dot;
  } else {
    io::json j = io::to_json(f);
    j["dot"] = dot;
    out << j.dump(2) << "\n";
  }
  return kOk;
}

inline int cmd_verify_all(const RunConfig& cfg, int perturb, const std::vector<int>& only, bool timings,
                          std::ostream& out) {
  VerifyOptions o;
  o.seed = cfg.seed;
  o.jobs = cfg.jobs;
  o.tol = cfg.tol;
  o.perturb = perturb;
  bool all = true;
  io::json rows = io::json::array();
  std::ostringstream text;
  for (auto r : run_acceptance(o, only)) {
    all = all && r.pass;
    if (!timings) r.seconds = 0;
    rows.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    if (timings) rows.back()["seconds"] = r.seconds;
    std::string line = format_result(r);
    if (!timings) line.erase(line.find("  ("), line.find(")  ", line.find("  (")) + 1 - line.find("  ("));
    text << line << "\n";
  }
  if (cfg.format == "json") {
    io::json j = io::tagged("verify");
    j["seed"] = cfg.seed;
    j["criteria"] = rows;
    j["all_pass"] = all;
    emit(cfg, out, ".json", j.dump(2) + "\n");
  } else {
    emit(cfg, out, ".txt", text.str());
  }
  return all ? kOk : kMismatch;
}

/// Entry point; returns the process exit code.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"cylspec: cylindrical graph constructions and their characteristic polynomials"};
  app.require_subcommand(1);
  RunConfig cfg;
  TargetArgs target;

  auto* build = app.add_subcommand("build", "Assemble a construct; writes adjacency JSON, DOT and the vertex manifest");
  add_target_options(build, target);
  add_common_options(build, cfg, {"json", "dot", "text"});

  auto* spectrum = app.add_subcommand("spectrum", "Theorem-side characteristic polynomial against the exact oracle");
  add_target_options(spectrum, target);
  add_common_options(spectrum, cfg, {"json", "text"});
  std::string oracle_only, regime = "auto";
  bool factored = false;
  spectrum->add_option("--oracle-only", oracle_only, "Graph JSON file; print its exact characteristic polynomial only");
  spectrum->add_option("--regime", regime, "Theorem regime")->check(CLI::IsMember({"auto", "no_inner", "regular", "general"}));
  spectrum->add_flag("--factored", factored, "Print the per-j factorization");

  auto* treemix = app.add_subcommand("treemix", "Tree mixing of leaf labels");
  add_common_options(treemix, cfg, {"json", "text"});
  std::string shape = "rooted", labels;
  unsigned height = 1;
  treemix->add_option("--shape", shape, "rooted or unrooted")->check(CLI::IsMember({"rooted", "unrooted"}));
  treemix->add_option("--height", height, "Tree height")->required();
  treemix->add_option("--labels", labels, "Leaf labels: inline JSON array or a JSON file")->required();

  auto* family = app.add_subcommand("family", "Emit a named family as JSON plus DOT");
  family->set_help_flag("--help", "Print this help message and exit");
  family->add_option("name", target.positional, "coxeter, gi, sym-unrooted or sym-rooted");
  family->add_option("--n", target.n, "Circulant order for gi");
  family->add_option("--ks", target.ks, "Comma-separated steps for gi")->delimiter(',');
  family->add_option("--h", target.h, "Tree height for the symmetric families");
  add_common_options(family, cfg, {"json", "dot"});

  auto* verify = app.add_subcommand("verify-all", "Run every acceptance criterion and print a pass/fail table");
  add_common_options(verify, cfg, {"text", "json"});
  int perturb = 0;
  std::vector<int> only;
  bool timings = false;
  verify->add_option("--perturb", perturb, "Add 1 to the theorem-side polynomial of this criterion")->group("");
  verify->add_option("--only", only, "Run only these criteria");
  verify->add_flag("--timings", timings, "Include wall-clock times");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }
  if (*verify && !verify->count("--format")) cfg.format = "text";

  try {
    if (*build) return cmd_build(target, cfg, out);
    if (*spectrum) return cmd_spectrum(target, cfg, oracle_only, regime, factored, out);
    if (*treemix) return cmd_treemix(shape, height, labels, cfg, out);
    if (*family) return cmd_family(target, cfg, out);
    return cmd_verify_all(cfg, perturb, only, timings, out);
  } catch (const ArgumentError& e) {
    err << "input error: " << e.what() << "\n";
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
  } catch (const DimensionError& e) {
    err << "input error: " << e.what() << "\n";
  } catch (const UnsupportedError& e) {
    err << "unsupported: " << e.what() << "\n";
  } catch (const DegenerateLabelError& e) {
    err << "input error: " << e.what() << "\n";
  } catch (const io::json::exception& e) {
    err << "input error: " << e.what() << "\n";
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kMismatch;
  }
  return kInputError;
}

}  // namespace cylspec::cli
