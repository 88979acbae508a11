#include <gtest/gtest.h>

#include <random>

#include "cylspec/cylinder/zoo.hpp"
#include "cylspec/spectra/oracle.hpp"
#include "cylspec/spectra/subdivision.hpp"

using namespace cylspec;

namespace {

Polynomial oracle(const Decomposition& d, const CoherentList& h) {
  return charpoly_exact(assemble(d, h).graph.adjacency());
}

CoherentList coxeter_cylinders() {
  return CoherentList({tree_cylinder_rooted(1, 0), tree_cylinder_rooted(1, 1), tree_cylinder_rooted(1, 2)});
}

}  // namespace

TEST(NoInner, Petersen) {
  auto d = decompose_circulant(5, {1, 2});
  auto f = charpoly_no_inner(d, pi_cylinders());
  auto want = from_integers({-3, 1}) * from_integers({-1, 1}).pow(5) * from_integers({2, 1}).pow(4);
  ASSERT_TRUE(f.product_exact.has_value());
  EXPECT_EQ(*f.product_exact, want);
  EXPECT_EQ(*f.product_exact, oracle(d, pi_cylinders()));
  EXPECT_EQ(f.factors.size(), 5u);
  EXPECT_LT(f.rounding_residual, 1e-20);
}

TEST(NoInner, CoxeterGolden) {
  auto d = decompose_circulant(7, {1, 2, 3});
  auto f = charpoly_no_inner(d, coxeter_cylinders());
  auto x = [](long a) { return from_integers({-a, 1}); };
  Polynomial inner = x(2) * x(-1) * from_integers({-1, 2, 1});
  Polynomial want = x(3) * x(2).pow(2) * x(-1) * inner.pow(6);
  EXPECT_EQ(*f.product_exact, want);
  EXPECT_EQ(oracle(d, coxeter_cylinders()), want);
}

TEST(NoInner, RejectsInnerVertices) {
  auto d = decompose_numeric({complete_graph(3)});
  EXPECT_THROW(charpoly_no_inner(d, CoherentList({path_cylinder(1)})), RegimeError);
}

TEST(Regular, TriangleSubdivision) {
  auto d = decompose_numeric({complete_graph(3)});
  CoherentList h({path_cylinder(1)});
  auto f = charpoly_regular(d, h);
  EXPECT_EQ(*f.product_exact, oracle(d, h));
  EXPECT_EQ(*f.product_exact, charpoly_exact(cycle_graph(6).adjacency()));
}

TEST(Regular, PathCylindersMatchSubdivision) {
  for (unsigned k = 1; k <= 3; ++k) {
    auto d = decompose_circulant(6, {1, 2});
    CoherentList h({path_cylinder(k), path_cylinder(k)});
    auto f = charpoly_regular(d, h);
    EXPECT_EQ(*f.product_exact, subdivision_charpoly(d.parent(), k)) << "k=" << k;
    EXPECT_EQ(*f.product_exact, oracle(d, h)) << "k=" << k;
  }
}

TEST(Regular, MyexampleCylinder) {
  auto d = decompose_circulant(7, {1, 2, 3});
  CoherentList h({myexample_cylinder(), myexample_cylinder(), myexample_cylinder()});
  auto f = charpoly_regular(d, h);
  EXPECT_EQ(*f.product_exact, oracle(d, h));
  // Fewer edges than base vertices: the prefactor has to be divided out.
  auto c5 = decompose_circulant(5, {1});
  CoherentList h1({myexample_cylinder()});
  EXPECT_EQ(*charpoly_regular(c5, h1).product_exact, oracle(c5, h1));
}

TEST(Regular, RejectsIrregular) {
  auto d = decompose_numeric({path_graph(4)});
  EXPECT_THROW(charpoly_regular(d, CoherentList({path_cylinder(1)})), RegimeError);
}

TEST(General, MatchesOracle) {
  auto p = decompose_numeric({path_graph(4)});
  CoherentList h({path_cylinder(2)});
  EXPECT_EQ(charpoly_general(p, h), oracle(p, h));

  auto star = decompose_numeric({Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}})});
  CoherentList my({myexample_cylinder()});
  EXPECT_EQ(charpoly_general(star, my), oracle(star, my));

  auto k5 = decompose_circulant(5, {1, 2});
  EXPECT_EQ(charpoly_general(k5, pi_cylinders()), oracle(k5, pi_cylinders()));
}

TEST(General, AgreesWithSubdivision) {
  auto g = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {1, 3}, {3, 4}});
  auto d = decompose_numeric({g});
  for (unsigned k = 1; k <= 2; ++k) EXPECT_EQ(charpoly_general(d, CoherentList({path_cylinder(k)})), subdivision_charpoly(g, k));
}

TEST(Subdivision, Examples) {
  EXPECT_EQ(subdivision_charpoly(complete_graph(3), 1), charpoly_exact(cycle_graph(6).adjacency()));
  auto k4 = complete_graph(4);
  auto built = assemble(decompose_numeric({k4}), CoherentList({path_cylinder(1)}));
  EXPECT_EQ(built.graph.order(), 10u);
  EXPECT_EQ(subdivision_charpoly(k4, 1), charpoly_exact(built.graph.adjacency()));
  // Regular form: phi(G, x U_k(x/2) - d U_{k-1}(x/2)).
  auto c4 = cycle_graph(4);
  Polynomial arg = Polynomial::x() * chebyshev_U_half(2) - Rational(2) * chebyshev_U_half(1);
  EXPECT_EQ(subdivision_charpoly(c4, 2), charpoly_exact(c4.adjacency()).compose(arg));
  auto p = path_graph(4);
  auto pb = assemble(decompose_numeric({p}), CoherentList({path_cylinder(3)}));
  EXPECT_EQ(subdivision_charpoly(p, 3), charpoly_exact(pb.graph.adjacency()));
}

TEST(Subdivision, ForestWithIsolatedVertex) {
  // |E| < n, so the Chebyshev power divides; compare with a directly built subdivision.
  auto g = Graph::from_edges(5, {{0, 1}, {2, 3}});
  for (unsigned k = 1; k <= 3; ++k) {
    std::vector<Edge> edges;
    std::size_t next = 5;
    for (auto [u, v] : g.edges()) {
      std::size_t prev = u;
      for (unsigned s = 0; s < k; ++s, ++next) {
        edges.emplace_back(prev, next);
        prev = next;
      }
      edges.emplace_back(prev, v);
    }
    auto sub = Graph::from_edges(next, edges);
    EXPECT_EQ(subdivision_charpoly(g, k), charpoly_exact(sub.adjacency())) << "k=" << k;
  }
}

TEST(Oracle, Reports) {
  auto rep = compare_with_oracle(decompose_circulant(5, {1, 2}), pi_cylinders());
  EXPECT_TRUE(rep.match);
  EXPECT_EQ(rep.regime, Regime::NoInner);
  EXPECT_EQ(rep.max_coeff_diff, 0);
  EXPECT_LT(rep.eig_max_diff, 1e-9);

  auto gi = compare_with_oracle(decompose_circulant(9, {1, 2}), CoherentList({pi_t_cylinder(2, 0), pi_t_cylinder(2, 1)}));
  EXPECT_TRUE(gi.match);
  EXPECT_LT(gi.rounding_residual, 1e-6);

  auto reg = compare_with_oracle(decompose_circulant(6, {1}), CoherentList({path_cylinder(2)}));
  EXPECT_EQ(reg.regime, Regime::Regular);
  EXPECT_TRUE(reg.match);
  EXPECT_LT(reg.eig_max_diff, 1e-8);
}

TEST(Parallel, JobsGiveIdenticalResults) {
  auto d = decompose_circulant(7, {1, 2, 3});
  SpectraOptions one, four;
  four.jobs = 4;
  auto a = charpoly_no_inner(d, coxeter_cylinders(), one);
  auto b = charpoly_no_inner(d, coxeter_cylinders(), four);
  EXPECT_EQ(*a.product_exact, *b.product_exact);
  EXPECT_EQ(a.factors, b.factors);
}
