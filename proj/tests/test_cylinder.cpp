#include <gtest/gtest.h>

#include "cylspec/algebra/charpoly.hpp"
#include "cylspec/construct/assemble.hpp"
#include "cylspec/cylinder/zoo.hpp"

using namespace cylspec;

namespace {

std::vector<Cylinder> zoo_sample() { return zoo_catalog(); }

}  // namespace

TEST(Cylinder, ZooIsBsymmetric) {
  for (const auto& c : zoo_sample()) EXPECT_FALSE(validate_bsymmetric(c).has_value()) << c.name;
}

TEST(Cylinder, ZooLinkPowersBsymmetric) {
  for (const auto& c : zoo_sample()) {
    if (!c.has_inner()) continue;
    for (unsigned k = 0; k <= 6; ++k) EXPECT_TRUE(link_power_bsymmetric(c, k)) << c.name << " k=" << k;
  }
}

TEST(Cylinder, ViolationsNameTheIdentity) {
  auto c = identity_cylinder();
  c.Ebb = IntMatrix{{0, 1}, {0, 0}};
  ASSERT_TRUE(validate_bsymmetric(c).has_value());
  EXPECT_EQ(*validate_bsymmetric(c), "Ebb not symmetric");

  auto p = path_cylinder(3);
  p.Ebpc = p.Ebc;
  EXPECT_EQ(validate_bsymmetric(p).value_or(""), "Ebpc != Ebc P");

  // A P that does not commute with C.
  auto q = path_cylinder(3);
  q.P = IntMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}};
  q.Ebpc = q.Ebc * q.P;
  EXPECT_TRUE(validate_bsymmetric(q).has_value());
  EXPECT_THROW(require_bsymmetric(c), ValidationError);
}

TEST(Cylinder, PathShapes) {
  auto p0 = path_cylinder(0);
  EXPECT_EQ(p0.Ebb, IntMatrix{{1}});
  EXPECT_FALSE(p0.has_inner());
  auto p1 = path_cylinder(1);
  EXPECT_EQ(p1.Ebb, IntMatrix{{0}});
  EXPECT_EQ(p1.Ebc, IntMatrix{{1}});
  EXPECT_EQ(p1.Ebpc, IntMatrix{{1}});
  auto p3 = path_cylinder(3);
  EXPECT_EQ(p3.P, anti_identity(3));
  EXPECT_EQ(charpoly_exact(Cylinder(p3).adjacency()), charpoly_exact(path_graph(5).adjacency()));
}

TEST(Cylinder, PiCylinders) {
  EXPECT_EQ(pi_cylinder(0).Ebb, (IntMatrix{{0, 0}, {0, 1}}));
  EXPECT_EQ(pi_cylinder(1).Ebb, (IntMatrix{{1, 0}, {0, 0}}));
  EXPECT_EQ(pi_cylinder(0).B, (IntMatrix{{0, 1}, {1, 0}}));
  EXPECT_EQ(pi_t_cylinder(2, 1).Ebb, pi_cylinder(0).Ebb);
  auto c = pi_t_cylinder(4, 0);
  EXPECT_EQ(c.B, complete_graph(4).adjacency());
  EXPECT_EQ(c.Ebb(0, 0), 1);
  EXPECT_EQ(c.Ebb(1, 1) + c.Ebb(2, 2) + c.Ebb(3, 3), 0);
  EXPECT_THROW(pi_t_cylinder(3, 3), ArgumentError);
}

TEST(Cylinder, TreeShapes) {
  auto r = tree_cylinder_rooted(1, 0);
  EXPECT_EQ(r.base_size(), 4u);
  EXPECT_EQ(tree_cylinder_rooted(2, 5).base_size(), 10u);
  EXPECT_EQ(tree_cylinder_unrooted(1, 0).base_size(), 6u);
  EXPECT_EQ(tree_cylinder_unrooted(2, 7).base_size(), 14u);
  EXPECT_THROW(tree_cylinder_rooted(1, 3), ArgumentError);
  EXPECT_THROW(tree_cylinder_unrooted(2, 8), ArgumentError);
  auto u = tree_cylinder_unrooted(2, 3);
  EXPECT_EQ(u.Ebb(6 + 3, 6 + 3), 1);
}

TEST(Cylinder, Coherence) {
  EXPECT_TRUE(check_coherent({pi_cylinder(0), pi_cylinder(1)}));
  EXPECT_FALSE(check_coherent({pi_t_cylinder(3, 0), pi_t_cylinder(4, 0)}));
  std::vector<Cylinder> trees;
  for (std::size_t i = 0; i < 8; ++i) trees.push_back(tree_cylinder_unrooted(2, i));
  EXPECT_TRUE(check_coherent(trees));
  EXPECT_THROW(CoherentList({pi_t_cylinder(3, 0), pi_t_cylinder(4, 0)}), ValidationError);
}

TEST(Cylinder, ZooNames) {
  EXPECT_EQ(cylinder_from_name("path:3").C, path_cylinder(3).C);
  EXPECT_EQ(cylinder_from_name("pit:4:0").Ebb, pi_t_cylinder(4, 0).Ebb);
  EXPECT_EQ(cylinder_from_name("treeR:2:5").Ebb, tree_cylinder_rooted(2, 5).Ebb);
  EXPECT_EQ(cylinder_from_name("treeU:2:3").Ebb, tree_cylinder_unrooted(2, 3).Ebb);
  EXPECT_EQ(cylinder_from_name("pi:1").name, "pi:1");
  EXPECT_THROW(cylinder_from_name("path"), ArgumentError);
  EXPECT_THROW(cylinder_from_name("nope:1"), ArgumentError);
  EXPECT_THROW(cylinder_from_name("path:x"), ArgumentError);
}

TEST(Construct, TriangleSubdivision) {
  auto d = decompose_numeric({complete_graph(3)});
  auto c = assemble(d, CoherentList({path_cylinder(1)}));
  EXPECT_EQ(c.graph.order(), 6u);
  EXPECT_EQ(charpoly_exact(c.graph.adjacency()), charpoly_exact(cycle_graph(6).adjacency()));
  EXPECT_EQ(degree_histogram(c), (std::map<std::size_t, std::size_t>{{2, 6}}));
}

TEST(Construct, Petersen) {
  auto c = assemble(decompose_circulant(5, {1, 2}), pi_cylinders());
  EXPECT_EQ(c.graph.order(), 10u);
  EXPECT_EQ(degree_histogram(c), (std::map<std::size_t, std::size_t>{{3, 10}}));
  auto want = from_integers({-3, 1}) * from_integers({-1, 1}).pow(5) * from_integers({2, 1}).pow(4);
  EXPECT_EQ(charpoly_exact(c.graph.adjacency()), want);
  EXPECT_EQ(girth(c.graph), 5u);
}

TEST(Construct, Coxeter) {
  auto c = assemble(decompose_circulant(7, {1, 2, 3}),
                    CoherentList({tree_cylinder_rooted(1, 0), tree_cylinder_rooted(1, 1), tree_cylinder_rooted(1, 2)}));
  EXPECT_EQ(c.graph.order(), 28u);
  EXPECT_EQ(degree_histogram(c), (std::map<std::size_t, std::size_t>{{3, 28}}));
  EXPECT_EQ(girth(c.graph), 7u);
}

TEST(Construct, IdentityCylinderIsTensor) {
  auto g = cycle_graph(5);
  auto d = decompose_numeric({g});
  auto c = assemble(d, CoherentList({identity_cylinder()}));
  EXPECT_EQ(c.graph.adjacency(), kron(g.adjacency(), IntMatrix::identity(2)));
  auto tw = assemble(decompose_circulant(4, {1}), CoherentList({twist_cylinder()}));
  EXPECT_EQ(tw.graph.order(), 8u);
  EXPECT_EQ(tw.graph.regular_degree(), 2);
}

TEST(Construct, ManifestAndCounts) {
  auto d = decompose_circulant(7, {1, 2});
  CoherentList h({myexample_cylinder(), myexample_cylinder()});
  auto c = assemble(d, h);
  EXPECT_EQ(c.graph.order(), expected_order(d, h));
  EXPECT_EQ(c.graph.order(), 7u * 2 + 14u);
  EXPECT_EQ(c.manifest[c.inner_offsets[1]].part, 1u);
  EXPECT_EQ(c.manifest[c.inner_offsets[1]].edge, 0u);
  EXPECT_THROW(assemble(d, CoherentList({myexample_cylinder()})), ArgumentError);
}
