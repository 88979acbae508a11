#include <gtest/gtest.h>

#include <algorithm>

#include "cylspec/families/families.hpp"
#include "cylspec/spectra/oracle.hpp"

using namespace cylspec;

namespace {

Polynomial lin(long a) { return from_integers({-a, 1}); }

Polynomial oracle(const FamilySpec& f) { return charpoly_exact(assemble(f.decomposition, f.cylinders).graph.adjacency()); }

}  // namespace

TEST(Families, GiPetersen) {
  auto f = gi_graph(5, {1, 2});
  auto g = assemble(f.decomposition, f.cylinders).graph;
  EXPECT_EQ(g.order(), 10u);
  EXPECT_EQ(girth(g), 5u);
  EXPECT_EQ(oracle(f), lin(3) * lin(1).pow(5) * lin(-2).pow(4));
  // One step means t = 1 and a single-vertex base, so n * t vertices.
  auto c4 = gi_graph(4, {1});
  EXPECT_EQ(assemble(c4.decomposition, c4.cylinders).graph.order(), 4u);
  EXPECT_EQ(assemble(gi_graph(8, {1, 3}).decomposition, gi_graph(8, {1, 3}).cylinders).graph.order(), 16u);
  EXPECT_THROW(gi_graph(5, {1, 1}), ArgumentError);
  EXPECT_THROW(gi_graph(6, {3}), ArgumentError);
}

TEST(Families, IGraphClosedForm) {
  auto vals = i_graph_eigenvalues(5, 1, 2);
  std::vector<double> want{3, 1, 1, 1, 1, 1, -2, -2, -2, -2};
  EXPECT_LT(multiset_distance(vals, want), 1e-12);
  auto seven = gi_graph(7, {1, 2});
  EXPECT_LT(multiset_distance(i_graph_eigenvalues(7, 1, 2),
                              eig_symmetric(assemble(seven.decomposition, seven.cylinders).graph.adjacency())),
            1e-9);
  auto last = i_graph_eigenvalues(9, 1, 3);
  EXPECT_NEAR(last[16], 3, 1e-12);
  EXPECT_NEAR(last[17], 1, 1e-12);
  EXPECT_THROW(i_graph_eigenvalues(7, 2, 2), ArgumentError);
}

TEST(Families, Coxeter) {
  auto f = coxeter();
  auto g = assemble(f.decomposition, f.cylinders).graph;
  EXPECT_EQ(g.order(), 28u);
  EXPECT_EQ(g.regular_degree(), 3);
  EXPECT_GE(girth(g), 6u);
  Polynomial inner = lin(2) * lin(-1) * from_integers({-1, 2, 1});
  EXPECT_EQ(oracle(f), lin(3) * lin(2).pow(2) * lin(-1) * inner.pow(6));
}

TEST(Families, CyclicLabeling) {
  auto gamma = cyclic_labeling(3, 16);
  EXPECT_EQ(gamma.coset_of("01"), (CyclicLabeling::Coset{2, 4}));
  EXPECT_EQ(gamma.coset_of(""), (CyclicLabeling::Coset{0, 1}));
  EXPECT_EQ(gamma.exponents("01"), (std::vector<std::uint64_t>{2, 6, 10, 14}));
  for (unsigned h = 0; h <= 5; ++h) EXPECT_TRUE(cyclic_labeling(h, std::uint64_t{1} << (h + 1)).union_property()) << h;
  EXPECT_THROW(cyclic_labeling(3, 12), ArgumentError);
  EXPECT_THROW(gamma.coset_of("0101"), ArgumentError);
}

TEST(Families, PrimitiveRoots) {
  EXPECT_EQ(smallest_primitive_root(7), 3u);
  EXPECT_EQ(smallest_primitive_root(13), 2u);
  EXPECT_EQ(smallest_primitive_root(17), 3u);
  EXPECT_THROW(smallest_primitive_root(15), ArgumentError);
}

TEST(Families, SymmetricStepSets) {
  auto u = symmetric_family_unrooted(2);
  ASSERT_TRUE(u.decomposition.circulant());
  auto ks = u.decomposition.circulant()->ks;
  std::sort(ks.begin(), ks.end());
  EXPECT_EQ(ks, (std::vector<std::size_t>{1, 2, 3, 4, 5, 6, 7, 8}));
  auto r = symmetric_family_rooted(2);
  EXPECT_EQ(r.decomposition.circulant()->ks, (std::vector<std::size_t>{1, 5, 3, 2, 4, 6}));
  // h = 1 of the rooted family is the Coxeter step set.
  EXPECT_EQ(symmetric_family_rooted(1).decomposition.circulant()->ks, (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_THROW(symmetric_family_unrooted(1), UnsupportedError);
  EXPECT_THROW(symmetric_family_rooted(3), UnsupportedError);
}

TEST(Families, TranslationAutomorphisms) {
  for (const auto& f : {symmetric_family_unrooted(2), symmetric_family_rooted(2)}) {
    const auto& lab = *f.labeling;
    const auto ks = f.decomposition.circulant()->ks;
    for (std::uint64_t g = 1; g < lab.n; ++g) {
      auto perm = translation_leaf_permutation(lab, g);
      ASSERT_TRUE(perm) << f.name << " g=" << g;
      std::vector<std::size_t> moved;
      for (auto p : *perm) moved.push_back(ks[p]);
      auto a = ks, b = moved;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      EXPECT_EQ(a, b);
    }
  }
}

TEST(Families, EightLeavesGolden) {
  auto f = symmetric_family_unrooted(2);
  auto c = assemble(f.decomposition, f.cylinders);
  EXPECT_EQ(c.graph.order(), 238u);
  EXPECT_EQ(c.graph.regular_degree(), 3);
  Polynomial big = from_integers({7, -12, -116, 116, 345, -189, -319, 88, 116, -16, -18, 1, 1});
  Polynomial want = lin(3) * lin(2).pow(4) * from_integers({-2, -2, 1}).pow(2) * from_integers({-2, 0, 1}).pow(17) *
                    from_integers({2, -6, -1, 1}) * big.pow(16);
  auto fc = charpoly_no_inner(f.decomposition, f.cylinders);
  ASSERT_TRUE(fc.product_exact);
  EXPECT_EQ(*fc.product_exact, want);
  EXPECT_LT(fc.rounding_residual, 1e-6);
  EXPECT_EQ(charpoly_exact(c.graph.adjacency()), want);
  auto chk = family_factor_check(f, fc);
  EXPECT_LT(chk.per_j_spread, 1e-8);
  EXPECT_TRUE(chk.uniform_term_match);
  // Sixteen of the seventeen x^2 - 2 factors come from the shared j < n factor.
  EXPECT_EQ(fc.factors_exact[0], from_integers({-2, 0, 1}) * big);
}

TEST(Families, SixLeavesGolden) {
  auto f = symmetric_family_rooted(2);
  auto c = assemble(f.decomposition, f.cylinders);
  EXPECT_EQ(c.graph.order(), 130u);
  Polynomial big = from_integers({-10, 12, 69, -55, -115, 45, 65, -12, -14, 1, 1});
  Polynomial want = lin(3) * lin(1) * lin(-2) * lin(2).pow(3) * from_integers({-2, -2, 1}).pow(2) * big.pow(12);
  auto fc = charpoly_no_inner(f.decomposition, f.cylinders);
  EXPECT_EQ(*fc.product_exact, want);
  EXPECT_EQ(charpoly_exact(c.graph.adjacency()), want);
  auto chk = family_factor_check(f, fc);
  EXPECT_LT(chk.per_j_spread, 1e-8);
  EXPECT_TRUE(chk.uniform_term_match);
  EXPECT_EQ(fc.factors_exact[0], big);
  auto ram = ramanujan_check(c.graph, 3);
  EXPECT_TRUE(ram.is_ramanujan);
  EXPECT_LE(ram.second, 2 * std::sqrt(2.0) + 1e-9);
}

TEST(Families, Ramanujan) {
  auto pet = ramanujan_check(circulant(5, {1, 2}), 4);
  EXPECT_TRUE(pet.is_ramanujan);
  auto petersen = assemble(gi_graph(5, {1, 2}).decomposition, gi_graph(5, {1, 2}).cylinders).graph;
  auto p = ramanujan_check(petersen, 3);
  EXPECT_TRUE(p.is_ramanujan);
  EXPECT_NEAR(p.second, 2, 1e-9);
  auto c8 = ramanujan_check(cycle_graph(8), 2);
  EXPECT_NEAR(c8.second, std::sqrt(2.0), 1e-9);
  EXPECT_TRUE(c8.is_ramanujan);
  EXPECT_THROW(ramanujan_check(path_graph(4), 2), ArgumentError);
}

TEST(Families, InnerVertexDemo) {
  for (std::size_t n : {4, 5}) {
    auto rep = inner_vertex_demo(complete_graph(n));
    EXPECT_EQ(rep.order, n * 2 + n * (n - 1) / 2);
    EXPECT_TRUE(rep.zero_ok);
    EXPECT_EQ(static_cast<long>(rep.zero_multiplicity), rep.expected_zero_multiplicity);
    EXPECT_TRUE(rep.listed_values_present);
    EXPECT_LT(rep.predicted_spectrum_diff, 1e-8);
    EXPECT_FALSE(rep.discrepancies.empty());
  }
  EXPECT_EQ(inner_vertex_demo(complete_graph(4)).order, 14u);
}
