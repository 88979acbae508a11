#include <gtest/gtest.h>

#include <random>

#include "cylspec/treemix/treemix.hpp"

using namespace cylspec;

namespace {

Matrix<Rational> labeled_tree_matrix(TreeShape shape, unsigned h, const std::vector<Rational>& theta) {
  const CubicTree t(shape, h);
  Matrix<Rational> a = t.graph().adjacency().cast<Rational>();
  for (std::size_t i = 0; i < theta.size(); ++i) a(t.leaf(i), t.leaf(i)) = theta[i];
  return a;
}

std::vector<Rational> random_theta(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  std::vector<Rational> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(make_rational(num(rng), den(rng)));
  return out;
}

}  // namespace

TEST(TreeMix, MatchesDeterminantWithRandomLabels) {
  std::mt19937 rng(7);
  for (auto shape : {TreeShape::Rooted, TreeShape::Unrooted})
    for (unsigned h = 1; h <= 4; ++h) {
      const CubicTree t(shape, h);
      auto theta = random_theta(rng, t.leaf_count());
      auto labels = linear_labels(theta);
      Polynomial mixed = shape == TreeShape::Rooted ? charpoly_rooted(h, labels) : charpoly_unrooted(h, labels);
      EXPECT_EQ(mixed, charpoly_rational(labeled_tree_matrix(shape, h, theta))) << to_string(shape) << " h=" << h;
    }
}

TEST(TreeMix, LevelResultants) {
  // Leaf labels x: every level-1 label in the rooted h = 1 tree is x, the root is x - 3/x.
  std::vector<RationalFunction> labels(3, RationalFunction(Polynomial::x()));
  auto [lt, mr] = tree_mix(TreeShape::Rooted, 1, labels);
  ASSERT_EQ(mr.level_resultants.size(), 2u);
  EXPECT_EQ(mr.level_resultants[1], RationalFunction(Polynomial::x().pow(3)));
  EXPECT_EQ(lt.labels[0], RationalFunction(from_integers({-3, 0, 1}), Polynomial::x()));
  EXPECT_EQ(charpoly_rooted(1, labels), from_integers({0, -3, 0, 1}) * Polynomial::x());
}

TEST(TreeMix, Errors) {
  EXPECT_THROW(tree_mix(TreeShape::Rooted, 1, {}), ArgumentError);
  std::vector<RationalFunction> zero(3, RationalFunction());
  EXPECT_THROW(tree_mix(TreeShape::Rooted, 1, zero), DegenerateLabelError);
  // Leaves labeled 1/x leave a pole behind.
  std::vector<RationalFunction> poles(3, RationalFunction(Polynomial::constant(1), Polynomial::x()));
  EXPECT_THROW(charpoly_rooted(1, poles), ConsistencyError);
}

TEST(PSequence, RecurrenceAndTau) {
  auto p = p_sequence(12);
  EXPECT_EQ(p[0], Polynomial::constant(1));
  EXPECT_EQ(p[1], from_integers({-2, 1}));
  EXPECT_EQ(p[2], from_integers({-2, -2, 1}));
  for (std::size_t n = 1; n <= 12; ++n) EXPECT_EQ(p[n], charpoly_exact(tau_matrix(n))) << n;
}

TEST(PSequence, ClosedForm) {
  const std::vector<Rational> xs{3, make_rational(7, 2), 4, 5, 6, 8, 10, -3, -4, -5};
  for (std::size_t n = 0; n <= 40; ++n)
    for (const auto& x0 : xs) EXPECT_LT(p_closed_form_check(n, x0), 1e-40) << "n=" << n << " x=" << to_string(x0);
  EXPECT_THROW(p_closed_form_check(3, Rational(2)), ArgumentError);
  EXPECT_THROW(p_closed_form_check(3, Rational(0)), ArgumentError);
}

TEST(PSequence, Interlacing) {
  for (std::size_t n = 2; n <= 12; ++n) {
    EXPECT_TRUE(interlacing_check_scaled(n)) << n;
    EXPECT_TRUE(consecutive_interlacing_check(n)) << n;
  }
  // Against the unscaled 2cos(j pi / n) values the chain only survives for tiny n.
  EXPECT_TRUE(interlacing_check(2));
  EXPECT_TRUE(interlacing_check(3));
  for (std::size_t n = 4; n <= 12; ++n) EXPECT_FALSE(interlacing_check(n)) << n;
}

TEST(UniformTerm, MatchesLeafShiftedTree) {
  for (auto shape : {TreeShape::Rooted, TreeShape::Unrooted})
    for (unsigned h = 1; h <= 4; ++h)
      EXPECT_EQ(uniform_term(shape, h), charpoly_exact(tree_plus_leaf_diagonal(shape, h, 2)))
          << to_string(shape) << " h=" << h;
  EXPECT_THROW(uniform_term(TreeShape::Rooted, 0), ArgumentError);
}
