#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "cylspec/algebra/charpoly.hpp"
#include "cylspec/algebra/chebyshev.hpp"
#include "cylspec/algebra/eigen.hpp"
#include "cylspec/algebra/resolvent.hpp"
#include "cylspec/algebra/roots.hpp"

using namespace cylspec;

namespace {

IntMatrix complete(std::size_t n) {
  IntMatrix a(n, n, 1);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = 0;
  return a;
}

IntMatrix path(std::size_t n) {
  IntMatrix a(n, n, 0);
  for (std::size_t i = 0; i + 1 < n; ++i) a(i, i + 1) = a(i + 1, i) = 1;
  return a;
}

IntMatrix random_symmetric(std::mt19937_64& rng, std::size_t n, int lo, int hi, bool zero_diag) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix a(n, n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      if (i == j && zero_diag) continue;
      a(i, j) = a(j, i) = d(rng);
    }
  return a;
}

// Independent oracle: det(x0 I - A) by rational elimination.
Rational det_shift(const IntMatrix& a, const Rational& x0) {
  Matrix<Rational> m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = (i == j ? x0 : Rational(0)) - Rational(a(i, j));
  return determinant(m);
}

Matrix<Rational> inverse(Matrix<Rational> a) {
  const std::size_t n = a.rows();
  Matrix<Rational> inv = Matrix<Rational>::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (a(p, c) == 0) ++p;
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a(p, j), a(c, j));
      std::swap(inv(p, j), inv(c, j));
    }
    Rational s = 1 / a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) *= s;
      inv(c, j) *= s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

std::vector<std::uint64_t> random_primes(std::mt19937_64& rng, int count) {
  std::vector<std::uint64_t> ps;
  std::uniform_int_distribution<std::uint64_t> d(1000, 1ull << 40);
  while (static_cast<int>(ps.size()) < count) {
    std::uint64_t c = d(rng) | 1u;
    while (!modular::is_prime(c)) c += 2;
    ps.push_back(c);
  }
  return ps;
}

}  // namespace

TEST(CharpolyExact, SmallExamples) {
  EXPECT_EQ(charpoly_exact(IntMatrix{{0, 1}, {1, 0}}), from_integers({-1, 0, 1}));
  EXPECT_EQ(charpoly_exact(complete(3)), from_integers({-2, -3, 0, 1}));
  EXPECT_EQ(charpoly_exact(path(3)), from_integers({0, -2, 0, 1}));
  EXPECT_EQ(charpoly_exact(IntMatrix(0, 0)), from_integers({1}));
}

TEST(CharpolyExact, RejectsNonSquare) {
  EXPECT_THROW(charpoly_exact(IntMatrix(2, 3, 0)), DimensionError);
  EXPECT_THROW(charpoly_modp(IntMatrix(3, 2, 0), 7), DimensionError);
}

TEST(CharpolyModp, SmallExamples) {
  EXPECT_EQ(charpoly_modp(complete(3), 5), (std::vector<std::uint64_t>{3, 2, 0, 1}));
  EXPECT_EQ(charpoly_modp(IntMatrix(4, 4, 0), 7), (std::vector<std::uint64_t>{0, 0, 0, 0, 1}));
  EXPECT_EQ(charpoly_modp(IntMatrix{{0, 1}, {1, 0}}, 3), (std::vector<std::uint64_t>{2, 0, 1}));
  EXPECT_THROW(charpoly_modp(complete(3), 9), ArgumentError);
  EXPECT_THROW(charpoly_modp(complete(3), 1), ArgumentError);
}

TEST(CharpolyExact, AgreesWithModularReduction) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 12;
    IntMatrix a = random_symmetric(rng, n, 0, 1, true);
    Polynomial exact = charpoly_exact(a);
    for (std::uint64_t p : random_primes(rng, 5)) {
      auto mod = charpoly_modp(a, p);
      ASSERT_EQ(mod.size(), n + 1);
      for (std::size_t k = 0; k <= n; ++k) {
        Integer c = exact.coeff(k).get_num() % Integer(static_cast<unsigned long>(p));
        if (c < 0) c += static_cast<unsigned long>(p);
        EXPECT_EQ(c.get_ui(), mod[k]) << "n=" << n << " p=" << p << " k=" << k;
      }
    }
  }
}

TEST(CharpolyExact, AgreesWithDeterminantOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + trial % 9;
    IntMatrix a = random_symmetric(rng, n, -4, 4, false);
    a(0, n - 1) += 3;  // also exercise non-symmetric input
    Polynomial p = charpoly_exact(a);
    ASSERT_EQ(p.degree(), static_cast<int>(n));
    for (int x = -3; x <= 3; ++x) EXPECT_EQ(p(make_rational(x, 2)), det_shift(a, make_rational(x, 2)));
  }
}

TEST(CharpolyExact, LargeCoefficientsNeedSeveralPrimes) {
  // K_40: (x - 39)(x + 1)^39 has coefficients far above 2^62.
  Polynomial p = charpoly_exact(complete(40));
  Polynomial expected = Polynomial::linear(39) * Polynomial::linear(-1).pow(39);
  EXPECT_EQ(p, expected);
}

TEST(Chebyshev, Recurrence) {
  EXPECT_EQ(chebyshev_U(0), from_integers({1}));
  EXPECT_EQ(chebyshev_U(1), from_integers({0, 2}));
  EXPECT_EQ(chebyshev_U(2), from_integers({-1, 0, 4}));
  EXPECT_EQ(chebyshev_U_half(3), from_integers({0, -2, 0, 1}));
  EXPECT_EQ(chebyshev_U_half(3), charpoly_exact(path(3)));
}

TEST(Chebyshev, PathCharpolyIdentity) {
  for (unsigned k = 0; k <= 10; ++k) EXPECT_EQ(charpoly_exact(path(k)), chebyshev_U_half(k)) << k;
}

TEST(RationalFunction, CanonicalForm) {
  Polynomial x = Polynomial::x();
  RationalFunction f(x * x - Polynomial::constant(1), Rational(2) * (x - Polynomial::constant(1)));
  EXPECT_EQ(f.num(), Rational(1, 2) * (x + Polynomial::constant(1)));
  EXPECT_EQ(f.den(), from_integers({1}));
  EXPECT_TRUE(f.is_polynomial());
  RationalFunction g = RationalFunction(x).inverse() + RationalFunction(x).inverse();
  EXPECT_EQ(g, RationalFunction(Polynomial::constant(2), x));
  EXPECT_THROW(RationalFunction().inverse(), DegenerateLabelError);
  EXPECT_THROW(RationalFunction(x, Polynomial()), ArgumentError);
}

TEST(Resolvent, PathCylinderOneInnerVertex) {
  auto r = resolvent_blocks(IntMatrix{{0}}, IntMatrix{{1}}, IntMatrix{{1}});
  RationalFunction one_over_x(Polynomial::constant(1), Polynomial::x());
  EXPECT_EQ(r.diagonal(0, 0), one_over_x);
  EXPECT_EQ(r.across(0, 0), one_over_x);
}

TEST(Resolvent, InnerVertexCylinderGivesJOverX) {
  auto r = resolvent_blocks(IntMatrix{{0}}, IntMatrix{{1}, {1}}, IntMatrix{{1}, {1}});
  RationalFunction one_over_x(Polynomial::constant(1), Polynomial::x());
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      EXPECT_EQ(r.diagonal(i, j), one_over_x);
      EXPECT_EQ(r.across(i, j), one_over_x);
    }
}

TEST(Resolvent, PathCylinderTwoInnerVertices) {
  IntMatrix c = path(2), e{{1, 0}}, ep{{0, 1}};
  auto r = resolvent_blocks(c, e, ep);
  Polynomial x = Polynomial::x(), x2m1 = from_integers({-1, 0, 1});
  EXPECT_EQ(r.diagonal(0, 0), RationalFunction(x, x2m1));
  EXPECT_EQ(r.across(0, 0), RationalFunction(Polynomial::constant(1), x2m1));
  // U_{k-1}(x/2)/U_k(x/2) and 1/U_k(x/2)
  EXPECT_EQ(r.diagonal(0, 0), RationalFunction(chebyshev_U_half(1), chebyshev_U_half(2)));
  EXPECT_EQ(r.across(0, 0), RationalFunction(Polynomial::constant(1), chebyshev_U_half(2)));
}

TEST(Resolvent, MatchesPointwiseInverse) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t m = 1 + trial % 4, base = 1 + trial % 3;
    IntMatrix c = random_symmetric(rng, m, 0, 1, true);
    std::uniform_int_distribution<int> bit(0, 1);
    IntMatrix e(base, m), ep(base, m);
    for (std::size_t i = 0; i < base; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        e(i, j) = bit(rng);
        ep(i, j) = bit(rng);
      }
    auto r = resolvent_blocks(c, e, ep);
    for (int x0 : {7, 9, -11}) {
      Matrix<Rational> shift(m, m);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) shift(i, j) = (i == j ? Rational(x0) : Rational(0)) - Rational(c(i, j));
      Matrix<Rational> inv = inverse(shift);
      Matrix<Rational> d = e.cast<Rational>() * inv * e.transpose().cast<Rational>();
      Matrix<Rational> a = e.cast<Rational>() * inv * ep.transpose().cast<Rational>();
      for (std::size_t i = 0; i < base; ++i)
        for (std::size_t j = 0; j < base; ++j) {
          EXPECT_EQ(r.diagonal(i, j)(Rational(x0)), d(i, j));
          EXPECT_EQ(r.across(i, j)(Rational(x0)), a(i, j));
        }
    }
  }
}

TEST(Resolvent, AdjugateIdentityAtIntegerPoints) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t m = 1 + trial % 6;
    IntMatrix c = random_symmetric(rng, m, 0, 1, true);
    Adjugate adj = adjugate_of_shift(c);
    for (int x0 : {-2, 3, 10}) {
      Matrix<Integer> shift(m, m);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) shift(i, j) = Integer((i == j ? x0 : 0) - c(i, j));
      Matrix<Integer> prod = shift * adj.at(Integer(x0));
      Integer phi = adj.charpoly(Rational(x0)).get_num();
      EXPECT_EQ(prod, phi * Matrix<Integer>::identity(m));
    }
  }
}

TEST(EigSymmetric, SmallExamples) {
  auto k3 = eig_symmetric(complete(3));
  ASSERT_EQ(k3.size(), 3u);
  EXPECT_NEAR(k3[0], -1, 1e-12);
  EXPECT_NEAR(k3[1], -1, 1e-12);
  EXPECT_NEAR(k3[2], 2, 1e-12);
  auto d = eig_symmetric(Matrix<double>{{5, 0}, {0, -1}});
  EXPECT_NEAR(d[0], -1, 1e-12);
  EXPECT_NEAR(d[1], 5, 1e-12);
  EXPECT_THROW(eig_symmetric(Matrix<double>{{0, 1}, {0, 0}}), ValidationError);
}

TEST(RealRoots, SmallExamples) {
  auto r = real_roots(from_integers({-2, 0, 1}));
  ASSERT_EQ(r.size(), 2u);
  EXPECT_NEAR(r[0].value, -std::sqrt(2.0), 1e-10);
  EXPECT_NEAR(r[1].value, std::sqrt(2.0), 1e-10);
  auto p2 = real_roots(from_integers({-2, -2, 1}));
  ASSERT_EQ(p2.size(), 2u);
  EXPECT_NEAR(p2[0].value, 1 - std::sqrt(3.0), 1e-10);
  EXPECT_NEAR(p2[1].value, 1 + std::sqrt(3.0), 1e-10);
  auto rep = real_roots(Polynomial::linear(1).pow(3) * from_integers({1, 0, 1}));
  ASSERT_EQ(rep.size(), 1u);
  EXPECT_EQ(rep[0].multiplicity, 3u);
  EXPECT_THROW(real_roots(Polynomial()), ArgumentError);
}

TEST(RealRoots, MatchNumericEigenvalues) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 24; ++trial) {
    const std::size_t n = 1 + trial % 12;
    IntMatrix a = random_symmetric(rng, n, trial % 2 ? 0 : -2, trial % 2 ? 1 : 2, trial % 2);
    auto roots = flatten(real_roots(charpoly_exact(a), 1e-12));
    auto eig = eig_symmetric(a);
    ASSERT_EQ(roots.size(), eig.size());
    EXPECT_LT(multiset_distance(roots, eig), 1e-8) << "n=" << n;
  }
}

TEST(Gcd, CoprimeFastPathAndCommonFactors) {
  Polynomial a = from_integers({-2, 1}) * from_integers({3, 0, 1}), b = from_integers({-2, 1}) * from_integers({5, 7});
  EXPECT_EQ(gcd(a, b), from_integers({-2, 1}));
  EXPECT_EQ(gcd(from_integers({1, 1}), from_integers({-1, 1})), Polynomial::constant(1));
  // Rational coefficients with a shared quadratic factor.
  Polynomial q = Polynomial({make_rational(1, 3), make_rational(-2, 5), Rational(1)});
  EXPECT_EQ(gcd(q * from_integers({4, 1}), q * Polynomial({make_rational(7, 2), Rational(1)})), q);
  EXPECT_EQ(gcd(Polynomial(), a), a.monic());
}

TEST(CharpolyRational, MatchesHessenbergOverQ) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial);
    Matrix<Rational> m(n, n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = make_rational(num(rng), den(rng));
    EXPECT_EQ(charpoly_rational(m), Polynomial(hessenberg_charpoly(m, StdField<Rational>{}))) << n;
  }
  // Denominators too large for 64-bit scaling take the field path.
  Matrix<Rational> big(2, 2, Rational(0));
  big(0, 0) = Rational(1) / Rational(Integer("100000000000000000000"));
  big(1, 1) = 3;
  EXPECT_EQ(charpoly_rational(big), Polynomial::linear(big(0, 0)) * Polynomial::linear(3));
}
