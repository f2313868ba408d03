#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace k3lat;

class HilbertOracle : public ::testing::TestWithParam<long> {};

TEST_P(HilbertOracle, MatchesSearchModPk) {
  const long p = GetParam();
  for (long a = -30; a <= 30; ++a)
    for (long b = -30; b <= 30; ++b) {
      if (a == 0 || b == 0) continue;
      ASSERT_EQ(hilbert_symbol(a, b, p), oracle::hilbert_by_search(a, b, p)) << "(" << a << "," << b << ")_" << p;
    }
}

INSTANTIATE_TEST_SUITE_P(Primes, HilbertOracle, ::testing::Values(2, 3, 5, 7, 11, 13));

TEST(Hilbert, RealPlace) {
  EXPECT_EQ(hilbert_symbol(-1, -1, kInfinity), -1);
  EXPECT_EQ(hilbert_symbol(-1, 3, kInfinity), 1);
  EXPECT_EQ(hilbert_symbol(Rat(-1, 7), Rat(-2, 3), kInfinity), -1);
}

TEST(Hilbert, RationalArgumentsUseSquareClasses) {
  EXPECT_EQ(hilbert_symbol(Rat(1, 3), 5, 5), hilbert_symbol(3, 5, 5));
  EXPECT_EQ(hilbert_symbol(Rat(-8, 9), 7, 2), hilbert_symbol(-2, 7, 2));
  EXPECT_THROW(hilbert_symbol(0, 1, 3), Error);
}

TEST(Hilbert, Reciprocity200Pairs) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long> d(-100000, 100000);
  int done = 0;
  while (done < 200) {
    long a = d(rng), b = d(rng);
    if (a == 0 || b == 0) continue;
    Rat ra(a, 1 + std::abs(d(rng)) % 50), rb(b);
    ra.canonicalize();
    int prod = hilbert_symbol(ra, rb, kInfinity);
    std::set<Int> primes = {2};
    for (const auto& x : {ra.get_num(), ra.get_den(), rb.get_num()})
      for (const auto& p : prime_divisors(Int(x))) primes.insert(p);
    for (const auto& p : primes) prod *= hilbert_symbol(ra, rb, p);
    ASSERT_EQ(prod, 1) << ra << " " << rb;
    ++done;
  }
}

TEST(Arithmetic, FactorAndClasses) {
  EXPECT_EQ(factor(-360), (std::vector<Int>{2, 2, 2, 3, 3, 5}));
  EXPECT_EQ(prime_divisors(1156), (std::vector<Int>{2, 17}));
  EXPECT_TRUE(is_prime(41));
  EXPECT_FALSE(is_prime(51));
  EXPECT_EQ(squarefree_part(-72), -2);
  EXPECT_EQ(squarefree_class(Rat(27, 8)), 6);
  EXPECT_EQ(valuation(96, 2), 5);
  EXPECT_TRUE(is_local_square(17, 2));
  EXPECT_FALSE(is_local_square(5, 2));
  EXPECT_TRUE(is_local_square(-1, 5));
  EXPECT_FALSE(is_local_square(-1, 3));
}

TEST(Diagonalize, EquivalentToInput) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 60; ++t) {
    IntMatrix g = oracle::random_symmetric(rng, 2 + t % 4, -6, 6);
    if (det(g) == 0) continue;
    auto d = diagonalize(g);
    ASSERT_TRUE(rationally_equivalent(g, IntMatrix::diagonal(d))) << to_string(g);
  }
}

TEST(Hasse, DiagonalFormula) {
  // prod_{i<j} (a_i, a_j)_p by hand
  std::vector<Int> d = {-1, -1, -2, -6, 7, 7};
  for (long p : {2L, 3L, 7L, 0L}) {
    int h = 1;
    for (std::size_t i = 0; i < d.size(); ++i)
      for (std::size_t j = i + 1; j < d.size(); ++j) h *= hilbert_symbol(d[i], d[j], p);
    EXPECT_EQ(hasse_invariant(d, p), h);
  }
}

// Box search finds an isotropic vector exactly when the Witt index over Q is
// positive.  For ternary diagonal forms with |a_i| <= 6 Holzer's bound puts a
// solution inside the box.
TEST(WittIndex, TernaryVsBoxSearch) {
  for (long a = -6; a <= 6; ++a)
    for (long b = a; b <= 6; ++b)
      for (long c = b; c <= 6; ++c) {
        if (!a || !b || !c) continue;
        IntMatrix g = IntMatrix::diagonal({a, b, c});
        ASSERT_EQ(witt_index_global(g) >= 1, oracle::isotropic_in_box(g, 20)) << a << " " << b << " " << c;
      }
}

TEST(WittIndex, BinaryVsBoxSearch) {
  for (long a = -12; a <= 12; ++a)
    for (long b = -12; b <= 12; ++b) {
      if (!a || !b) continue;
      IntMatrix g = IntMatrix::diagonal({a, b});
      ASSERT_EQ(witt_index_global(g) >= 1, oracle::isotropic_in_box(g, 20));
    }
}

TEST(WittIndex, RandomRank4BoxImpliesIsotropic) {
  std::mt19937_64 rng(99);
  int isotropic = 0;
  for (int t = 0; t < 40; ++t) {
    IntMatrix g = oracle::random_symmetric(rng, 4, -4, 4);
    if (det(g) == 0) continue;
    bool box = oracle::isotropic_in_box(g, 4);
    if (box) {
      ++isotropic;
      ASSERT_GE(witt_index_global(g), 1u) << to_string(g);
    }
    // a definite form is anisotropic over R
    auto s = signature(g);
    if (s.pos == 0 || s.neg == 0) ASSERT_EQ(witt_index_global(g), 0u);
  }
  EXPECT_GT(isotropic, 0);
}

TEST(WittIndex, LocalKnownCases) {
  IntMatrix u = hyperbolic().gram;
  EXPECT_EQ(witt_index(block_sum(u, u), 2), 2u);
  // norm form of the quaternion algebra (-1,-1): anisotropic at 2 and at infinity
  IntMatrix q = IntMatrix::diagonal({1, 1, 1, 1});
  EXPECT_EQ(anisotropic_dimension(q, 2), 4u);
  EXPECT_EQ(anisotropic_dimension(q, 3), 0u);
  EXPECT_EQ(anisotropic_dimension(q, kInfinity), 4u);
  EXPECT_EQ(witt_index(q, 5), 2u);
  // over Q_p every form of rank >= 5 is isotropic
  EXPECT_LE(anisotropic_dimension(IntMatrix::diagonal({1, 1, 1, 1, 1}), 2), 4u);
}

TEST(KPlanes, HyperbolicSums) {
  IntMatrix u = hyperbolic().gram;
  IntMatrix u3 = block_sum(block_sum(u, u), u);
  EXPECT_TRUE(has_k_planes(u3, 2));
  EXPECT_FALSE(has_k_planes(u3, 3));
  EXPECT_TRUE(has_k_planes(u3, 2, Place(7)));
  EXPECT_FALSE(has_k_planes(IntMatrix::diagonal({1, 1, 1}), 0));
}

TEST(Invariants, RescalingCertificate) {
  std::mt19937_64 rng(17);
  int count = 0;
  std::vector<IntMatrix> forms;
  for (const auto& n : {"T", "Lambda(3)", "Lp(17)", "Np(5,2)", "U_E8_E6"}) forms.push_back(build_named(n).gram);
  while (forms.size() < 20) {
    IntMatrix g = oracle::random_symmetric(rng, 2 + forms.size() % 5, -7, 7);
    if (det(g) != 0) forms.push_back(g);
  }
  for (const auto& g : forms)
    for (long n : {2, 3, 5}) {
      IntMatrix ng = g;
      for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) ng(i, j) *= n;
      ASSERT_EQ(rescaled(invariants(g), n), invariants(ng)) << to_string(g) << " * " << n;
      ASSERT_TRUE(quadrics_isomorphic(g, ng));
      ++count;
    }
  EXPECT_EQ(count, 60);
}

TEST(Invariants, EquivalenceDetectsDifferences) {
  EXPECT_TRUE(rationally_equivalent(IntMatrix{{2, 1}, {1, 2}}, IntMatrix::diagonal({2, 6})));
  EXPECT_FALSE(rationally_equivalent(IntMatrix::diagonal({1, 1}), IntMatrix::diagonal({1, 2})));
  EXPECT_FALSE(rationally_equivalent(IntMatrix::diagonal({1, 1, 1, 1}), IntMatrix::diagonal({1, 1, 1, -1})));
  EXPECT_FALSE(quadrics_isomorphic(IntMatrix::diagonal({1, 1, 1}), IntMatrix::diagonal({1, 1, -1})));
  EXPECT_TRUE(quadrics_isomorphic(IntMatrix::diagonal({1, 1, -1}), IntMatrix::diagonal({-1, -1, 1})));
}

TEST(Invariants, RulingDisc) {
  EXPECT_EQ(ruling_disc(hyperbolic().gram), 1);
  EXPECT_THROW(ruling_disc(IntMatrix::diagonal({1, 1, 1})), Error);
}
