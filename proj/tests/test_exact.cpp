#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace k3lat;

TEST(Det, MatchesLeibnizOnRandomMatrices) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-9, 9);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = 1 + t % 6;
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
    ASSERT_EQ(det(m), oracle::leibniz_det(m)) << to_string(m);
  }
}

TEST(Det, Singular) {
  IntMatrix m{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  EXPECT_EQ(det(m), 0);
  EXPECT_EQ(rank(to_rat(m)), 2u);
}

TEST(Det, LargeEntriesStayExact) {
  IntMatrix m(2, 2);
  m(0, 0) = Int("123456789012345678901234567890");
  m(1, 1) = Int("987654321098765432109876543210");
  m(0, 1) = m(1, 0) = 1;
  EXPECT_EQ(det(m), m(0, 0) * m(1, 1) - 1);
}

class SmithRandom : public ::testing::TestWithParam<int> {};

TEST_P(SmithRandom, ReconstructsAndDivides) {
  std::mt19937_64 rng(GetParam());
  std::uniform_int_distribution<long> d(-12, 12);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  for (int t = 0; t < 40; ++t) {
    std::size_t r = dim(rng), c = dim(rng);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
    auto s = smith_normal_form(m);
    ASSERT_EQ(s.u * m * s.v, s.d);
    ASSERT_EQ(abs(det(s.u)), 1);
    ASSERT_EQ(abs(det(s.v)), 1);
    Int prev = 1;
    bool zero_seen = false;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        if (i != j) {
          ASSERT_EQ(s.d(i, j), 0);
          continue;
        }
        const Int& x = s.d(i, i);
        ASSERT_GE(x, 0);
        if (x == 0) {
          zero_seen = true;
          continue;
        }
        ASSERT_FALSE(zero_seen);
        ASSERT_EQ(x % prev, 0);
        prev = x;
      }
    if (r == c) {
      Int prod = 1;
      for (std::size_t i = 0; i < r; ++i) prod *= s.d(i, i);
      ASSERT_EQ(prod, abs(det(m)));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, SmithRandom, ::testing::Values(1, 2, 3, 4, 5));

TEST(Smith, KnownInvariantFactors) {
  EXPECT_EQ(invariant_factors(IntMatrix{{2, 0}, {0, 3}}), (std::vector<Int>{1, 6}));
  EXPECT_EQ(invariant_factors(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}), (std::vector<Int>{2, 6, 12}));
}

TEST(Kernel, SaturatedAndCorrect) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-6, 6);
  for (int t = 0; t < 50; ++t) {
    IntMatrix m(2, 5);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 5; ++j) m(i, j) = d(rng);
    IntMatrix k = kernel_basis(m);
    ASSERT_EQ(k.cols(), 5 - rank(to_rat(m)));
    IntMatrix z = m * k;
    for (std::size_t i = 0; i < z.rows(); ++i)
      for (std::size_t j = 0; j < z.cols(); ++j) ASSERT_EQ(z(i, j), 0);
    // saturated: the invariant factors of the basis are all 1
    for (const auto& f : invariant_factors(k)) ASSERT_EQ(f, 1);
  }
}

TEST(RowSpan, SameLatticeAsInput) {
  IntMatrix m{{2, 4}, {3, 5}, {5, 9}};
  IntMatrix h = row_span_basis(m);
  ASSERT_EQ(h.rows(), 2u);
  EXPECT_EQ(abs(det(h)), 2);  // span of (2,4),(3,5) has index 2
}

TEST(Congruence, DiagonalHasSameSignatureAndDetClass) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    IntMatrix g = oracle::random_symmetric(rng, 1 + t % 5, -5, 5);
    auto cd = congruence_diagonal(to_rat(g));
    Signature s;
    Rat prod = 1;
    for (const auto& e : cd.entries) {
      (e > 0 ? s.pos : s.neg)++;
      prod *= e;
    }
    s.zero = cd.nullity;
    ASSERT_EQ(s, signature(g)) << to_string(g);
    Int dg = det(g);
    if (dg != 0) {
      // product of the diagonal and det differ by a rational square
      ASSERT_EQ(squarefree_class(prod), squarefree_class(Rat(dg)));
    }
  }
}

TEST(Signature, HyperbolicPivots) {
  EXPECT_EQ(signature(IntMatrix{{0, 1}, {1, 0}}), (Signature{1, 0, 1}));
  EXPECT_EQ(signature(IntMatrix{{0, 0}, {0, 0}}), (Signature{0, 2, 0}));
  EXPECT_EQ(to_string(Signature{3, 0, 19}), "(3,0,19)");
}

TEST(Solve, InverseAndSolve) {
  RatMatrix a = to_rat(IntMatrix{{2, 1}, {1, 1}});
  auto inv = inverse(a);
  ASSERT_TRUE(inv);
  EXPECT_EQ(a * *inv, RatMatrix::identity(2));
  auto x = solve(a, RatVector{Rat(3), Rat(2)});
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[0], 1);
  EXPECT_EQ((*x)[1], 1);
  EXPECT_FALSE(inverse(to_rat(IntMatrix{{1, 2}, {2, 4}})));
}

TEST(ModRat, Representatives) {
  EXPECT_EQ(mod_rat(Rat(-1, 2), Rat(2)), Rat(3, 2));
  EXPECT_EQ(mod_rat(Rat(7, 3), Rat(1)), Rat(1, 3));
  EXPECT_EQ(gcd_of(IntVector{6, -9, 15}), 3);
  EXPECT_EQ(lcm_denominators(RatVector{Rat(1, 2), Rat(1, 3)}), 6);
}

TEST(Conversions, ToIntRejectsFractions) {
  EXPECT_THROW(to_int(RatVector{Rat(1, 2)}), Error);
  EXPECT_EQ(to_int(RatVector{Rat(4, 2)}), (IntVector{2}));
  EXPECT_THROW((IntMatrix{{1, 2}, {3}}), Error);
}
