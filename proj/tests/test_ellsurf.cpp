#include <gtest/gtest.h>

#include "k3lat/ellsurf.hpp"
#include "oracles.hpp"

using namespace k3lat;
using K = KodairaType;

TEST(Kodaira, EulerAndComponents) {
  // standard table
  EXPECT_EQ(euler_number(K::I(1)), 1);
  EXPECT_EQ(euler_number(K::I(7)), 7);
  EXPECT_EQ(euler_number(K::Istar(0)), 6);
  EXPECT_EQ(euler_number(K::Istar(4)), 10);
  EXPECT_EQ(euler_number(K::of(K::Kind::II)), 2);
  EXPECT_EQ(euler_number(K::of(K::Kind::III)), 3);
  EXPECT_EQ(euler_number(K::of(K::Kind::IV)), 4);
  EXPECT_EQ(euler_number(K::of(K::Kind::IVstar)), 8);
  EXPECT_EQ(euler_number(K::of(K::Kind::IIIstar)), 9);
  EXPECT_EQ(euler_number(K::of(K::Kind::IIstar)), 10);
  EXPECT_EQ(K::I(6).components(), 6);
  EXPECT_EQ(K::Istar(2).components(), 7);
  EXPECT_EQ(K::of(K::Kind::IIstar).components(), 9);
}

TEST(Kodaira, AdeAndRootDisc) {
  EXPECT_FALSE(kodaira_to_ade(K::I(1)));
  EXPECT_EQ(*kodaira_to_ade(K::I(6)), (AdeLabel{RootType::A, 5}));
  EXPECT_EQ(*kodaira_to_ade(K::Istar(4)), (AdeLabel{RootType::D, 8}));
  EXPECT_EQ(*kodaira_to_ade(K::of(K::Kind::IVstar)), (AdeLabel{RootType::E, 6}));
  // root_disc agrees with the Gram determinant
  for (auto t : {K::I(2), K::I(5), K::Istar(0), K::Istar(3), K::of(K::Kind::III), K::of(K::Kind::IV),
                 K::of(K::Kind::IVstar), K::of(K::Kind::IIIstar), K::of(K::Kind::IIstar)}) {
    auto a = *kodaira_to_ade(t);
    EXPECT_EQ(root_disc(a), abs(root_lattice(a.type, a.rank).det())) << t.str();
  }
}

TEST(Kodaira, ParseRoundTrip) {
  for (auto t : {K::I(3), K::Istar(0), K::Istar(2), K::of(K::Kind::II), K::of(K::Kind::IIIstar)})
    EXPECT_EQ(K::parse(t.str()), t) << t.str();
  EXPECT_THROW(K::parse("Q5"), Error);
}

TEST(Euler, TotalsAndH20) {
  EXPECT_EQ(total_euler(FiberConfig{K::Istar(0)} + repeat(K::I(2), 9)), 24);
  EXPECT_EQ(total_euler(repeat(K::I(2), 6 * 3)), 36);
  EXPECT_EQ(h20_from_euler(24), 1);
  EXPECT_EQ(h20_from_euler(12), 0);
  EXPECT_EQ(h20_from_euler(36), 2);
}

TEST(ShiodaTate, Ranks) {
  EXPECT_EQ(shioda_tate_rank({2, 16, 4}, FiberConfig{K::Istar(0)} + repeat(K::I(2), 9)), 1);
  EXPECT_EQ(shioda_tate_rank({2, 18, 1}, FiberConfig{K::of(K::Kind::IIstar), K::of(K::Kind::IIstar)}), 0);
  EXPECT_EQ(shioda_tate_rank({2, 20, 1}, FiberConfig{K::of(K::Kind::IIstar), K::of(K::Kind::IIstar)}), 2);
  EXPECT_EQ(shioda_tate_rank({1, 10, 1}, {}), 8);
}

TEST(TrivialLattice, DiscriminantIsProductOfRootDiscs) {
  EXPECT_EQ(trivial_lattice_disc(FiberConfig{K::Istar(0)} + repeat(K::I(2), 9)), 2048);
  EXPECT_EQ(trivial_lattice_disc(FiberConfig{K::Istar(2), K::I(3)} + repeat(K::I(2), 6)), 768);
  EXPECT_EQ(trivial_lattice_disc(FiberConfig{K::Istar(4), K::I(6), K::I(2)}), 48);
}

TEST(Height, LocalContributions) {
  // I_n: i(n-i)/n; I_b*: 1 near, 1 + b/4 far; III: 1/2; IV: 2/3; IV*: 4/3; III*: 3/2
  for (int n = 2; n <= 8; ++n)
    for (int i = 0; i < n; ++i) {
      Rat want(i * (n - i), n);
      want.canonicalize();
      EXPECT_EQ(height_contribution(K::I(n), i), want);
    }
  EXPECT_EQ(height_contribution(K::Istar(2), 1), 1);
  EXPECT_EQ(height_contribution(K::Istar(2), 2), Rat(3, 2));
  EXPECT_EQ(height_contribution(K::Istar(0), 3), 1);
  EXPECT_EQ(height_contribution(K::of(K::Kind::III), 1), Rat(1, 2));
  EXPECT_EQ(height_contribution(K::of(K::Kind::IV), 2), Rat(2, 3));
  EXPECT_EQ(height_contribution(K::of(K::Kind::IVstar), 1), Rat(4, 3));
  EXPECT_EQ(height_contribution(K::of(K::Kind::IIIstar), 1), Rat(3, 2));
  EXPECT_THROW(height_contribution(K::I(3), 3), Error);
}

TEST(Height, Pairing) {
  // 2 chi + 2 P.O - sum of contributions
  SectionIncidence s{1, {{K::Istar(0), 0}}};
  for (int i = 0; i < 9; ++i) s.fibers.push_back({K::I(2), 1});
  EXPECT_EQ(height_pairing({2, 16, 4}, s), Rat(3, 2));
  SectionIncidence t{0, {{K::Istar(0), 1}}};
  for (int i = 0; i < 9; ++i) t.fibers.push_back({K::I(2), i < 3 ? 0 : 1});
  EXPECT_EQ(height_pairing({2, 16, 4}, t), 0);
}

TEST(MwDisc, Relation) {
  auto r = mw_disc_relation(192, FiberConfig{K::Istar(0)} + repeat(K::I(2), 9), 4, Rat(3, 2));
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.lhs, 3072);
  EXPECT_FALSE(mw_disc_relation(190, FiberConfig{K::Istar(0)} + repeat(K::I(2), 9), 4, Rat(3, 2)).holds);
}

// Determinant formula checked exhaustively with an independent evaluation.
TEST(Table1, ExhaustiveSmallRange) {
  for (int n = 1; n <= 4; ++n)
    for (long a = -3; a <= 3; ++a)
      for (long b = -3; b <= 3; ++b) {
        IntMatrix m = table1_matrix(n, a, b);
        ASSERT_EQ(m.rows(), static_cast<std::size_t>(5 + 6 * n));
        ASSERT_TRUE(m.is_symmetric());
        Int want = Int(-n) * (Int(1) << (6 * n)) * (a + b) * (a + b);
        ASSERT_EQ(det(m), want) << "n=" << n << " a=" << a << " b=" << b;
        ASSERT_EQ(table1_det_formula(n, a, b), want);
        ASSERT_TRUE(table1_det_identity(n, a, b));
      }
}
