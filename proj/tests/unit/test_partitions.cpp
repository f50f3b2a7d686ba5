#include <gtest/gtest.h>

#include "macjack/partitions.hpp"

using namespace macjack;

namespace {

RatFunc q(int e = 1) { return RatFunc::q(e); }
RatFunc t(int e = 1) { return RatFunc::t(e); }
RatFunc one() { return RatFunc(1L); }

}  // namespace

TEST(Partitions, ParseAndPrint) {
  EXPECT_EQ(Partition::parse("(5,4,4,1)"), (Partition{5, 4, 4, 1}));
  EXPECT_EQ(Partition::parse("3,1"), (Partition{3, 1}));
  EXPECT_TRUE(Partition::parse("(0)").empty());
  EXPECT_TRUE(Partition::parse("()").empty());
  EXPECT_EQ((Partition{2, 1, 0, 0}).to_string(), "(2,1)");
  EXPECT_THROW(Partition::parse("(1,2)"), std::invalid_argument);
  EXPECT_THROW(Partition::parse("(a)"), std::invalid_argument);
}

TEST(Partitions, ArmLeg) {
  const Partition lam{5, 4, 4, 1};
  EXPECT_EQ(arm(lam, {1, 1}), 4);
  EXPECT_EQ(leg(lam, {1, 1}), 3);
  EXPECT_EQ(coarm(lam, {1, 1}), 0);
  EXPECT_EQ(coleg(lam, {1, 1}), 0);
  const Partition one_cell{1};
  EXPECT_EQ(arm(one_cell, {1, 1}) + leg(one_cell, {1, 1}) + coarm(one_cell, {1, 1}) + coleg(one_cell, {1, 1}), 0);
  const Partition l321{3, 2, 1};
  EXPECT_EQ(arm(l321, {2, 2}), 0);
  EXPECT_EQ(leg(l321, {2, 2}), 0);
  EXPECT_EQ(coarm(l321, {2, 2}), 1);
  EXPECT_EQ(coleg(l321, {2, 2}), 1);
  EXPECT_THROW(arm(l321, {3, 2}), std::out_of_range);
}

TEST(Partitions, ArmLegIdentities) {
  for (int n = 0; n <= 7; ++n) {
    for (const auto& lam : partitions_of(n, n)) {
      const Partition conj = lam.conjugate();
      for (int i = 1; i <= lam.length(); ++i) {
        for (int j = 1; j <= lam.part(i); ++j) {
          EXPECT_EQ(arm(lam, {i, j}) + coarm(lam, {i, j}) + 1, lam.part(i));
          EXPECT_EQ(leg(lam, {i, j}) + coleg(lam, {i, j}) + 1, conj.part(j));
        }
      }
    }
  }
}

TEST(Partitions, Dominance) {
  EXPECT_TRUE(dominance_leq(Partition{1, 1}, Partition{2}));
  EXPECT_TRUE(dominance_leq(Partition{2, 2}, Partition{3, 1}));
  EXPECT_FALSE(dominance_leq(Partition{3, 1}, Partition{2, 2}));
  EXPECT_THROW(dominance_leq(Partition{2}, Partition{2, 1}), std::invalid_argument);
}

TEST(Partitions, DominanceIsAPartialOrder) {
  for (int n = 0; n <= 8; ++n) {
    const auto ps = partitions_of(n, n);
    for (const auto& a : ps) {
      EXPECT_TRUE(dominance_leq(a, a));
      for (const auto& b : ps) {
        if (dominance_leq(a, b) && dominance_leq(b, a)) EXPECT_EQ(a, b);
        for (const auto& c : ps) {
          if (dominance_leq(a, b) && dominance_leq(b, c)) EXPECT_TRUE(dominance_leq(a, c));
        }
      }
    }
  }
}

TEST(Partitions, VerticalStrips) {
  EXPECT_EQ(vertical_strips(Partition{1}, 1, 2), (std::vector<Partition>{{2}, {1, 1}}));
  EXPECT_EQ(vertical_strips(Partition{}, 0, 3), (std::vector<Partition>{Partition{}}));
  EXPECT_EQ(vertical_strips(Partition{2, 2}, 2, 4), (std::vector<Partition>{{3, 3}, {3, 2, 1}, {2, 2, 1, 1}}));
  for (int n = 0; n <= 5; ++n) {
    for (const auto& lam : partitions_of(n, 4)) {
      for (int k = 0; k <= 4; ++k) {
        for (const auto& mu : vertical_strips(lam, k, 4)) {
          EXPECT_EQ(mu.weight(), lam.weight() + k);
          EXPECT_TRUE(is_vertical_strip(mu, lam));
          // at most one new cell in each row
          for (int i = 1; i <= mu.length(); ++i) EXPECT_LE(mu.part(i) - lam.part(i), 1);
        }
      }
    }
  }
}

TEST(Partitions, CLambda) {
  EXPECT_EQ(c_lambda_qt(Partition{1}), one() - t());
  EXPECT_EQ(c_lambda_qt(Partition{2}), (one() - q() * t()) * (one() - t()));
  EXPECT_TRUE(c_lambda_alpha(Partition{1}).is_one());
  EXPECT_EQ(c_lambda_alpha(Partition{1, 1}), RatFunc(2L, Field::alpha));
}

TEST(Partitions, BLambda) {
  EXPECT_TRUE(b_lambda(Partition{2}, {2, 1}, Field::qt).is_one());
  EXPECT_EQ(b_lambda(Partition{4, 2, 2}, {2, 2}, Field::qt), (one() - t(2)) / (one() - q() * t()));
  EXPECT_EQ(b_lambda(Partition{3, 2, 1}, {2, 2}, Field::qt), (one() - t()) / (one() - q()));
}

TEST(Partitions, Psi) {
  EXPECT_EQ(psi(Partition{4, 2, 2}, Partition{3, 2, 1}, Field::qt),
            (one() + t()) * (one() - q()) / (one() - q() * t()));
  EXPECT_TRUE(psi(Partition{1}, Partition{}, Field::qt).is_one());
  for (int n = 0; n <= 5; ++n) {
    for (const auto& lam : partitions_of(n, 4)) {
      EXPECT_TRUE(psi(lam.plus_column(4), lam, Field::qt).is_one());
      EXPECT_TRUE(psi(lam.plus_column(4), lam, Field::alpha).is_one());
    }
  }
  EXPECT_THROW(psi(Partition{3}, Partition{1}, Field::qt), std::invalid_argument);
}

TEST(Partitions, ShiftInvariance) {
  EXPECT_TRUE(shift_invariance_check(Partition{2}, Partition{1}, 2));
  for (int n = 0; n <= 6; ++n) {
    for (const auto& lam : partitions_of(n, 4)) {
      for (int k = 0; k <= 4; ++k) {
        for (const auto& mu : vertical_strips(lam, k, 4)) {
          EXPECT_TRUE(shift_invariance_check(mu, lam, 4, Field::qt));
          EXPECT_TRUE(shift_invariance_check(mu, lam, 4, Field::alpha));
        }
      }
    }
  }
}

TEST(Partitions, ColumnAdditionRatio) {
  // c_{lambda+(1^k)} / c_lambda = prod_{i<=k} (1 - t^{k+1-i} q^{lambda_i}).
  for (int k = 1; k <= 5; ++k) {
    for (int n = 0; n <= 5; ++n) {
      for (const auto& lam : partitions_of(n, k)) {
        RatFunc expect = one();
        for (int i = 1; i <= k; ++i) expect *= one() - t(k + 1 - i) * q(lam.part(i));
        EXPECT_EQ(c_lambda_qt(lam.plus_column(k)) / c_lambda_qt(lam), expect) << lam.to_string() << " k=" << k;
      }
    }
  }
}

TEST(Partitions, ExtendedPartitions) {
  const auto beta = ExtendedPartition::from_integers({1, 1, -1, -1});
  EXPECT_EQ(beta.shape(), (Partition{2, 2}));
  EXPECT_EQ(beta.last(), BigRational(-1));
  EXPECT_EQ(beta.to_string(), "(1,1,-1,-1)");
  const auto strips = vertical_strips(beta, 2);
  ASSERT_EQ(strips.size(), 3u);
  EXPECT_EQ(strips[0], ExtendedPartition::from_integers({2, 2, -1, -1}));
  EXPECT_EQ(strips[1], ExtendedPartition::from_integers({2, 1, 0, -1}));
  EXPECT_EQ(strips[2], ExtendedPartition::from_integers({1, 1, 0, 0}));
  const ExtendedPartition half(Partition{1}, BigRational(1, 2), 2);
  EXPECT_FALSE(half.is_integral());
  EXPECT_EQ(half.to_string(), "(3/2,1/2)");
  EXPECT_EQ(ExtendedPartition::parse("(1,1,-1,-1)", 4), beta);
}
