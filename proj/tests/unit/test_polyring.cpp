#include <gtest/gtest.h>

#include <random>

#include "macjack/polyring.hpp"

using namespace macjack;

namespace {

MPoly x(int n, int i) { return MPoly::variable(n, i); }
MPoly c(int n, long v) { return MPoly::constant(n, RatFunc(v)); }

MPoly random_mpoly(std::mt19937_64& rng, int n, int max_exp) {
  std::uniform_int_distribution<int> e(0, max_exp), co(-3, 3), cnt(1, 5), pq(0, 2);
  std::vector<MPoly::Term> terms;
  const int k = cnt(rng);
  for (int i = 0; i < k; ++i) {
    Monomial m;
    for (int v = 0; v < n; ++v) m[v] = static_cast<std::int16_t>(e(rng));
    terms.emplace_back(m, RatFunc(static_cast<long>(co(rng))) * RatFunc::q(pq(rng)) + RatFunc::t(pq(rng)));
  }
  return MPoly::from_terms(n, Field::qt, std::move(terms));
}

}  // namespace

TEST(Polyring, ShiftQ) {
  EXPECT_EQ(shift_q(x(2, 1) * x(2, 2), 1), x(2, 1) * x(2, 2) * RatFunc::q());
  EXPECT_EQ(shift_q(c(2, 5), 1), c(2, 5));
  EXPECT_EQ(shift_q(x(2, 1) * x(2, 1) + x(2, 2), 1), x(2, 1) * x(2, 1) * RatFunc::q(2) + x(2, 2));
  Monomial inv;
  inv[0] = -1;
  EXPECT_EQ(shift_q(MPoly::monomial(2, inv, RatFunc(1L)), 1), MPoly::monomial(2, inv, RatFunc::q(-1)));
  EXPECT_THROW(shift_q(x(2, 1), 3), std::out_of_range);
}

TEST(Polyring, SwapVars) {
  EXPECT_EQ(swap_vars(x(2, 1) * x(2, 1) * x(2, 2), 1, 2), x(2, 1) * x(2, 2) * x(2, 2));
  const MPoly e2 = x(3, 1) * x(3, 2) + x(3, 1) * x(3, 3) + x(3, 2) * x(3, 3);
  EXPECT_EQ(swap_vars(e2, 1, 3), e2);
}

TEST(Polyring, ExactDiv) {
  const MPoly a = x(2, 1) * x(2, 1) - x(2, 2) * x(2, 2);
  EXPECT_EQ(exact_div(a, x(2, 1) - x(2, 2)), x(2, 1) + x(2, 2));
  EXPECT_EQ(exact_div(a, c(2, 1)), a);
  EXPECT_THROW(exact_div(x(3, 1) - x(3, 2), x(3, 1) - x(3, 3)), NotExact);
}

TEST(Polyring, DividedDifference) {
  EXPECT_EQ(divided_difference(x(2, 1), 1, 2), c(2, 1));
  EXPECT_TRUE(divided_difference(x(2, 1) + x(2, 2), 1, 2).is_zero());
  EXPECT_EQ(divided_difference(x(2, 1) * x(2, 1), 1, 2), x(2, 1) + x(2, 2));
}

TEST(Polyring, IsSymmetric) {
  EXPECT_TRUE(is_symmetric(x(3, 1) * x(3, 2) + x(3, 1) * x(3, 3) + x(3, 2) * x(3, 3)));
  EXPECT_FALSE(is_symmetric(x(2, 1)));
  EXPECT_TRUE(is_symmetric(MPoly(3)));
}

TEST(Polyring, Text) {
  EXPECT_EQ(to_string(x(3, 1) * x(3, 1) * x(3, 2) * RatFunc(RatFunc(1L) - RatFunc::t()) + x(3, 3)),
            "(1-t)*x1^2*x2 + x3");
  EXPECT_EQ(to_string(MPoly(2)), "0");
}

TEST(PolyringProperty, ShiftIsAHomomorphismAndShiftsCommute) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    const MPoly f = random_mpoly(rng, 3, 3), g = random_mpoly(rng, 3, 3);
    EXPECT_EQ(shift_q(f * g, 2), shift_q(f, 2) * shift_q(g, 2));
    EXPECT_EQ(shift_q(shift_q(f, 1), 3), shift_q(shift_q(f, 3), 1));
    EXPECT_EQ(swap_vars(swap_vars(f, 1, 2), 1, 2), f);
  }
}

TEST(PolyringProperty, ExactDivisionRecoversFactor) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    const MPoly f = random_mpoly(rng, 3, 2);
    MPoly g = random_mpoly(rng, 3, 2);
    if (g.is_zero()) continue;
    EXPECT_EQ(exact_div(f * g, g), f);
  }
}

TEST(PolyringProperty, DividedDifferenceIsSymmetricInItsPair) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 25; ++trial) {
    const MPoly f = random_mpoly(rng, 3, 3);
    const MPoly d = divided_difference(f, 1, 3);
    EXPECT_EQ(swap_vars(d, 1, 3), d);
    if (!d.is_zero()) EXPECT_LE(d.max_degree(), f.max_degree() - 1);
  }
}
