#include <gtest/gtest.h>

#include "macjack/macdonald.hpp"

using namespace macjack;

namespace {

RatFunc q(int e = 1) { return RatFunc::q(e); }
RatFunc t(int e = 1) { return RatFunc::t(e); }
RatFunc one() { return RatFunc(1L); }
SymFunc m(int n, const Partition& lam, const RatFunc& c) { return SymFunc::monomial(n, lam, c); }

// Total degree range of a (possibly Laurent) symmetric function.
std::pair<int, int> degree_range(const SymFunc& f) {
  const MPoly x = to_x(f);
  return {x.min_degree(), x.max_degree()};
}

}  // namespace

TEST(Macdonald, MrOnConstant) {
  const SymFunc c = SymFunc::one(3);
  EXPECT_EQ(apply_M_r(c, 0), c);
  EXPECT_EQ(apply_M_r(c, 1), c * (one() + t() + t(2)));
  EXPECT_EQ(apply_M_r(c, 2), c * (t() + t(2) + t(3)));
  EXPECT_EQ(apply_M_r(c, 3), c * t(3));
  EXPECT_THROW(apply_M_r(c, 4), std::out_of_range);
}

TEST(Macdonald, MXOnFirstJ) {
  const SymFunc j1 = rodrigues(Partition{1}, 2);
  for (const RatFunc& X : {RatFunc(3L), q(2) * t(), one() - q()}) {
    EXPECT_EQ(apply_M_X(j1, X), j1 * ((one() + X * q() * t()) * (one() + X)));
  }
  EXPECT_EQ(apply_M_X(j1, RatFunc(0L)), j1);
}

TEST(Macdonald, MXVanishesAtTheCreationPoint) {
  // N = 3, k = 1: X = -t^{-1}/q kills P_mu whenever mu_2 = 1.
  const RatFunc X = -(t(-1) * q(-1));
  for (const Partition& mu : {Partition{1, 1}, Partition{2, 1}, Partition{1, 1, 1}, Partition{3, 1}}) {
    EXPECT_TRUE(apply_M_X(macdonald_P(mu, 3), X).is_zero()) << mu.to_string();
  }
  EXPECT_FALSE(apply_M_X(macdonald_P(Partition{2}, 3), X).is_zero());
}

TEST(Macdonald, CreationOnConstant) {
  EXPECT_EQ(b_plus(SymFunc::one(1), 1), m(1, {1}, one() - t()));
  const SymFunc j11 = b_plus(SymFunc::one(2), 2);
  EXPECT_EQ(j11, rodrigues(Partition{1, 1}, 2));
  EXPECT_EQ(j11.coefficient(Partition{1, 1}), (one() - t(2)) * (one() - t()));
  EXPECT_THROW(b_plus(SymFunc::one(2), 3), std::out_of_range);
}

TEST(Macdonald, SmallJ) {
  EXPECT_EQ(rodrigues(Partition{}, 3), SymFunc::one(3));
  for (int n = 1; n <= 3; ++n) EXPECT_EQ(rodrigues(Partition{1}, n), m(n, {1}, one() - t()));
  const SymFunc expect =
      m(2, {2}, (one() - q() * t()) * (one() - t())) + m(2, {1, 1}, (one() + q()) * (one() - t()).pow(2));
  EXPECT_EQ(rodrigues(Partition{2}, 2), expect);
  EXPECT_THROW(rodrigues(Partition{1, 1, 1}, 2), std::invalid_argument);
}

TEST(Macdonald, FullColumnMatchesEN) {
  // Adding a column of height N is multiplication by e_N up to c-ratio.
  const int n = 2;
  for (int d = 0; d <= 3; ++d) {
    for (const auto& lam : partitions_of(d, n)) {
      const Partition up = lam.plus_column(n);
      EXPECT_EQ(b_plus(rodrigues(lam, n), n), rodrigues(up, n));
      EXPECT_EQ(multiply(e_k(n, n), rodrigues(lam, n)) * (c_lambda_qt(up) / c_lambda_qt(lam)), rodrigues(up, n));
    }
  }
}

TEST(Macdonald, TriangularWithLeadingC) {
  for (int d = 1; d <= 4; ++d) {
    for (const auto& lam : partitions_of(d, 3)) {
      const SymFunc j = rodrigues(lam, 3);
      EXPECT_EQ(j.coefficient(lam), c_lambda_qt(lam));
      for (const auto& [mu, c] : j.coeffs()) EXPECT_TRUE(dominance_leq(mu, lam)) << mu.to_string();
      EXPECT_EQ(to_P_basis(j), (PExpansion{{lam, c_lambda_qt(lam)}}));
    }
  }
}

TEST(Macdonald, Eigen) {
  for (int d = 0; d <= 3; ++d) {
    for (const auto& lam : partitions_of(d, 3)) {
      const SymFunc j = rodrigues(lam, 3);
      for (int r = 0; r <= 3; ++r) EXPECT_EQ(apply_M_r(j, r), j * eigenvalue_M_r(lam, 3, r));
    }
  }
}

TEST(Macdonald, Pieri) {
  EXPECT_EQ(pieri_expand(Partition{}, 1, 3), (PExpansion{{Partition{1}, one()}}));
  const PExpansion e2 = pieri_expand(Partition{2, 2}, 2, 4);
  std::vector<Partition> targets;
  for (const auto& [mu, c] : e2) targets.push_back(mu);
  std::sort(targets.begin(), targets.end());
  std::vector<Partition> expect{{3, 3}, {3, 2, 1}, {2, 2, 1, 1}};
  std::sort(expect.begin(), expect.end());
  EXPECT_EQ(targets, expect);
  for (const auto& [mu, c] : e2) EXPECT_EQ(c, psi(mu, Partition{2, 2}, Field::qt));
  // direct product, re-expanded
  const SymFunc prod = multiply(e_k(3, 2), macdonald_P(Partition{2, 1}, 3));
  LaurentPExpansion lp;
  for (const auto& [mu, c] : pieri_expand(Partition{2, 1}, 2, 3)) {
    lp.emplace_back(ExtendedPartition(mu, BigRational(0), 3), c);
  }
  EXPECT_EQ(from_P_basis(lp, 3), prod);
}

TEST(Macdonald, Norms) {
  EXPECT_TRUE(norm_ratio(Partition{}, 3).is_one());
  EXPECT_TRUE(norm_closed_form_ratio(Partition{}, 3).is_one());
  EXPECT_EQ(norm_ratio(Partition{1}, 1), norm_closed_form_ratio(Partition{1}, 1));
  EXPECT_EQ(norm_ratio(Partition{1, 1}, 2), norm_closed_form_ratio(Partition{1, 1}, 2));
  EXPECT_FALSE(norm_ratio(Partition{1, 1}, 2).is_zero());
  for (int d = 1; d <= 3; ++d) {
    for (const auto& lam : partitions_of(d, 2)) {
      EXPECT_EQ(norm_ratio(lam, 2), norm_closed_form_ratio(lam, 2)) << lam.to_string();
      EXPECT_EQ(norm_ratio_adjoint(lam, 2), norm_ratio(lam, 2)) << lam.to_string();
    }
  }
  EXPECT_EQ(norm_record(Partition{2, 1}, 3).ratio_to_empty, norm_closed_form_ratio(Partition{2, 1}, 3));
}

TEST(Macdonald, AnnihilationLowersDegree) {
  const SymFunc j = rodrigues(Partition{2, 2}, 2);
  for (int k = 1; k <= 2; ++k) {
    const SymFunc out = b_minus(j, k);
    ASSERT_FALSE(out.is_zero());
    EXPECT_EQ(degree_range(out), std::make_pair(4 - k, 4 - k));
  }
  // lambda_{k+1} = 1 is sent to zero
  EXPECT_TRUE(b_minus(rodrigues(Partition{2, 1}, 2), 1).is_zero());
  // full column removed: proportional to 1
  const SymFunc col = b_minus(rodrigues(Partition{1, 1}, 2), 2);
  ASSERT_EQ(col.coeffs().size(), 1u);
  EXPECT_TRUE(col.coeffs().begin()->first.empty());
  EXPECT_EQ(col.en_power(), 0);
}
