#include <gtest/gtest.h>

#include "macjack/jack.hpp"

using namespace macjack;

namespace {

RatFunc a() { return RatFunc::alpha(); }
RatFunc num(long v) { return RatFunc(v, Field::alpha); }
MPoly x(int n, int i) { return MPoly::variable(n, i, Field::alpha); }
SymFunc m(int n, const Partition& lam, const RatFunc& c) { return SymFunc::monomial(n, lam, c); }

}  // namespace

TEST(Jack, Dunkl) {
  EXPECT_TRUE(dunkl(MPoly::constant(3, num(1)), 2).is_zero());
  EXPECT_EQ(dunkl(x(3, 1), 1), x(3, 1) * (a() + num(2)));
  EXPECT_EQ(dunkl(x(2, 2), 1), -x(2, 1));
  EXPECT_EQ(dunkl(x(1, 1), 1), x(1, 1) * a());
}

TEST(Jack, DunklProduct) {
  const MPoly f = x(2, 1) * x(2, 2) + x(2, 1);
  EXPECT_EQ(d_product(f, {{}, num(3)}), f);
  EXPECT_EQ(d_product(MPoly::constant(2, num(1)), {{1}, num(5)}), MPoly::constant(2, num(5)));
  const RatFunc w(BigRational(1, 2), Field::alpha);
  EXPECT_EQ(d_product(MPoly::constant(2, num(1)), {{1, 2}, w}), MPoly::constant(2, w * (w + num(1))));
}

TEST(Jack, DunklProductEigenOnSubset) {
  // J_lambda in x_1, x_2 only, acted on inside three variables.
  for (const Partition& lam : {Partition{1}, Partition{2}, Partition{1, 1}, Partition{2, 1}}) {
    const SymFunc j = rodrigues_jack(lam, 2);
    const MPoly j2 = to_x(j);
    const MPoly jx = MPoly::from_terms(3, Field::alpha, j2.terms());
    for (long w = 0; w <= 2; ++w) {
      RatFunc ev = num(1);
      for (int i = 1; i <= 2; ++i) ev *= a() * num(lam.part(i)) + num(w) + num(2 - i);
      EXPECT_EQ(d_product(jx, {{1, 2}, num(w)}, 0b011), jx * ev) << lam.to_string() << " w=" << w;
    }
  }
}

TEST(Jack, SmallJ) {
  EXPECT_EQ(rodrigues_jack(Partition{}, 2), SymFunc::one(2, Field::alpha));
  EXPECT_EQ(rodrigues_jack(Partition{1}, 2), m(2, {1}, num(1)));
  EXPECT_EQ(rodrigues_jack(Partition{1, 1}, 2), m(2, {1, 1}, num(2)));
  EXPECT_EQ(rodrigues_jack(Partition{2}, 2), m(2, {2}, a() + num(1)) + m(2, {1, 1}, num(2)));
  EXPECT_EQ(tilde_b_plus_alpha(SymFunc::one(1, Field::alpha), 1), m(1, {1}, num(1)));
  EXPECT_THROW(rodrigues_jack(Partition{1, 1, 1}, 2), std::invalid_argument);
}

TEST(Jack, TwoChainsAgree) {
  EXPECT_EQ(b_plus_alpha(SymFunc::one(2, Field::alpha), 1), rodrigues_jack(Partition{1}, 2));
  for (int d = 1; d <= 3; ++d) {
    for (const auto& lam : partitions_of(d, 3)) {
      EXPECT_EQ(rodrigues_jack_b(lam, 3), rodrigues_jack(lam, 3)) << lam.to_string();
      const SymFunc j = rodrigues_jack(lam, 3);
      EXPECT_EQ(j.coefficient(lam), c_lambda_alpha(lam));
      for (const auto& [mu, c] : j.coeffs()) EXPECT_TRUE(dominance_leq(mu, lam));
    }
  }
}

TEST(Jack, Pieri) {
  EXPECT_EQ(pieri_alpha(Partition{}, 1, 2), (PExpansion{{Partition{1}, num(1)}}));
  for (const auto& [mu, c] : pieri_alpha(Partition{3, 2, 1}, 2, 4)) {
    EXPECT_EQ(c, psi(mu, Partition{3, 2, 1}, Field::alpha));
  }
  const SymFunc prod = multiply(e_k(3, 2, Field::alpha), jack_P(Partition{2, 1}, 3));
  LaurentPExpansion lp;
  for (const auto& [mu, c] : pieri_alpha(Partition{2, 1}, 2, 3)) {
    lp.emplace_back(ExtendedPartition(mu, BigRational(0), 3), c);
  }
  EXPECT_EQ(from_jack_P_basis(lp, 3), prod);
}

TEST(Jack, FamilyAtKappaEqualsM) {
  const SymFunc f = rodrigues_jack(Partition{2, 1}, 3);
  EXPECT_EQ(jack_f_realized(f, 1, BigRational(1)), tilde_b_plus_alpha(f, 1));
  EXPECT_EQ(jack_f_realized(f, 2, BigRational(2)), tilde_b_plus_alpha(f, 2));
  const ExtendedPartition beta(Partition{1}, BigRational(1, 3), 2);
  const auto id = f_alpha_action(beta, 0, BigRational(5, 2));
  ASSERT_EQ(id.size(), 1u);
  EXPECT_EQ(id[0].first, beta);
  EXPECT_TRUE(id[0].second.is_one());
}

TEST(Jack, Bridge) {
  EXPECT_TRUE(limit_bridge(Partition{1}, 1, 1));
  EXPECT_TRUE(limit_bridge(Partition{2}, 2, 1));
  EXPECT_TRUE(limit_bridge(Partition{1, 1}, 2, 2));
  EXPECT_TRUE(limit_bridge(Partition{2, 1}, 3, 3));
  EXPECT_EQ(limit_bridge_report(Partition{2}, 2, 2).status, Status::verified);
}

TEST(Jack, SmallSweeps) {
  SweepBounds b;
  b.n_max = 2;
  b.deg_max = 3;
  b.kappa_max = 1;
  for (const auto& s : jack_sweep_names()) {
    SCOPED_TRACE(s);
    const auto reports = jack_sweep(s, b, {1, 2});
    ASSERT_FALSE(reports.empty());
    for (const auto& r : reports) EXPECT_EQ(r.status, Status::verified) << r.case_key << " " << r.witness;
  }
}
