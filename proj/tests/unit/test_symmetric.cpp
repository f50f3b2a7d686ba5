#include <gtest/gtest.h>

#include <random>

#include "macjack/conjecture_lab.hpp"
#include "macjack/report.hpp"
#include "macjack/symmetric.hpp"

using namespace macjack;

namespace {

RatFunc one() { return RatFunc(1L); }
SymFunc m(int n, const Partition& lam, long c = 1) { return SymFunc::monomial(n, lam, RatFunc(c)); }
MPoly x(int n, int i) { return MPoly::variable(n, i); }

SymFunc power_sum(int n, const Partition& nu, Field f = Field::qt) {
  SymFunc r = SymFunc::one(n, f);
  for (int p : nu.parts()) r = multiply(r, p_k(n, p, f));
  return r;
}

}  // namespace

TEST(Symmetric, ToX) {
  EXPECT_EQ(to_x(m(2, {1, 1})), x(2, 1) * x(2, 2));
  EXPECT_EQ(to_x(m(2, {2})), x(2, 1) * x(2, 1) + x(2, 2) * x(2, 2));
  EXPECT_EQ(from_x(x(3, 1) + x(3, 2) + x(3, 3)), m(3, {1}));
  EXPECT_THROW(from_x(x(2, 1)), std::invalid_argument);
}

TEST(Symmetric, Elementary) {
  EXPECT_EQ(e_k(2, 1), m(2, {1}));
  EXPECT_EQ(e_k(2, 2), m(2, {1, 1}));
  EXPECT_EQ(e_k(3, 0), SymFunc::one(3));
  EXPECT_TRUE(e_k(2, 3).is_zero());
}

TEST(Symmetric, Multiply) {
  EXPECT_EQ(multiply(e_k(2, 1), e_k(2, 1)), m(2, {2}) + m(2, {1, 1}, 2));
  EXPECT_EQ(multiply(e_k(2, 2), e_k(2, 2)), m(2, {2, 2}));
  const SymFunc f = m(3, {2, 1}, 3) + m(3, {1});
  EXPECT_EQ(multiply(f, SymFunc::one(3)), f);
}

TEST(Symmetric, PowerSumMatrix) {
  const auto one_var = p_basis_matrix(2, 1);
  ASSERT_EQ(one_var.basis.size(), 1u);
  EXPECT_EQ(power_sum(1, {2}), power_sum(1, {1, 1}));
  EXPECT_EQ(power_sum(2, {2}), m(2, {2}));
  EXPECT_EQ(power_sum(2, {1, 1}), m(2, {2}) + m(2, {1, 1}, 2));
  const auto mat = p_basis_matrix(2, 2);
  ASSERT_EQ(mat.basis, (std::vector<Partition>{{2}, {1, 1}}));
  EXPECT_EQ(mat.rows[1], (std::vector<BigRational>{BigRational(1), BigRational(2)}));
}

TEST(Symmetric, ScalarQt) {
  const RatFunc q = RatFunc::q(), t = RatFunc::t();
  EXPECT_EQ(scalar_qt(p_k(2, 1), p_k(2, 1)), (one() - q) / (one() - t));
  EXPECT_TRUE(scalar_qt(p_k(2, 2), power_sum(2, {1, 1})).is_zero());
  EXPECT_EQ(scalar_qt(power_sum(2, {1, 1}), power_sum(2, {1, 1})),
            RatFunc(2L) * ((one() - q) / (one() - t)).pow(2));
  EXPECT_THROW(scalar_qt(m(1, {2}), m(1, {2})), std::domain_error);
}

TEST(Symmetric, ScalarAlpha) {
  const RatFunc a = RatFunc::alpha();
  EXPECT_EQ(scalar_alpha(p_k(2, 1, Field::alpha), p_k(2, 1, Field::alpha)), a);
  EXPECT_EQ(scalar_alpha(p_k(2, 2, Field::alpha), p_k(2, 2, Field::alpha)), RatFunc(2L, Field::alpha) * a);
  EXPECT_TRUE(scalar_alpha(p_k(2, 2, Field::alpha), power_sum(2, {1, 1}, Field::alpha)).is_zero());
}

TEST(Symmetric, Text) {
  const SymFunc f = SymFunc::monomial(2, {1}, one() - RatFunc::t());
  EXPECT_EQ(f.to_string(), "(1-t)*m[1]");
  EXPECT_EQ(SymFunc::one(3).to_string(), "1");
  EXPECT_EQ(SymFunc(3).to_string(), "0");
  EXPECT_EQ((m(3, {1, 1}) + m(3, {2}, 2)).to_string(), "(2)*m[2] + m[1,1]");
  EXPECT_EQ(f.to_latex(), "\\left(1 - t\\right) m_{(1)}");
}

TEST(Symmetric, LaurentPowersOfEN) {
  const SymFunc en = e_k(3, 3);
  EXPECT_EQ(SymFunc::one(3).times_en(1), en);
  EXPECT_EQ(en.times_en(-1), SymFunc::one(3));
  const SymFunc inv = SymFunc::one(3).times_en(-1);
  EXPECT_EQ(inv.en_power(), -1);
  EXPECT_EQ(from_x(to_x(inv)), inv);
  EXPECT_EQ(multiply(inv, en), SymFunc::one(3));
}

TEST(SymmetricProperty, RoundTripThroughX) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const int n = 1 + static_cast<int>(seed % 4);
    const SymFunc f = random_symfunc(n, 4, seed);
    EXPECT_EQ(from_x(to_x(f)), f);
  }
}

TEST(SymmetricProperty, MultiplyMatchesXSpace) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const int n = 1 + static_cast<int>(seed % 3);
    const SymFunc f = random_symfunc(n, 3, seed), g = random_symfunc(n, 3, seed + 100);
    EXPECT_EQ(to_x(multiply(f, g)), to_x(f) * to_x(g));
  }
}

TEST(SymmetricProperty, ScalarProductIsSymmetricAndBilinear) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 3, d = 1 + trial % 3;
    auto pick = [&](std::uint64_t s) {
      SymFunc f = random_symfunc(n, d, s), out(n);
      for (const auto& [lam, c] : f.coeffs()) {
        if (lam.weight() == d) out.add_term(lam, c);
      }
      if (out.is_zero()) out = m(n, partitions_of(d, n).front());
      return out;
    };
    const SymFunc f = pick(rng()), g = pick(rng()), h = pick(rng());
    EXPECT_EQ(scalar_qt(f, g), scalar_qt(g, f));
    EXPECT_EQ(scalar_qt(f + h, g), scalar_qt(f, g) + scalar_qt(h, g));
  }
}

TEST(SymmetricProperty, JsonRoundTrip) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const SymFunc f = random_symfunc(3, 4, seed) / (one() - RatFunc::q() * RatFunc::t(2));
    EXPECT_EQ(symfunc_from_json(nlohmann::json::parse(to_json(f).dump())), f);
  }
  const SymFunc laurent = random_symfunc(2, 2, 5).times_en(-2);
  EXPECT_EQ(symfunc_from_json(to_json(laurent)), laurent);
}
