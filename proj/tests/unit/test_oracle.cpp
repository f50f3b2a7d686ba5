// The Gram-Schmidt oracle against the library on small degrees, plus a few
// sanity checks of the oracle on its own.
#include <gtest/gtest.h>

#include "gram_schmidt.hpp"
#include "macjack/jack.hpp"
#include "macjack/macdonald.hpp"

using namespace macjack;

namespace {

SymFunc scaled(const oracle::Vec& v, const RatFunc& c, int n_vars, Field field) {
  SymFunc out(n_vars, field);
  for (const auto& [lab, x] : oracle::restrict_to(v, n_vars)) out.add_term(Partition(lab), x * c);
  return out;
}

}  // namespace

TEST(Oracle, PowerSumCounting) {
  EXPECT_EQ(oracle::p_in_m({1, 1}, {2}), 1);
  EXPECT_EQ(oracle::p_in_m({1, 1}, {1, 1}), 2);
  EXPECT_EQ(oracle::p_in_m({2}, {1, 1}), 0);
  EXPECT_EQ(oracle::p_in_m({1, 1, 1}, {1, 1, 1}), 6);
}

TEST(Oracle, OrdersAreLinearExtensions) {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& order : {oracle::order_lex(n), oracle::order_by_n(n)}) {
      ASSERT_EQ(order.size(), oracle::partitions(n).size());
      for (std::size_t i = 0; i < order.size(); ++i) {
        for (std::size_t j = i + 1; j < order.size(); ++j) EXPECT_FALSE(oracle::dominated_by(order[j], order[i]));
      }
    }
  }
  EXPECT_EQ(oracle::order_lex(5), oracle::order_by_n(5));
  EXPECT_NE(oracle::order_lex(6), oracle::order_by_n(6));
}

TEST(Oracle, MatchesLibraryQt) {
  for (int n = 0; n <= 4; ++n) {
    const auto gs = oracle::gram_schmidt(n, oracle::Pairing::qt, oracle::order_by_n(n));
    for (int N = 1; N <= 3; ++N) {
      for (const auto& [lab, v] : gs) {
        if (static_cast<int>(lab.size()) > N) continue;
        EXPECT_EQ(scaled(v, oracle::c_lambda(lab, oracle::Pairing::qt), N, Field::qt), rodrigues(Partition(lab), N))
            << Partition(lab).to_string() << " N=" << N;
      }
    }
  }
}

TEST(Oracle, MatchesLibraryAlpha) {
  for (int n = 0; n <= 5; ++n) {
    const auto gs = oracle::gram_schmidt(n, oracle::Pairing::alpha, oracle::order_lex(n));
    for (int N = 1; N <= 3; ++N) {
      for (const auto& [lab, v] : gs) {
        if (static_cast<int>(lab.size()) > N) continue;
        EXPECT_EQ(scaled(v, oracle::c_lambda(lab, oracle::Pairing::alpha), N, Field::alpha),
                  rodrigues_jack(Partition(lab), N))
            << Partition(lab).to_string() << " N=" << N;
      }
    }
  }
}

TEST(Oracle, OrderDoesNotMatterAlpha) {
  EXPECT_EQ(oracle::gram_schmidt(6, oracle::Pairing::alpha, oracle::order_lex(6)),
            oracle::gram_schmidt(6, oracle::Pairing::alpha, oracle::order_by_n(6)));
}
