#include <gtest/gtest.h>

#include <stdexcept>

#include "macjack/parallel.hpp"
#include "macjack/report.hpp"

using namespace macjack;

TEST(Report, RunCaseClassifies) {
  const auto ok = run_case("s", "k1", true, [] { return RatFunc(0L); });
  EXPECT_EQ(ok.status, Status::verified);
  EXPECT_TRUE(ok.witness.empty());

  const auto bad = run_case("s", "k2", false, [] { return RatFunc(1L) - RatFunc::t(); });
  EXPECT_EQ(bad.status, Status::refuted);
  EXPECT_EQ(bad.witness, "1-t");
  EXPECT_FALSE(bad.proven);

  const auto thrown = run_case("s", "k3", true, []() -> RatFunc { throw std::runtime_error("boom"); });
  EXPECT_EQ(thrown.status, Status::refuted);
  EXPECT_EQ(thrown.witness, "error: boom");
}

TEST(Report, Summary) {
  std::vector<VerificationReport> rs(4);
  rs[0].status = Status::verified;
  rs[1].status = Status::refuted;
  rs[2].status = Status::refuted;
  rs[2].proven = true;
  rs[3].status = Status::skipped;
  const auto s = summarize(rs);
  EXPECT_EQ(s.verified, 1);
  EXPECT_EQ(s.refuted, 2);
  EXPECT_EQ(s.skipped, 1);
  EXPECT_EQ(s.proven_failures, 1);
}

TEST(Report, JsonSchema) {
  VerificationReport r;
  r.conjecture = "tilde-chain";
  r.case_key = "N=2 lambda=(1)";
  r.status = Status::refuted;
  r.witness = "t*m[1]";
  r.millis = 12.5;
  const auto j = to_json(r, false);
  EXPECT_EQ(j.at("conjecture"), "tilde-chain");
  EXPECT_EQ(j.at("case"), "N=2 lambda=(1)");
  EXPECT_EQ(j.at("status"), "refuted");
  EXPECT_EQ(j.at("witness"), "t*m[1]");
  EXPECT_EQ(j.at("proven"), false);
  EXPECT_FALSE(j.contains("millis"));
  EXPECT_TRUE(to_json(r, true).contains("millis"));

  r.status = Status::verified;
  r.witness.clear();
  EXPECT_FALSE(to_json(r, false).contains("witness"));
}

TEST(Report, Text) {
  VerificationReport r;
  r.conjecture = "eigen";
  r.case_key = "N=1 lambda=(1) r=1";
  r.status = Status::verified;
  const std::string line = to_text(r, false);
  EXPECT_NE(line.find("eigen"), std::string::npos);
  EXPECT_NE(line.find("verified"), std::string::npos);
  EXPECT_EQ(line.find('\n'), std::string::npos);
}

TEST(Parallel, OrderDoesNotDependOnWorkers) {
  auto square = [](std::size_t i) { return static_cast<long>(i * i); };
  const auto serial = parallel_map(100, 1, square);
  const auto pooled = parallel_map(100, 4, square);
  EXPECT_EQ(serial, pooled);
  EXPECT_EQ(pooled[9], 81);
  EXPECT_TRUE(parallel_map(0, 4, square).empty());
}

TEST(Parallel, ExceptionsPropagate) {
  auto f = [](std::size_t i) -> int {
    if (i == 7) throw std::runtime_error("seven");
    return static_cast<int>(i);
  };
  EXPECT_THROW(parallel_map(20, 3, f), std::runtime_error);
}
