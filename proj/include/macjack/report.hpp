// Verification reports and their JSON / text serialization.
#pragma once

#include <chrono>
#include <exception>
#include <string>
#include <vector>

#include <json.hpp>

#include "macjack/macdonald.hpp"
#include "macjack/symmetric.hpp"

namespace macjack {

enum class Status { verified, refuted, skipped };

const char* status_name(Status s);

struct VerificationReport {
  std::string conjecture;  // suite name
  std::string case_key;
  Status status = Status::skipped;
  std::string witness;     // full difference when refuted
  std::string detail;      // reason for a skip, or extra context
  bool proven = false;     // failure here is a bug, not a finding
  double millis = 0.0;
};

inline std::string witness_text(const SymFunc& f) { return f.to_string(); }
inline std::string witness_text(const MPoly& f) { return to_string(f); }
inline std::string witness_text(const RatFunc& c) { return c.to_string(); }

/// Runs body() and classifies: empty difference -> verified, otherwise
/// refuted with the difference as witness. Exceptions become a refutation
/// carrying the message.
template <class Body>
VerificationReport run_case(std::string suite, std::string key, bool proven, Body body) {
  VerificationReport r;
  r.conjecture = std::move(suite);
  r.case_key = std::move(key);
  r.proven = proven;
  const auto start = std::chrono::steady_clock::now();
  try {
    const auto diff = body();
    if (diff.is_zero()) {
      r.status = Status::verified;
    } else {
      r.status = Status::refuted;
      r.witness = witness_text(diff);
    }
  } catch (const std::exception& e) {
    r.status = Status::refuted;
    r.witness = std::string("error: ") + e.what();
  }
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

nlohmann::json to_json(const VerificationReport& r, bool with_timing);
nlohmann::json to_json(const SymFunc& f, BasisKind basis = BasisKind::monomial);
nlohmann::json to_json(const PExpansion& terms, int n_vars, BasisKind basis);
nlohmann::json to_json(const RatFunc& c);
RatFunc ratfunc_from_json(const nlohmann::json& j, Field field);
/// Inverse of to_json(SymFunc) for monomial-basis documents.
SymFunc symfunc_from_json(const nlohmann::json& j);

std::string to_text(const VerificationReport& r, bool with_timing);

struct SuiteSummary {
  int verified = 0;
  int refuted = 0;
  int skipped = 0;
  int proven_failures = 0;
};

SuiteSummary summarize(const std::vector<VerificationReport>& reports);

}  // namespace macjack
