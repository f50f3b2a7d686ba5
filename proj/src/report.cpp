#include "macjack/report.hpp"

#include <sstream>
#include <stdexcept>

namespace macjack {

namespace {

nlohmann::json poly_terms(const Poly2& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& tm : p.terms()) arr.push_back({tm.eq, tm.et, tm.c.get_str()});
  return arr;
}

Poly2 poly_from(const nlohmann::json& arr) {
  std::vector<Term2> ts;
  for (const auto& e : arr) ts.push_back({e.at(0).get<int>(), e.at(1).get<int>(), BigInt(e.at(2).get<std::string>())});
  return Poly2::from_terms(std::move(ts));
}

const char* field_tag(Field f) {
  switch (f) {
    case Field::qt: return "qt";
    case Field::alpha: return "alpha";
    case Field::t: return "t";
  }
  return "?";
}

Field field_from(const std::string& s) {
  if (s == "qt") return Field::qt;
  if (s == "alpha") return Field::alpha;
  if (s == "t") return Field::t;
  throw std::invalid_argument("unknown field tag '" + s + "'");
}

}  // namespace

const char* status_name(Status s) {
  switch (s) {
    case Status::verified: return "verified";
    case Status::refuted: return "refuted";
    case Status::skipped: return "skipped";
  }
  return "?";
}

nlohmann::json to_json(const RatFunc& c) {
  nlohmann::json j;
  j["text"] = c.to_string();
  j["num"] = poly_terms(c.num());
  j["den"] = poly_terms(c.den());
  return j;
}

RatFunc ratfunc_from_json(const nlohmann::json& j, Field field) {
  return RatFunc(poly_from(j.at("num")), poly_from(j.at("den")), field);
}

nlohmann::json to_json(const SymFunc& f, BasisKind basis) {
  nlohmann::json j;
  j["basis"] = basis_name(basis);
  j["n_vars"] = f.n_vars();
  j["field"] = field_tag(f.field());
  j["en_power"] = f.en_power();
  nlohmann::json terms = nlohmann::json::array();
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
    terms.push_back({{"partition", it->first.parts()}, {"coefficient", to_json(it->second)}});
  }
  j["terms"] = std::move(terms);
  return j;
}

SymFunc symfunc_from_json(const nlohmann::json& j) {
  if (j.at("basis").get<std::string>() != "m") throw std::invalid_argument("only monomial-basis JSON can be read back");
  const Field field = field_from(j.at("field").get<std::string>());
  SymFunc f(j.at("n_vars").get<int>(), field);
  for (const auto& t : j.at("terms")) {
    f.add_term(Partition(t.at("partition").get<std::vector<int>>()), ratfunc_from_json(t.at("coefficient"), field));
  }
  return f.times_en(j.value("en_power", 0));
}

nlohmann::json to_json(const PExpansion& terms, int n_vars, BasisKind basis) {
  nlohmann::json j;
  j["basis"] = basis_name(basis);
  j["n_vars"] = n_vars;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [mu, c] : terms) arr.push_back({{"partition", mu.parts()}, {"coefficient", to_json(c)}});
  j["terms"] = std::move(arr);
  return j;
}

nlohmann::json to_json(const VerificationReport& r, bool with_timing) {
  nlohmann::json j;
  j["conjecture"] = r.conjecture;
  j["case"] = r.case_key;
  j["status"] = status_name(r.status);
  j["proven"] = r.proven;
  if (!r.witness.empty()) j["witness"] = r.witness;
  if (!r.detail.empty()) j["detail"] = r.detail;
  if (with_timing) j["millis"] = r.millis;
  return j;
}

std::string to_text(const VerificationReport& r, bool with_timing) {
  std::ostringstream os;
  os << r.conjecture << "  " << r.case_key << "  " << status_name(r.status);
  if (r.proven) os << " [proven]";
  if (with_timing) os << "  " << r.millis << "ms";
  if (!r.detail.empty()) os << "  (" << r.detail << ")";
  if (!r.witness.empty()) os << "\n    witness: " << r.witness;
  return os.str();
}

SuiteSummary summarize(const std::vector<VerificationReport>& reports) {
  SuiteSummary s;
  for (const auto& r : reports) {
    switch (r.status) {
      case Status::verified: ++s.verified; break;
      case Status::refuted:
        ++s.refuted;
        if (r.proven) ++s.proven_failures;
        break;
      case Status::skipped: ++s.skipped; break;
    }
  }
  return s;
}

}  // namespace macjack
