#include "macjack/polyring.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace macjack {

namespace {

struct LexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return b < a; }
};

void check_index(const MPoly& f, int i) {
  if (i < 1 || i > f.n_vars()) {
    throw std::out_of_range("variable index " + std::to_string(i) + " outside 1.." +
                            std::to_string(f.n_vars()));
  }
}

}  // namespace

int Monomial::degree() const {
  int d = 0;
  for (auto x : e) d += x;
  return d;
}

Monomial Monomial::operator+(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::int16_t>(e[i] + o.e[i]);
  return r;
}

Monomial Monomial::operator-(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::int16_t>(e[i] - o.e[i]);
  return r;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto x : m.e) {
    h ^= static_cast<std::size_t>(static_cast<std::uint16_t>(x));
    h *= 1099511628211ull;
  }
  return h;
}

MPoly::MPoly(int n_vars, Field field) : n_(n_vars), field_(field) {
  if (n_vars < 0 || n_vars > kMaxVars) {
    throw std::invalid_argument("number of variables must be in 0.." + std::to_string(kMaxVars));
  }
}

MPoly MPoly::constant(int n_vars, const RatFunc& c) {
  MPoly p(n_vars, c.field());
  if (!c.is_zero()) p.terms_.emplace_back(Monomial{}, c);
  return p;
}

MPoly MPoly::variable(int n_vars, int i, Field field) {
  MPoly p(n_vars, field);
  check_index(p, i);
  Monomial m;
  m[i - 1] = 1;
  p.terms_.emplace_back(m, RatFunc::one(field));
  return p;
}

MPoly MPoly::monomial(int n_vars, const Monomial& m, const RatFunc& c) {
  MPoly p(n_vars, c.field());
  if (!c.is_zero()) p.terms_.emplace_back(m, c);
  return p;
}

MPoly MPoly::from_terms(int n_vars, Field field, std::vector<Term> terms) {
  MPoly p(n_vars, field);
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return b.first < a.first; });
  for (auto& tm : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == tm.first) {
      p.terms_.back().second += tm.second;
    } else {
      if (!p.terms_.empty() && p.terms_.back().second.is_zero()) p.terms_.pop_back();
      p.terms_.push_back(std::move(tm));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().second.is_zero()) p.terms_.pop_back();
  return p;
}

RatFunc MPoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& tm, const Monomial& key) { return key < tm.first; });
  if (it != terms_.end() && it->first == m) return it->second;
  return RatFunc::zero(field_);
}

int MPoly::max_degree() const {
  int d = 0;
  bool first = true;
  for (const auto& tm : terms_) {
    const int k = tm.first.degree();
    if (first || k > d) d = k;
    first = false;
  }
  return d;
}

int MPoly::min_degree() const {
  int d = 0;
  bool first = true;
  for (const auto& tm : terms_) {
    const int k = tm.first.degree();
    if (first || k < d) d = k;
    first = false;
  }
  return d;
}

void MPoly::check_compatible(const MPoly& o) const {
  if (n_ != o.n_) throw std::invalid_argument("polynomials live in different numbers of variables");
  if (field_ != o.field_) throw FieldMismatch("polynomials have different coefficient fields");
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& tm : r.terms_) tm.second = -tm.second;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  check_compatible(o);
  if (o.terms_.empty()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && o.terms_[j].first < terms_[i].first)) {
      out.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || terms_[i].first < o.terms_[j].first) {
      out.push_back(o.terms_[j++]);
    } else {
      RatFunc s = terms_[i].second + o.terms_[j].second;
      if (!s.is_zero()) out.emplace_back(terms_[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) { return *this += -o; }

MPoly& MPoly::operator*=(const RatFunc& c) {
  if (c.field() != field_) throw FieldMismatch("scalar from a different field");
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  if (c.is_one()) return *this;
  for (auto& tm : terms_) tm.second *= c;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  a.check_compatible(b);
  if (a.is_zero() || b.is_zero()) return MPoly(a.n_, a.field_);
  std::unordered_map<Monomial, RatFunc, MonomialHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      Monomial m = x.first + y.first;
      auto [it, inserted] = acc.try_emplace(m, x.second);
      if (inserted) {
        it->second *= y.second;
      } else {
        it->second += x.second * y.second;
      }
    }
  }
  std::vector<MPoly::Term> ts;
  ts.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) ts.emplace_back(m, std::move(c));
  }
  std::sort(ts.begin(), ts.end(),
            [](const MPoly::Term& u, const MPoly::Term& v) { return v.first < u.first; });
  MPoly r(a.n_, a.field_);
  r.terms_ = std::move(ts);
  return r;
}

bool operator==(const MPoly& a, const MPoly& b) {
  return a.n_ == b.n_ && a.field_ == b.field_ && a.terms_ == b.terms_;
}

MPoly MPoly::times_monomial(const Monomial& m) const {
  MPoly r = *this;
  for (auto& tm : r.terms_) tm.first = tm.first + m;
  return r;
}

MPoly shift_q(const MPoly& f, int i) {
  check_index(f, i);
  return shift_q_mask(f, 1u << (i - 1));
}

MPoly shift_q_mask(const MPoly& f, std::uint32_t mask, int power) {
  if (mask == 0 || f.is_zero()) return f;
  if (f.field() != Field::qt) throw FieldMismatch("q-shifts act on polynomials over Q(q,t)");
  std::vector<MPoly::Term> ts;
  ts.reserve(f.size());
  for (const auto& [m, c] : f.terms()) {
    int e = 0;
    for (int k = 0; k < f.n_vars(); ++k) {
      if (mask & (1u << k)) e += m[k];
    }
    ts.emplace_back(m, e == 0 ? c : c * RatFunc::q(e * power));
  }
  return MPoly::from_terms(f.n_vars(), f.field(), std::move(ts));
}

MPoly swap_vars(const MPoly& f, int i, int j) {
  check_index(f, i);
  check_index(f, j);
  if (i == j) return f;
  std::vector<MPoly::Term> ts;
  ts.reserve(f.size());
  for (const auto& [m, c] : f.terms()) {
    Monomial s = m;
    std::swap(s[i - 1], s[j - 1]);
    ts.emplace_back(s, c);
  }
  return MPoly::from_terms(f.n_vars(), f.field(), std::move(ts));
}

MPoly exact_div(const MPoly& f, const MPoly& g) {
  if (g.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (f.n_vars() != g.n_vars()) throw std::invalid_argument("exact_div: variable count mismatch");
  const int n = f.n_vars();
  if (f.is_zero()) return MPoly(n, f.field());
  // Strip the monomial content of g and move f into the polynomial ring;
  // the quotient then has nonnegative exponents after the same shift.
  Monomial gmin = g.terms().front().first;
  Monomial fmin = f.terms().front().first;
  for (const auto& [m, c] : g.terms()) {
    for (int k = 0; k < n; ++k) gmin[k] = std::min(gmin[k], m[k]);
  }
  for (const auto& [m, c] : f.terms()) {
    for (int k = 0; k < n; ++k) fmin[k] = std::min(fmin[k], m[k]);
  }
  const MPoly gs = g.times_monomial(Monomial{} - gmin);
  const Monomial& lead = gs.terms().front().first;
  const RatFunc& lc = gs.terms().front().second;
  const bool unit_lc = lc.is_one();
  const bool neg_unit_lc = (-lc).is_one();

  std::map<Monomial, RatFunc, LexGreater> rem;
  for (const auto& [m, c] : f.terms()) rem.emplace(m - fmin, c);
  std::vector<MPoly::Term> quotient;
  while (!rem.empty()) {
    auto top = rem.begin();
    Monomial d = top->first - lead;
    for (int k = 0; k < n; ++k) {
      if (d[k] < 0) throw NotExact("exact_div: nonzero remainder");
    }
    RatFunc qc = unit_lc ? top->second : (neg_unit_lc ? -top->second : top->second / lc);
    for (const auto& [m, c] : gs.terms()) {
      Monomial target = m + d;
      auto [it, inserted] = rem.try_emplace(target, RatFunc::zero(f.field()));
      it->second -= qc * c;
      if (it->second.is_zero()) rem.erase(it);
    }
    quotient.emplace_back(d, std::move(qc));
  }
  return MPoly::from_terms(n, f.field(), std::move(quotient)).times_monomial(fmin - gmin);
}

MPoly divided_difference(const MPoly& f, int i, int j) {
  check_index(f, i);
  check_index(f, j);
  if (i == j) throw std::invalid_argument("divided_difference needs distinct indices");
  MPoly num = f - swap_vars(f, i, j);
  if (num.is_zero()) return num;
  MPoly den = MPoly::variable(f.n_vars(), i, f.field()) - MPoly::variable(f.n_vars(), j, f.field());
  try {
    return exact_div(num, den);
  } catch (const NotExact&) {
    throw std::logic_error("divided_difference: antisymmetric part not divisible by x_i - x_j");
  }
}

bool is_symmetric(const MPoly& f) {
  for (int i = 1; i < f.n_vars(); ++i) {
    for (const auto& [m, c] : f.terms()) {
      if (m[i - 1] == m[i]) continue;
      Monomial s = m;
      std::swap(s[i - 1], s[i]);
      if (f.coefficient(s) != c) return false;
    }
  }
  return true;
}

MPoly vandermonde(int n_vars, Field field) {
  MPoly v = MPoly::constant(n_vars, RatFunc::one(field));
  for (int i = 1; i <= n_vars; ++i) {
    for (int j = i + 1; j <= n_vars; ++j) {
      v = v * (MPoly::variable(n_vars, i, field) - MPoly::variable(n_vars, j, field));
    }
  }
  return v;
}

std::string to_string(const MPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : f.terms()) {
    std::string mono;
    for (int i = 0; i < f.n_vars(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += "x" + std::to_string(i + 1);
      if (m[i] != 1) mono += "^" + std::to_string(m[i]);
    }
    std::string term;
    if (mono.empty()) {
      term = c.to_string();
    } else if (c.is_one()) {
      term = mono;
    } else if ((-c).is_one()) {
      term = "-" + mono;
    } else {
      term = "(" + c.to_string() + ")*" + mono;
    }
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out;
}

MPoly euler(const MPoly& f, int i) {
  check_index(f, i);
  std::vector<MPoly::Term> ts;
  for (const auto& [m, c] : f.terms()) {
    if (m[i - 1] != 0) ts.emplace_back(m, c * RatFunc(static_cast<long>(m[i - 1]), f.field()));
  }
  return MPoly::from_terms(f.n_vars(), f.field(), std::move(ts));
}

}  // namespace macjack
