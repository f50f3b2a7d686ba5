#include "macjack/coefficients.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>
#include <utility>

namespace macjack {

namespace {

// Degree-lexicographic "greater than" on exponent pairs.
inline bool deglex_greater(int aq, int at, int bq, int bt) {
  const int da = aq + at;
  const int db = bq + bt;
  if (da != db) return da > db;
  return aq > bq;
}

inline bool term_greater(const Term2& a, const Term2& b) {
  return deglex_greater(a.eq, a.et, b.eq, b.et);
}

// ---------------------------------------------------------------------------
// Dense univariate and bivariate helpers used by the gcd.

using UPoly = std::vector<BigInt>;  // index = degree
using BPoly = std::vector<UPoly>;   // index = degree in the first variable

void u_trim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

BigInt u_content(const UPoly& a) {
  BigInt g = 0;
  for (const auto& c : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

UPoly u_mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  u_trim(r);
  return r;
}

UPoly u_sub(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  u_trim(r);
  return r;
}

void u_divexact_scalar(UPoly& a, const BigInt& c) {
  for (auto& x : a) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
}

// Primitive part with positive leading coefficient.
UPoly u_pp(UPoly a) {
  if (a.empty()) return a;
  BigInt c = u_content(a);
  if (a.back() < 0) c = -c;
  u_divexact_scalar(a, c);
  return a;
}

UPoly u_prem(UPoly a, const UPoly& b) {
  const std::size_t db = b.size() - 1;
  const BigInt& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    BigInt la = a.back();
    for (auto& x : a) x *= lb;
    for (std::size_t j = 0; j < b.size(); ++j) a[j + shift] -= la * b[j];
    u_trim(a);
  }
  return a;
}

// Exact quotient a/b over Z[x]; returns false when not exact.
bool u_divexact(const UPoly& a, const UPoly& b, UPoly& out) {
  if (a.empty()) {
    out.clear();
    return true;
  }
  if (a.size() < b.size()) return false;
  UPoly r = a;
  out.assign(a.size() - b.size() + 1, BigInt(0));
  const BigInt& lb = b.back();
  for (std::size_t k = out.size(); k-- > 0;) {
    const BigInt& top = r[k + b.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return false;
    BigInt qk;
    mpz_divexact(qk.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    for (std::size_t j = 0; j < b.size(); ++j) r[k + j] -= qk * b[j];
    out[k] = qk;
  }
  for (const auto& x : r) {
    if (x != 0) return false;
  }
  u_trim(out);
  return true;
}

// Heuristic gcd: evaluate at a large integer, take the integer gcd and read
// the digits back (symmetric residues). Accepted only if it divides both
// inputs; with xi above twice the smaller max-norm that makes it the gcd.
BigInt smod(const BigInt& h, const BigInt& xi) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), h.get_mpz_t(), xi.get_mpz_t());
  if (2 * r > xi) r -= xi;
  return r;
}

BigInt next_xi(const BigInt& xi) {
  BigInt s;
  mpz_sqrt(s.get_mpz_t(), xi.get_mpz_t());
  mpz_sqrt(s.get_mpz_t(), s.get_mpz_t());
  return xi * 73794 * (s + 1) / 27011;
}

BigInt u_norm(const UPoly& a) {
  BigInt m = 0;
  for (const auto& x : a) {
    if (abs(x) > m) m = abs(x);
  }
  return m;
}

std::optional<UPoly> u_heu(const UPoly& a, const UPoly& b) {
  const BigInt c = gcd(u_content(a), u_content(b));
  const UPoly f = u_pp(a);
  const UPoly g = u_pp(b);
  if (f.size() == 1 || g.size() == 1) return UPoly{c};
  BigInt xi = 2 * std::min(u_norm(f), u_norm(g)) + 2;
  for (int attempt = 0; attempt < 6; ++attempt, xi = next_xi(xi)) {
    BigInt fv = 0, gv = 0;
    for (std::size_t i = f.size(); i-- > 0;) fv = fv * xi + f[i];
    for (std::size_t i = g.size(); i-- > 0;) gv = gv * xi + g[i];
    if (fv == 0 || gv == 0) continue;
    BigInt h = gcd(fv, gv);
    UPoly H;
    while (h != 0) {
      BigInt d = smod(h, xi);
      H.push_back(d);
      h -= d;
      mpz_divexact(h.get_mpz_t(), h.get_mpz_t(), xi.get_mpz_t());
    }
    H = u_pp(std::move(H));
    UPoly qf, qg;
    if (H.empty() || !u_divexact(f, H, qf) || !u_divexact(g, H, qg)) continue;
    for (auto& x : H) x *= c;
    return H;
  }
  return std::nullopt;
}

UPoly u_gcd(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) {
    UPoly r = a.empty() ? b : a;
    if (!r.empty() && r.back() < 0) {
      for (auto& x : r) x = -x;
    }
    return r;
  }
  if (auto h = u_heu(a, b)) return *h;
  BigInt c = gcd(u_content(a), u_content(b));
  UPoly A = u_pp(a);
  UPoly B = u_pp(b);
  if (A.size() < B.size()) std::swap(A, B);
  while (!B.empty()) {
    if (B.size() == 1) {
      A = UPoly{BigInt(1)};
      break;
    }
    UPoly R = u_prem(A, B);
    A = std::move(B);
    B = u_pp(std::move(R));
  }
  for (auto& x : A) x *= c;
  return A;
}

UPoly b_content(const BPoly& a) {
  UPoly g;
  for (const auto& c : a) {
    if (c.empty()) continue;
    if (g.empty()) {
      g = c;
      if (g.back() < 0) {
        for (auto& x : g) x = -x;
      }
    } else {
      g = u_gcd(g, c);
    }
    if (g.size() == 1 && g[0] == 1) break;
  }
  return g;
}

void b_trim(BPoly& a) {
  while (!a.empty() && a.back().empty()) a.pop_back();
}

// Primitive part over Z[y] with positive leading coefficient.
BPoly b_pp(BPoly a) {
  b_trim(a);
  if (a.empty()) return a;
  UPoly c = b_content(a);
  if (a.back().back() < 0) {
    for (auto& x : c) x = -x;
  }
  for (auto& coef : a) {
    UPoly qv;
    u_divexact(coef, c, qv);
    coef = std::move(qv);
  }
  return a;
}

BPoly b_prem(BPoly a, const BPoly& b) {
  const std::size_t db = b.size() - 1;
  const UPoly& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    UPoly la = a.back();
    for (auto& x : a) x = u_mul(x, lb);
    for (std::size_t j = 0; j < b.size(); ++j) {
      a[j + shift] = u_sub(a[j + shift], u_mul(la, b[j]));
    }
    b_trim(a);
  }
  return a;
}

BPoly to_dense(const Poly2& p) {
  BPoly d;
  for (const auto& tm : p.terms()) {
    if (tm.eq < 0 || tm.et < 0) throw std::invalid_argument("gcd requires nonnegative exponents");
    if (d.size() <= static_cast<std::size_t>(tm.eq)) d.resize(tm.eq + 1);
    auto& row = d[tm.eq];
    if (row.size() <= static_cast<std::size_t>(tm.et)) row.resize(tm.et + 1, BigInt(0));
    row[tm.et] = tm.c;
  }
  return d;
}

Poly2 from_dense(const BPoly& d) {
  std::vector<Term2> ts;
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = 0; j < d[i].size(); ++j) {
      if (d[i][j] != 0) ts.push_back({static_cast<int>(i), static_cast<int>(j), d[i][j]});
    }
  }
  return Poly2::from_terms(std::move(ts));
}

Poly2 scalar_div(const Poly2& p, const BigInt& c) {
  std::vector<Term2> ts = p.terms();
  for (auto& tm : ts) mpz_divexact(tm.c.get_mpz_t(), tm.c.get_mpz_t(), c.get_mpz_t());
  return Poly2::from_terms(std::move(ts));
}

BigInt norm2(const Poly2& p) {
  BigInt m = 0;
  for (const auto& tm : p.terms()) {
    if (abs(tm.c) > m) m = abs(tm.c);
  }
  return m;
}

// Bivariate heuristic gcd: q -> xi, univariate gcd in t, digits back in q.
std::optional<Poly2> heu_gcd2(const Poly2& a, const Poly2& b) {
  const BigInt ca = a.content(), cb = b.content();
  const BigInt c = gcd(ca, cb);
  const Poly2 f = scalar_div(a, ca);
  const Poly2 g = scalar_div(b, cb);
  BigInt xi = 2 * std::min(norm2(f), norm2(g)) + 2;
  auto eval_q = [](const Poly2& p, const BigInt& x) {
    UPoly r;
    for (const auto& tm : p.terms()) {
      if (r.size() <= static_cast<std::size_t>(tm.et)) r.resize(tm.et + 1, BigInt(0));
      BigInt pw;
      mpz_pow_ui(pw.get_mpz_t(), x.get_mpz_t(), tm.eq);
      r[tm.et] += tm.c * pw;
    }
    u_trim(r);
    return r;
  };
  for (int attempt = 0; attempt < 6; ++attempt, xi = next_xi(xi)) {
    const UPoly F = eval_q(f, xi);
    const UPoly G = eval_q(g, xi);
    if (F.empty() || G.empty()) continue;
    UPoly h = u_gcd(F, G);
    std::vector<Term2> ts;
    for (int i = 0; !h.empty(); ++i) {
      for (std::size_t j = 0; j < h.size(); ++j) {
        BigInt d = smod(h[j], xi);
        if (d != 0) {
          h[j] -= d;
          ts.push_back({i, static_cast<int>(j), d});
        }
        mpz_divexact(h[j].get_mpz_t(), h[j].get_mpz_t(), xi.get_mpz_t());
      }
      u_trim(h);
    }
    Poly2 H = Poly2::from_terms(std::move(ts));
    if (H.is_zero()) continue;
    H = scalar_div(H, H.content());
    Poly2 qf, qg;
    // try_exact_div allows Laurent quotients; a divisor here must leave polynomials.
    auto divides = [&H](const Poly2& p, Poly2& quo) {
      return Poly2::try_exact_div(p, H, quo) && quo.min_eq() >= 0 && quo.min_et() >= 0;
    };
    if (!divides(f, qf) || !divides(g, qg)) continue;
    return H * c;
  }
  return std::nullopt;
}

void append_power(std::ostringstream& os, const char* var, int e, bool latex) {
  os << var;
  if (e != 1) {
    if (latex) {
      os << "^{" << e << "}";
    } else {
      os << "^" << e;
    }
  }
}

std::string format_poly(const Poly2& p, const char* x, const char* y, bool latex) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& ts = p.terms();
  for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
    const Term2& tm = *it;
    BigInt mag = abs(tm.c);
    const bool neg = tm.c < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? (latex ? " - " : "-") : (latex ? " + " : "+"));
    }
    first = false;
    const bool has_var = tm.eq != 0 || tm.et != 0;
    bool need_sep = false;
    if (!has_var || mag != 1) {
      os << mag.get_str();
      need_sep = true;
    }
    if (tm.eq != 0) {
      if (need_sep && !latex) os << "*";
      if (need_sep && latex) os << " ";
      append_power(os, x, tm.eq, latex);
      need_sep = true;
    }
    if (tm.et != 0) {
      if (need_sep && !latex) os << "*";
      if (need_sep && latex) os << " ";
      append_power(os, y, tm.et, latex);
    }
  }
  return os.str();
}

const Poly2& poly_one() {
  static const Poly2 one(1L);
  return one;
}

}  // namespace

const char* field_name(Field f) {
  switch (f) {
    case Field::qt:
      return "Q(q,t)";
    case Field::alpha:
      return "Q(alpha)";
    case Field::t:
      return "Q(t)";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Poly2

Poly2::Poly2(const BigInt& c) {
  if (c != 0) terms_.push_back({0, 0, c});
}

Poly2 Poly2::monomial(const BigInt& c, int eq, int et) {
  Poly2 p;
  if (c != 0) p.terms_.push_back({eq, et, c});
  return p;
}

Poly2 Poly2::from_terms(std::vector<Term2> terms) {
  Poly2 p;
  p.terms_ = std::move(terms);
  p.canonicalize();
  return p;
}

void Poly2::canonicalize() {
  std::sort(terms_.begin(), terms_.end(), term_greater);
  std::vector<Term2> out;
  out.reserve(terms_.size());
  for (auto& tm : terms_) {
    if (!out.empty() && out.back().eq == tm.eq && out.back().et == tm.et) {
      out.back().c += tm.c;
    } else {
      if (!out.empty() && out.back().c == 0) out.pop_back();
      out.push_back(std::move(tm));
    }
  }
  if (!out.empty() && out.back().c == 0) out.pop_back();
  terms_ = std::move(out);
}

bool Poly2::is_one() const {
  return terms_.size() == 1 && terms_[0].eq == 0 && terms_[0].et == 0 && terms_[0].c == 1;
}

bool Poly2::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].eq == 0 && terms_[0].et == 0);
}

bool Poly2::has_negative_exponents() const {
  for (const auto& tm : terms_) {
    if (tm.eq < 0 || tm.et < 0) return true;
  }
  return false;
}

int Poly2::min_eq() const {
  int m = 0;
  bool first = true;
  for (const auto& tm : terms_) {
    if (first || tm.eq < m) m = tm.eq;
    first = false;
  }
  return m;
}

int Poly2::min_et() const {
  int m = 0;
  bool first = true;
  for (const auto& tm : terms_) {
    if (first || tm.et < m) m = tm.et;
    first = false;
  }
  return m;
}

int Poly2::max_eq() const {
  int m = 0;
  bool first = true;
  for (const auto& tm : terms_) {
    if (first || tm.eq > m) m = tm.eq;
    first = false;
  }
  return m;
}

int Poly2::max_et() const {
  int m = 0;
  bool first = true;
  for (const auto& tm : terms_) {
    if (first || tm.et > m) m = tm.et;
    first = false;
  }
  return m;
}

BigInt Poly2::content() const {
  BigInt g = 0;
  for (const auto& tm : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), tm.c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Poly2 Poly2::shifted(int dq, int dt) const {
  Poly2 r = *this;
  for (auto& tm : r.terms_) {
    tm.eq += dq;
    tm.et += dt;
  }
  return r;
}

Poly2 Poly2::operator-() const {
  Poly2 r = *this;
  for (auto& tm : r.terms_) tm.c = -tm.c;
  return r;
}

Poly2& Poly2::operator+=(const Poly2& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = o.terms_;
    return *this;
  }
  std::vector<Term2> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() ||
        (i < terms_.size() && term_greater(terms_[i], o.terms_[j]))) {
      out.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || term_greater(o.terms_[j], terms_[i])) {
      out.push_back(o.terms_[j++]);
    } else {
      BigInt s = terms_[i].c + o.terms_[j].c;
      if (s != 0) out.push_back({terms_[i].eq, terms_[i].et, std::move(s)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) {
  return *this += -o;
}

Poly2& Poly2::operator*=(const BigInt& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& tm : terms_) tm.c *= c;
  return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
  if (a.is_zero() || b.is_zero()) return Poly2();
  if (b.terms_.size() == 1) {
    Poly2 r = a;
    const Term2& m = b.terms_[0];
    for (auto& tm : r.terms_) {
      tm.eq += m.eq;
      tm.et += m.et;
      if (m.c != 1) tm.c *= m.c;
    }
    return r;
  }
  if (a.terms_.size() == 1) return b * a;
  std::vector<Term2> ts;
  ts.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      ts.push_back({x.eq + y.eq, x.et + y.et, x.c * y.c});
    }
  }
  return Poly2::from_terms(std::move(ts));
}

bool operator==(const Poly2& a, const Poly2& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    const auto& x = a.terms_[i];
    const auto& y = b.terms_[i];
    if (x.eq != y.eq || x.et != y.et || x.c != y.c) return false;
  }
  return true;
}

Poly2 Poly2::divexact(const BigInt& c) const {
  Poly2 r = *this;
  for (auto& tm : r.terms_) mpz_divexact(tm.c.get_mpz_t(), tm.c.get_mpz_t(), c.get_mpz_t());
  return r;
}

BigRational Poly2::evaluate(const BigRational& x, const BigRational& y) const {
  BigRational acc = 0;
  for (const auto& tm : terms_) {
    auto power = [](const BigRational& base, int e) {
      if (e < 0) {
        if (base == 0) throw PoleError("negative power of zero");
        BigRational inv = 1 / base;
        BigRational r = 1;
        for (int k = 0; k < -e; ++k) r *= inv;
        return r;
      }
      BigRational r = 1;
      for (int k = 0; k < e; ++k) r *= base;
      return r;
    };
    BigRational v = tm.c;
    if (tm.eq != 0) v *= power(x, tm.eq);
    if (tm.et != 0) v *= power(y, tm.et);
    acc += v;
  }
  acc.canonicalize();
  return acc;
}

Poly2 Poly2::substitute_first(int a) const {
  std::vector<Term2> ts;
  ts.reserve(terms_.size());
  for (const auto& tm : terms_) ts.push_back({0, tm.et + a * tm.eq, tm.c});
  return from_terms(std::move(ts));
}

std::size_t Poly2::hash() const {
  std::size_t h = terms_.size();
  for (const auto& tm : terms_) {
    h = h * 1000003u ^ static_cast<std::size_t>(tm.eq * 7919 + tm.et);
    h = h * 1000003u ^ static_cast<std::size_t>(mpz_get_si(tm.c.get_mpz_t()));
  }
  return h;
}

bool Poly2::try_exact_div(const Poly2& a, const Poly2& b, Poly2& out) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  out = Poly2();
  if (a.is_zero()) return true;
  if (b.terms_.size() == 1) {
    const Term2& m = b.terms_[0];
    for (const auto& tm : a.terms_) {
      if (!mpz_divisible_p(tm.c.get_mpz_t(), m.c.get_mpz_t())) return false;
    }
    out = a.shifted(-m.eq, -m.et);
    if (m.c != 1) {
      for (auto& tm : out.terms_) mpz_divexact(tm.c.get_mpz_t(), tm.c.get_mpz_t(), m.c.get_mpz_t());
    }
    return true;
  }
  // Per-variable exponent bounds on any quotient term.
  const int lo_q = a.min_eq() - b.min_eq();
  const int hi_q = a.max_eq() - b.max_eq();
  const int lo_t = a.min_et() - b.min_et();
  const int hi_t = a.max_et() - b.max_et();
  if (lo_q > hi_q || lo_t > hi_t) return false;
  const Term2& lb = b.terms_.front();
  Poly2 r = a;
  std::vector<Term2> quot;
  while (!r.is_zero()) {
    const Term2& lr = r.terms_.front();
    const int dq = lr.eq - lb.eq;
    const int dt = lr.et - lb.et;
    if (dq < lo_q || dq > hi_q || dt < lo_t || dt > hi_t) return false;
    if (!mpz_divisible_p(lr.c.get_mpz_t(), lb.c.get_mpz_t())) return false;
    BigInt c;
    mpz_divexact(c.get_mpz_t(), lr.c.get_mpz_t(), lb.c.get_mpz_t());
    Poly2 sub = b;
    for (auto& tm : sub.terms_) {
      tm.eq += dq;
      tm.et += dt;
      tm.c *= c;
    }
    r -= sub;
    quot.push_back({dq, dt, std::move(c)});
  }
  out = from_terms(std::move(quot));
  return true;
}

Poly2 Poly2::exact_div(const Poly2& a, const Poly2& b) {
  Poly2 out;
  if (!try_exact_div(a, b, out)) throw NotExact("polynomial is not exactly divisible");
  return out;
}

Poly2 Poly2::gcd(const Poly2& a, const Poly2& b) {
  if (a.is_zero() && b.is_zero()) return Poly2();
  auto positive = [](Poly2 p) {
    if (!p.is_zero() && p.leading().c < 0) p = -p;
    return p;
  };
  if (a.is_zero()) return positive(b);
  if (b.is_zero()) return positive(a);
  if (a.is_constant() || b.is_constant()) {
    BigInt g = 0;
    mpz_gcd(g.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
    return Poly2(g);
  }
  if (auto h = heu_gcd2(a, b)) return positive(*h);
  BPoly A = to_dense(a);
  BPoly B = to_dense(b);
  UPoly ca = b_content(A);
  UPoly cb = b_content(B);
  UPoly c = u_gcd(ca, cb);
  A = b_pp(std::move(A));
  B = b_pp(std::move(B));
  if (A.size() < B.size()) std::swap(A, B);
  while (!B.empty()) {
    if (B.size() == 1) {
      A = BPoly{UPoly{BigInt(1)}};
      break;
    }
    BPoly R = b_prem(A, B);
    A = std::move(B);
    B = b_pp(std::move(R));
  }
  for (auto& coef : A) coef = u_mul(coef, c);
  return positive(from_dense(A));
}

std::string Poly2::to_string(const char* x, const char* y) const {
  return format_poly(*this, x, y, false);
}

std::string Poly2::to_latex(const char* x, const char* y) const {
  return format_poly(*this, x, y, true);
}

// ---------------------------------------------------------------------------
// RatFunc

RatFunc::RatFunc(long v, Field f) : num_(BigInt(v)), field_(f) {}

RatFunc::RatFunc(const BigRational& v, Field f) : num_(BigInt(v.get_num())), field_(f) {
  if (v.get_den() != 1) {
    den_ = Poly2(BigInt(v.get_den()));
    normalize();
  }
}

RatFunc::RatFunc(Poly2 num, Field f) : num_(std::move(num)), field_(f) {}

RatFunc::RatFunc(Poly2 num, Poly2 den, Field f)
    : num_(std::move(num)), den_(std::move(den)), field_(f) {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  normalize();
}

RatFunc RatFunc::q(int power) { return RatFunc(Poly2::monomial(1, power, 0), Field::qt); }

RatFunc RatFunc::t(int power, Field f) {
  if (f == Field::alpha) throw FieldMismatch("t is not a variable of Q(alpha)");
  return RatFunc(Poly2::monomial(1, 0, power), f);
}

RatFunc RatFunc::alpha(int power) { return RatFunc(Poly2::monomial(1, power, 0), Field::alpha); }

const Poly2& RatFunc::den() const { return den_.is_zero() ? poly_one() : den_; }

bool RatFunc::is_integral_polynomial() const {
  return den_.is_zero() && !num_.has_negative_exponents();
}

void RatFunc::check_field(const RatFunc& o) const {
  if (field_ != o.field_) {
    throw FieldMismatch(std::string("cannot combine ") + field_name(field_) + " with " +
                        field_name(o.field_));
  }
}

// Normal form: den has nonnegative exponents, is not divisible by either
// variable, is coprime to num, and has a positive leading coefficient.
// A denominator equal to 1 is stored as the empty polynomial.
void RatFunc::normalize() {
  if (den_.is_zero()) return;
  if (num_.is_zero()) {
    den_ = Poly2();
    return;
  }
  const int sq = den_.min_eq();
  const int st = den_.min_et();
  if (sq != 0 || st != 0) {
    den_ = den_.shifted(-sq, -st);
    num_ = num_.shifted(-sq, -st);
  }
  if (den_.is_constant()) {
    BigInt d = den_.leading().c;
    BigInt g = num_.content();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    if (d < 0) g = -g;
    num_ = num_.divexact(g);
    d /= g;
    den_ = d == 1 ? Poly2() : Poly2(d);
    return;
  }
  const int nq = num_.min_eq();
  const int nt = num_.min_et();
  Poly2 n0 = num_.shifted(-nq, -nt);
  Poly2 quotient;
  if (Poly2::try_exact_div(n0, den_, quotient)) {
    num_ = quotient.shifted(nq, nt);
    den_ = Poly2();
    return;
  }
  Poly2 g = Poly2::gcd(n0, den_);
  if (!g.is_one()) {
    n0 = Poly2::exact_div(n0, g);
    den_ = Poly2::exact_div(den_, g);
  }
  if (den_.leading().c < 0) {
    n0 = -n0;
    den_ = -den_;
  }
  num_ = n0.shifted(nq, nt);
  if (den_.is_one()) den_ = Poly2();
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  return RatFunc(den(), num_, field_);
}

RatFunc RatFunc::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RatFunc r = one(field_);
  RatFunc base = *this;
  while (e > 0) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  check_field(o);
  if (o.is_zero()) return *this;
  if (is_zero()) {
    *this = o;
    return *this;
  }
  if (den_.is_zero() && o.den_.is_zero()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
    normalize();
    return *this;
  }
  const Poly2& b = den();
  const Poly2& d = o.den();
  if (b.is_one()) {
    num_ = num_ * d + o.num_;
    den_ = d;
    normalize();
    return *this;
  }
  if (d.is_one()) {
    num_ = num_ + o.num_ * b;
    normalize();
    return *this;
  }
  Poly2 g = Poly2::gcd(b, d);
  Poly2 bg = Poly2::exact_div(b, g);
  Poly2 dg = Poly2::exact_div(d, g);
  num_ = num_ * dg + o.num_ * bg;
  den_ = b * dg;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  check_field(o);
  if (is_zero()) return *this;
  if (o.is_zero()) {
    num_ = Poly2();
    den_ = Poly2();
    return *this;
  }
  if (den_.is_zero() && o.den_.is_zero()) {
    num_ = num_ * o.num_;
    return *this;
  }
  num_ = num_ * o.num_;
  den_ = den() * o.den();
  normalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  check_field(o);
  if (o.is_zero()) throw DivisionByZero("division by zero in " + std::string(field_name(field_)));
  if (is_zero()) return *this;
  if (o.den_.is_zero() && o.num_.is_monomial()) {
    const Term2& m = o.num_.leading();
    num_ = num_.shifted(-m.eq, -m.et);
    if (m.c != 1) {
      den_ = den() * Poly2(m.c);
      normalize();
    }
    return *this;
  }
  num_ = num_ * o.den();
  den_ = den() * o.num_;
  normalize();
  return *this;
}

std::size_t RatFunc::hash() const {
  return num_.hash() * 31u + den_.hash() * 7u + static_cast<std::size_t>(field_);
}

namespace {

std::pair<const char*, const char*> var_names(Field f) {
  switch (f) {
    case Field::alpha:
      return {"alpha", "t"};
    case Field::t:
    case Field::qt:
      break;
  }
  return {"q", "t"};
}

}  // namespace

std::string RatFunc::to_string() const {
  auto [x, y] = var_names(field_);
  if (den_.is_zero() && !num_.has_negative_exponents()) return num_.to_string(x, y);
  // Display with nonnegative exponents: multiply through by a monomial.
  const int sq = std::min(0, num_.min_eq());
  const int st = std::min(0, num_.min_et());
  Poly2 n = num_.shifted(-sq, -st);
  Poly2 d = den().shifted(-sq, -st);
  auto wrap = [](const Poly2& p, const char* a, const char* b) {
    std::string s = p.to_string(a, b);
    return p.size() > 1 ? "(" + s + ")" : s;
  };
  return wrap(n, x, y) + "/" + wrap(d, x, y);
}

std::string RatFunc::to_latex() const {
  auto [x, y] = var_names(field_);
  const char* lx = field_ == Field::alpha ? "\\alpha" : x;
  if (den_.is_zero() && !num_.has_negative_exponents()) return num_.to_latex(lx, y);
  const int sq = std::min(0, num_.min_eq());
  const int st = std::min(0, num_.min_et());
  Poly2 n = num_.shifted(-sq, -st);
  Poly2 d = den().shifted(-sq, -st);
  return "\\frac{" + n.to_latex(lx, y) + "}{" + d.to_latex(lx, y) + "}";
}

RatFunc add(const RatFunc& a, const RatFunc& b) { return a + b; }
RatFunc sub(const RatFunc& a, const RatFunc& b) { return a - b; }
RatFunc mul(const RatFunc& a, const RatFunc& b) { return a * b; }
RatFunc div(const RatFunc& a, const RatFunc& b) { return a / b; }

RatFunc substitute_q_power(const RatFunc& f, int a) {
  if (f.field() != Field::qt) throw FieldMismatch("substitute_q_power expects an element of Q(q,t)");
  if (a < 1) throw std::invalid_argument("substitute_q_power expects a positive exponent");
  return RatFunc(f.num().substitute_first(a), f.den().substitute_first(a), Field::t);
}

BigRational eval_cancel(const RatFunc& f, const BigRational& t0) {
  if (f.field() != Field::t) throw FieldMismatch("eval_cancel expects an element of Q(t)");
  BigRational d = f.den().evaluate(0, t0);
  if (d == 0) throw PoleError("pole at t = " + t0.get_str());
  BigRational n = f.num().evaluate(0, t0);
  BigRational r = n / d;
  r.canonicalize();
  return r;
}

BigRational eval_alpha(const RatFunc& f, const BigRational& a0) {
  if (f.field() != Field::alpha) throw FieldMismatch("eval_alpha expects an element of Q(alpha)");
  BigRational d = f.den().evaluate(a0, 0);
  if (d == 0) throw PoleError("pole at alpha = " + a0.get_str());
  BigRational r = f.num().evaluate(a0, 0) / d;
  r.canonicalize();
  return r;
}

RatFunc pochhammer(const RatFunc& a, const RatFunc& base, int n) {
  RatFunc r = RatFunc::one(a.field());
  RatFunc power = RatFunc::one(a.field());
  for (int i = 0; i < n; ++i) {
    r *= RatFunc::one(a.field()) - power * a;
    power *= base;
  }
  return r;
}

RatFunc one_minus_qt(int a, int b) {
  return RatFunc(Poly2(1L) - Poly2::monomial(1, a, b), Field::qt);
}

}  // namespace macjack
