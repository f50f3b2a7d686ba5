#include "macjack/symmetric.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace macjack {

namespace {

// Add k full columns of height n to every label.
SymFunc::Map add_columns(const SymFunc::Map& m, int n, int k) {
  if (k == 0) return m;
  SymFunc::Map out;
  for (const auto& [lam, c] : m) {
    std::vector<int> parts(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < lam.length(); ++i) parts[static_cast<std::size_t>(i)] = lam.parts()[static_cast<std::size_t>(i)];
    for (auto& p : parts) p += k;
    out.emplace(Partition(std::move(parts)), c);
  }
  return out;
}

std::vector<std::vector<int>> distinct_permutations(const Partition& lam, int n) {
  std::vector<int> v(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < lam.length(); ++i) v[static_cast<std::size_t>(i)] = lam.parts()[static_cast<std::size_t>(i)];
  std::sort(v.begin(), v.end());
  std::vector<std::vector<int>> out;
  do {
    out.push_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::string parts_csv(const Partition& lam) {
  std::string s;
  for (std::size_t i = 0; i < lam.parts().size(); ++i) {
    if (i) s += ',';
    s += std::to_string(lam.parts()[i]);
  }
  return s;
}

std::vector<std::vector<BigRational>> invert(std::vector<std::vector<BigRational>> a) {
  const std::size_t n = a.size();
  std::vector<std::vector<BigRational>> inv(n, std::vector<BigRational>(n, BigRational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::domain_error("power-sum matrix is singular");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const BigRational d = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= d;
      inv[col][j] /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const BigRational f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

struct PInverse {
  std::vector<Partition> basis;
  std::map<Partition, std::size_t> index;
  std::vector<std::vector<BigRational>> q;  // m_basis[a] = sum_b q[a][b] p_basis[b]
};

const PInverse& p_inverse(int n) {
  static std::mutex mu;
  static std::map<int, PInverse> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  PBasisMatrix pm = p_basis_matrix(n, std::max(n, 1));
  PInverse r;
  r.basis = pm.basis;
  for (std::size_t i = 0; i < r.basis.size(); ++i) r.index.emplace(r.basis[i], i);
  r.q = invert(pm.rows);
  return cache.emplace(n, std::move(r)).first->second;
}

RatFunc p_weight(const Partition& nu, Field field) {
  RatFunc w(BigRational(z_lambda(nu)), field);
  for (int part : nu.parts()) {
    if (field == Field::alpha) {
      w *= RatFunc::alpha();
    } else if (field == Field::qt) {
      w *= one_minus_qt(part, 0) / one_minus_qt(0, part);
    } else {
      throw FieldMismatch("scalar products are defined over Q(q,t) and Q(alpha)");
    }
  }
  return w;
}

RatFunc scalar_generic(const SymFunc& f, const SymFunc& g, Field field) {
  if (f.field() != field || g.field() != field) throw FieldMismatch("scalar product over the wrong field");
  if (f.n_vars() != g.n_vars()) throw std::invalid_argument("scalar product: variable counts differ");
  if (f.is_zero() || g.is_zero()) return RatFunc::zero(field);
  auto a = to_p_basis(f);
  auto b = to_p_basis(g);
  RatFunc s = RatFunc::zero(field);
  for (const auto& [nu, ca] : a) {
    auto it = b.find(nu);
    if (it == b.end()) continue;
    s += ca * it->second * p_weight(nu, field);
  }
  return s;
}

}  // namespace

const char* basis_name(BasisKind b) {
  switch (b) {
    case BasisKind::monomial: return "m";
    case BasisKind::elementary: return "e";
    case BasisKind::powersum: return "p";
    case BasisKind::macdonald_P: return "P";
    case BasisKind::macdonald_J: return "J";
  }
  return "?";
}

SymFunc::SymFunc(int n_vars, Field field) : n_(n_vars), field_(field) {
  if (n_vars < 1 || n_vars > kMaxVars) {
    throw std::invalid_argument("number of variables must be in 1.." + std::to_string(kMaxVars));
  }
}

SymFunc SymFunc::one(int n_vars, Field field) { return constant(n_vars, RatFunc::one(field)); }

SymFunc SymFunc::constant(int n_vars, const RatFunc& c) {
  return monomial(n_vars, Partition{}, c);
}

SymFunc SymFunc::monomial(int n_vars, const Partition& lambda, const RatFunc& c) {
  SymFunc f(n_vars, c.field());
  f.add_term(lambda, c);
  return f;
}

RatFunc SymFunc::coefficient(const Partition& lambda) const {
  auto it = coeffs_.find(lambda);
  return it == coeffs_.end() ? RatFunc::zero(field_) : it->second;
}

int SymFunc::homogeneous_degree() const {
  int d = -1;
  for (const auto& [lam, c] : coeffs_) {
    const int w = lam.weight() + en_power_ * n_;
    if (d == -1) {
      d = w;
    } else if (d != w) {
      return -1;
    }
  }
  return d;
}

void SymFunc::add_term(const Partition& lambda, const RatFunc& c) {
  if (c.field() != field_) throw FieldMismatch("coefficient from a different field");
  if (lambda.length() > n_) {
    throw std::invalid_argument("partition " + lambda.to_string() + " has more than " +
                                std::to_string(n_) + " parts");
  }
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
  normalize_en();
}

void SymFunc::check_compatible(const SymFunc& o) const {
  if (n_ != o.n_) throw std::invalid_argument("symmetric functions in different numbers of variables");
  if (field_ != o.field_) throw FieldMismatch("symmetric functions over different fields");
}

void SymFunc::normalize_en() {
  if (coeffs_.empty()) {
    en_power_ = 0;
    return;
  }
  if (en_power_ > 0) {
    coeffs_ = add_columns(coeffs_, n_, en_power_);
    en_power_ = 0;
  }
  while (en_power_ < 0) {
    int drop = -en_power_;
    for (const auto& [lam, c] : coeffs_) {
      drop = std::min(drop, lam.length() == n_ ? lam.parts().back() : 0);
    }
    if (drop == 0) break;
    coeffs_ = add_columns(coeffs_, n_, -drop);
    en_power_ += drop;
  }
}

SymFunc SymFunc::operator-() const {
  SymFunc r = *this;
  for (auto& [lam, c] : r.coeffs_) c = -c;
  return r;
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
  check_compatible(o);
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int low = std::min(en_power_, o.en_power_);
  if (en_power_ != low) {
    coeffs_ = add_columns(coeffs_, n_, en_power_ - low);
    en_power_ = low;
  }
  const Map other = add_columns(o.coeffs_, n_, o.en_power_ - low);
  for (const auto& [lam, c] : other) {
    auto [it, inserted] = coeffs_.try_emplace(lam, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }
  normalize_en();
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) { return *this += -o; }

SymFunc& SymFunc::operator*=(const RatFunc& c) {
  if (c.field() != field_) throw FieldMismatch("scalar from a different field");
  if (c.is_zero()) {
    coeffs_.clear();
    en_power_ = 0;
    return *this;
  }
  if (!c.is_one()) {
    for (auto& [lam, v] : coeffs_) v *= c;
  }
  return *this;
}

SymFunc& SymFunc::operator/=(const RatFunc& c) { return *this *= c.inverse(); }

SymFunc SymFunc::times_en(int k) const {
  SymFunc r = *this;
  if (r.is_zero()) return r;
  r.en_power_ += k;
  r.normalize_en();
  return r;
}

std::string SymFunc::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string body;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto& [lam, c] = *it;
    std::string term;
    if (lam.empty()) {
      term = c.to_string();
    } else if (c.is_one()) {
      term = "m[" + parts_csv(lam) + "]";
    } else if ((-c).is_one()) {
      term = "-m[" + parts_csv(lam) + "]";
    } else {
      term = "(" + c.to_string() + ")*m[" + parts_csv(lam) + "]";
    }
    if (!first) body += " + ";
    body += term;
    first = false;
  }
  if (en_power_ == 0) return body;
  return "e[" + std::to_string(n_) + "]^(" + std::to_string(en_power_) + ")*(" + body + ")";
}

std::string SymFunc::to_latex() const {
  if (coeffs_.empty()) return "0";
  std::string body;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto& [lam, c] = *it;
    const std::string m = "m_{(" + parts_csv(lam) + ")}";
    std::string term;
    if (lam.empty()) {
      term = c.to_latex();
    } else if (c.is_one()) {
      term = m;
    } else if ((-c).is_one()) {
      term = "-" + m;
    } else {
      term = "\\left(" + c.to_latex() + "\\right) " + m;
    }
    if (!first) body += " + ";
    body += term;
    first = false;
  }
  if (en_power_ == 0) return body;
  return "e_{" + std::to_string(n_) + "}^{" + std::to_string(en_power_) + "} \\left(" + body + "\\right)";
}

MPoly to_x(const SymFunc& f) {
  const int n = f.n_vars();
  std::vector<MPoly::Term> ts;
  for (const auto& [lam, c] : f.coeffs()) {
    for (const auto& perm : distinct_permutations(lam, n)) {
      Monomial m;
      for (int i = 0; i < n; ++i) m[i] = static_cast<std::int16_t>(perm[static_cast<std::size_t>(i)] + f.en_power());
      ts.emplace_back(m, c);
    }
  }
  return MPoly::from_terms(n, f.field(), std::move(ts));
}

SymFunc from_x(const MPoly& g) {
  if (!is_symmetric(g)) throw std::invalid_argument("from_x: polynomial is not symmetric");
  const int n = g.n_vars();
  if (n < 1) throw std::invalid_argument("from_x: need at least one variable");
  int low = 0;
  for (const auto& [m, c] : g.terms()) {
    for (int i = 0; i < n; ++i) low = std::min(low, static_cast<int>(m[i]));
  }
  SymFunc f(n, g.field());
  SymFunc::Map coeffs;
  for (const auto& [m, c] : g.terms()) {
    bool sorted = true;
    for (int i = 1; i < n; ++i) {
      if (m[i] > m[i - 1]) sorted = false;
    }
    if (!sorted) continue;
    std::vector<int> parts(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) parts[static_cast<std::size_t>(i)] = m[i] - low;
    f.add_term(Partition(std::move(parts)), c);
  }
  return f.times_en(low);
}

SymFunc e_k(int n_vars, int k, Field field) {
  if (k < 0) throw std::invalid_argument("e_k needs k >= 0");
  if (k > n_vars) return SymFunc(n_vars, field);
  return SymFunc::monomial(n_vars, Partition(std::vector<int>(static_cast<std::size_t>(k), 1)),
                           RatFunc::one(field));
}

SymFunc p_k(int n_vars, int k, Field field) {
  if (k < 0) throw std::invalid_argument("p_k needs k >= 0");
  if (k == 0) return SymFunc::constant(n_vars, RatFunc(static_cast<long>(n_vars), field));
  return SymFunc::monomial(n_vars, Partition{k}, RatFunc::one(field));
}

SymFunc multiply(const SymFunc& f, const SymFunc& g) {
  if (f.n_vars() != g.n_vars()) throw std::invalid_argument("multiply: variable counts differ");
  if (f.field() != g.field()) throw FieldMismatch("multiply: fields differ");
  const int n = f.n_vars();
  SymFunc out(n, f.field());
  if (f.is_zero() || g.is_zero()) return out;
  std::map<Partition, std::vector<std::vector<int>>> gperms;
  for (const auto& [mu, c] : g.coeffs()) gperms.emplace(mu, distinct_permutations(mu, n));
  for (const auto& [lam, a] : f.coeffs()) {
    std::vector<int> base(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < lam.length(); ++i) base[static_cast<std::size_t>(i)] = lam.parts()[static_cast<std::size_t>(i)];
    for (const auto& [mu, b] : g.coeffs()) {
      // Coefficient of x^nu in m_lam m_mu with nu a partition: count the
      // permutations w of mu for which lam + w is weakly decreasing.
      std::map<Partition, long> counts;
      const auto& lperms = distinct_permutations(lam, n);
      for (const auto& u : lperms) {
        for (const auto& w : gperms.at(mu)) {
          std::vector<int> s(static_cast<std::size_t>(n));
          bool ok = true;
          for (int i = 0; i < n; ++i) {
            s[static_cast<std::size_t>(i)] = u[static_cast<std::size_t>(i)] + w[static_cast<std::size_t>(i)];
            if (i > 0 && s[static_cast<std::size_t>(i)] > s[static_cast<std::size_t>(i - 1)]) {
              ok = false;
              break;
            }
          }
          if (ok) ++counts[Partition(std::move(s))];
        }
      }
      // Each nu was counted once per permutation u of lam hitting it with
      // some w; the coefficient of x^nu is exactly that count.
      const RatFunc ab = a * b;
      for (const auto& [nu, cnt] : counts) {
        SymFunc term = SymFunc::monomial(n, nu, ab * RatFunc(cnt, f.field()));
        out += term.times_en(f.en_power() + g.en_power());
      }
    }
  }
  return out;
}

BigInt z_lambda(const Partition& lambda) {
  BigInt z = 1;
  std::map<int, int> mult;
  for (int p : lambda.parts()) ++mult[p];
  for (const auto& [part, m] : mult) {
    for (int i = 1; i <= m; ++i) z *= BigInt(part) * i;
  }
  return z;
}

PBasisMatrix p_basis_matrix(int n, int n_vars) {
  if (n < 0) throw std::invalid_argument("p_basis_matrix needs n >= 0");
  PBasisMatrix r;
  r.basis = partitions_of(n, n_vars);
  std::map<Partition, std::size_t> col;
  for (std::size_t i = 0; i < r.basis.size(); ++i) col.emplace(r.basis[i], i);
  for (const auto& nu : r.basis) {
    SymFunc p = SymFunc::one(n_vars);
    for (int part : nu.parts()) p = multiply(p, p_k(n_vars, part));
    std::vector<BigRational> row(r.basis.size(), BigRational(0));
    for (const auto& [lam, c] : p.coeffs()) {
      row[col.at(lam)] = c.num().is_zero() ? BigRational(0) : BigRational(c.num().leading().c);
    }
    r.rows.push_back(std::move(row));
  }
  return r;
}

std::map<Partition, RatFunc> to_p_basis(const SymFunc& f) {
  std::map<Partition, RatFunc> out;
  if (f.is_zero()) return out;
  const int n = f.homogeneous_degree();
  if (n < 0) throw std::invalid_argument("power-sum coordinates need a homogeneous input");
  if (f.en_power() != 0) throw std::invalid_argument("power-sum coordinates need a polynomial input");
  if (n > f.n_vars()) {
    throw std::domain_error("power sums are dependent in degree " + std::to_string(n) + " with " +
                            std::to_string(f.n_vars()) + " variables");
  }
  const PInverse& pinv = p_inverse(n);
  for (const auto& [lam, c] : f.coeffs()) {
    const auto& row = pinv.q[pinv.index.at(lam)];
    for (std::size_t b = 0; b < row.size(); ++b) {
      if (row[b] == 0) continue;
      RatFunc add = c * RatFunc(row[b], f.field());
      auto [it, inserted] = out.try_emplace(pinv.basis[b], add);
      if (!inserted) {
        it->second += add;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

RatFunc scalar_qt(const SymFunc& f, const SymFunc& g) { return scalar_generic(f, g, Field::qt); }

RatFunc scalar_alpha(const SymFunc& f, const SymFunc& g) { return scalar_generic(f, g, Field::alpha); }

}  // namespace macjack
