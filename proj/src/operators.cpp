#include "macjack/operators.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace macjack {

namespace {

MPoly linear(int n, Field field, int i, const RatFunc& a, int j, const RatFunc& b) {
  return MPoly::variable(n, i + 1, field) * a - MPoly::variable(n, j + 1, field) * b;
}

Poly2 lcm(const Poly2& a, const Poly2& b) {
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  return Poly2::exact_div(a * b, Poly2::gcd(a, b));
}

}  // namespace

DifferenceOperator::DifferenceOperator(int n_vars, const std::vector<OperatorTerm>& terms)
    : n_(n_vars), vandermonde_(vandermonde(n_vars, Field::qt)) {
  std::map<std::uint32_t, MPoly> by_mask;
  for (const auto& term : terms) {
    if (term.coeff.is_zero()) continue;
    std::vector<std::vector<bool>> used(static_cast<std::size_t>(n_), std::vector<bool>(static_cast<std::size_t>(n_), false));
    MPoly k = MPoly::monomial(n_, term.monomial, term.coeff);
    bool flip = false;
    for (const auto& p : term.pairs) {
      if (p.i == p.j || p.i < 0 || p.j < 0 || p.i >= n_ || p.j >= n_) {
        throw std::invalid_argument("operator pair factor has bad indices");
      }
      const int lo = std::min(p.i, p.j), hi = std::max(p.i, p.j);
      if (used[static_cast<std::size_t>(lo)][static_cast<std::size_t>(hi)]) {
        throw std::invalid_argument("operator term repeats a denominator pair");
      }
      used[static_cast<std::size_t>(lo)][static_cast<std::size_t>(hi)] = true;
      if (p.i > p.j) flip = !flip;
      k = k * linear(n_, Field::qt, p.i, p.a, p.j, p.b);
    }
    for (int a = 0; a < n_; ++a) {
      for (int b = a + 1; b < n_; ++b) {
        if (!used[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) {
          k = k * linear(n_, Field::qt, a, RatFunc::one(Field::qt), b, RatFunc::one(Field::qt));
        }
      }
    }
    if (flip) k = -k;
    auto [it, inserted] = by_mask.try_emplace(term.shift_mask, k);
    if (!inserted) it->second += k;
  }
  for (auto& [mask, k] : by_mask) {
    if (!k.is_zero()) kernels_.emplace_back(mask, std::move(k));
  }
}

MPoly DifferenceOperator::apply(const MPoly& f) const {
  if (f.n_vars() != n_) throw std::invalid_argument("operator applied in the wrong number of variables");
  if (f.is_zero() || kernels_.empty()) return MPoly(n_, f.field());
  std::unordered_map<Monomial, RatFunc, MonomialHash> acc;
  for (const auto& [mask, k] : kernels_) {
    const MPoly g = shift_q_mask(f, mask);
    for (const auto& [mx, cx] : k.terms()) {
      for (const auto& [my, cy] : g.terms()) {
        auto [it, inserted] = acc.try_emplace(mx + my, cx);
        if (inserted) {
          it->second *= cy;
        } else {
          it->second += cx * cy;
        }
      }
    }
  }
  std::vector<MPoly::Term> ts;
  ts.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) ts.emplace_back(m, std::move(c));
  }
  MPoly total = MPoly::from_terms(n_, f.field(), std::move(ts));
  if (n_ == 1) return total;
  return exact_div(total, vandermonde_);
}

SymFunc DifferenceOperator::apply(const SymFunc& f) const {
  if (f.n_vars() != n_) throw std::invalid_argument("operator applied in the wrong number of variables");
  if (f.is_zero()) return f;
  // Clear coefficient denominators so the heavy arithmetic stays in the
  // Laurent ring.
  Poly2 l(1L);
  for (const auto& [lam, c] : f.coeffs()) l = lcm(l, c.den());
  const RatFunc scale(l, Field::qt);
  SymFunc g = l.is_one() ? f : f * scale;
  MPoly out = apply(to_x(g));
  SymFunc r;
  try {
    r = from_x(out);
  } catch (const std::invalid_argument&) {
    throw std::logic_error("difference operator produced a non-symmetric result");
  }
  return l.is_one() ? r : r / scale;
}

std::shared_ptr<const DifferenceOperator> cached_operator(
    const std::string& key, const std::function<DifferenceOperator()>& build) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const DifferenceOperator>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto op = std::make_shared<const DifferenceOperator>(build());
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(op)).first->second;
}

std::vector<std::uint32_t> subsets_of_size(int n, int k) {
  std::vector<std::uint32_t> out;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  if (k > n || k < 0) return out;
  while (true) {
    std::uint32_t m = 0;
    for (int i : idx) m |= 1u << i;
    out.push_back(m);
    int p = k - 1;
    while (p >= 0 && idx[static_cast<std::size_t>(p)] == n - k + p) --p;
    if (p < 0) break;
    ++idx[static_cast<std::size_t>(p)];
    for (int r = p + 1; r < k; ++r) idx[static_cast<std::size_t>(r)] = idx[static_cast<std::size_t>(r - 1)] + 1;
  }
  return out;
}

void append_subset_M_terms(std::vector<OperatorTerm>& out, std::uint32_t subset, const RatFunc& X,
                           const RatFunc& scale, const std::vector<PairFactor>& extra_pairs,
                           const Monomial& monomial, std::uint32_t extra_shift) {
  std::vector<int> members;
  for (int i = 0; i < 32; ++i) {
    if (subset & (1u << i)) members.push_back(i);
  }
  const int r = static_cast<int>(members.size());
  for (std::uint32_t pick = 0; pick < (1u << r); ++pick) {
    std::uint32_t jmask = 0;
    int size = 0;
    for (int b = 0; b < r; ++b) {
      if (pick & (1u << b)) {
        jmask |= 1u << members[static_cast<std::size_t>(b)];
        ++size;
      }
    }
    OperatorTerm term;
    term.coeff = scale * X.pow(size) * RatFunc::t(size * (size - 1) / 2);
    term.pairs = extra_pairs;
    for (int j : members) {
      if (!(jmask & (1u << j))) continue;
      for (int l : members) {
        if (jmask & (1u << l)) continue;
        term.pairs.push_back({j, l, RatFunc::t(), RatFunc::one(Field::qt)});
      }
    }
    term.monomial = monomial;
    term.shift_mask = jmask | extra_shift;
    out.push_back(std::move(term));
  }
}

}  // namespace macjack
