#include "macjack/macdonald.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

#include "macjack/operators.hpp"

namespace macjack {

namespace {

std::shared_ptr<const DifferenceOperator> m_r_operator(int n, int r) {
  return cached_operator("M_r/" + std::to_string(n) + "/" + std::to_string(r), [n, r] {
    std::vector<OperatorTerm> terms;
    for (std::uint32_t subset : subsets_of_size(n, r)) {
      OperatorTerm term;
      term.coeff = RatFunc::t(r * (r - 1) / 2);
      for (int i = 0; i < n; ++i) {
        if (!(subset & (1u << i))) continue;
        for (int j = 0; j < n; ++j) {
          if (subset & (1u << j)) continue;
          term.pairs.push_back({i, j, RatFunc::t(), RatFunc::one(Field::qt)});
        }
      }
      term.shift_mask = subset;
      terms.push_back(std::move(term));
    }
    return DifferenceOperator(n, terms);
  });
}

std::shared_ptr<const DifferenceOperator> m_x_operator(int n, const RatFunc& X) {
  return cached_operator("M_X/" + std::to_string(n) + "/" + X.to_string(), [n, X] {
    std::vector<OperatorTerm> terms;
    append_subset_M_terms(terms, (1u << n) - 1, X, RatFunc::one(Field::qt), {}, Monomial{}, 0);
    return DifferenceOperator(n, terms);
  });
}

void require_qt(const SymFunc& f) {
  if (f.field() != Field::qt) throw FieldMismatch("Macdonald operators act over Q(q,t)");
}

RatFunc creation_X(int n, int k) { return -(RatFunc::t(k + 1 - n) * RatFunc::q(-1)); }

RatFunc creation_scale(int n, int k) {
  return pochhammer(RatFunc::q(-1), RatFunc::t(-1), n - k).inverse();
}

// Label order used for triangular solves: weight first, then lexicographic.
bool label_less(const Partition& a, const Partition& b) {
  if (a.weight() != b.weight()) return a.weight() < b.weight();
  return a < b;
}

}  // namespace

SymFunc apply_M_r(const SymFunc& f, int r) {
  require_qt(f);
  const int n = f.n_vars();
  if (r < 0 || r > n) throw std::out_of_range("M_N^r needs 0 <= r <= N");
  if (r == 0) return f;
  return m_r_operator(n, r)->apply(f);
}

SymFunc apply_M_X(const SymFunc& f, const RatFunc& X) {
  require_qt(f);
  if (X.is_zero()) return f;
  return m_x_operator(f.n_vars(), X)->apply(f);
}

RatFunc eigenvalue_M_X(const Partition& lambda, int n_vars, const RatFunc& X) {
  RatFunc a = RatFunc::one(Field::qt);
  for (int i = 1; i <= n_vars; ++i) {
    a *= RatFunc::one(Field::qt) + X * RatFunc::q(lambda.part(i)) * RatFunc::t(n_vars - i);
  }
  return a;
}

RatFunc eigenvalue_M_r(const Partition& lambda, int n_vars, int r) {
  if (r < 0 || r > n_vars) throw std::out_of_range("M_N^r needs 0 <= r <= N");
  // Elementary symmetric function of the N values by the usual recurrence.
  std::vector<RatFunc> e(static_cast<std::size_t>(n_vars + 1), RatFunc::zero(Field::qt));
  e[0] = RatFunc::one(Field::qt);
  for (int i = 1; i <= n_vars; ++i) {
    const RatFunc y = RatFunc::q(lambda.part(i)) * RatFunc::t(n_vars - i);
    for (int j = i; j >= 1; --j) e[static_cast<std::size_t>(j)] += y * e[static_cast<std::size_t>(j - 1)];
  }
  return e[static_cast<std::size_t>(r)];
}

SymFunc b_plus(const SymFunc& f, int k) {
  require_qt(f);
  const int n = f.n_vars();
  if (k < 1 || k > n) throw std::out_of_range("B_k^+ needs 1 <= k <= N");
  SymFunc g = multiply(e_k(n, k), f);
  return apply_M_X(g, creation_X(n, k)) * creation_scale(n, k);
}

SymFunc b_minus(const SymFunc& f, int k) {
  require_qt(f);
  const int n = f.n_vars();
  if (k < 1 || k > n) throw std::out_of_range("B_k^- needs 1 <= k <= N");
  SymFunc g = apply_M_X(f, creation_X(n, k));
  if (k < n) g = multiply(e_k(n, n - k), g);
  return g.times_en(-1) * creation_scale(n, k);
}

SymFunc rodrigues(const Partition& lambda, int n_vars) {
  if (lambda.length() > n_vars) {
    throw std::invalid_argument("partition " + lambda.to_string() + " has more than " +
                                std::to_string(n_vars) + " parts");
  }
  if (lambda.empty()) return SymFunc::one(n_vars);
  static std::mutex mu;
  static std::map<std::pair<Partition, int>, SymFunc> cache;
  const auto key = std::make_pair(lambda, n_vars);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  // The last operator of the chain adds the first column, whose height is
  // the length of lambda.
  const int k = lambda.length();
  SymFunc j = b_plus(rodrigues(lambda.minus_column(k), n_vars), k);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(j)).first->second;
}

SymFunc macdonald_P(const Partition& lambda, int n_vars) {
  return rodrigues(lambda, n_vars) / c_lambda_qt(lambda);
}

MacdonaldBasisElement macdonald_element(const Partition& lambda, int n_vars, BasisKind kind) {
  if (kind == BasisKind::macdonald_J) return {lambda, kind, rodrigues(lambda, n_vars)};
  if (kind == BasisKind::macdonald_P) return {lambda, kind, macdonald_P(lambda, n_vars)};
  throw std::invalid_argument("Macdonald basis elements are of kind P or J");
}

PExpansion to_P_basis(const SymFunc& f) {
  require_qt(f);
  if (f.en_power() != 0) throw std::invalid_argument("to_P_basis: Laurent input, use to_P_basis_laurent");
  PExpansion out;
  SymFunc rest = f;
  while (!rest.is_zero()) {
    const Partition* top = nullptr;
    for (const auto& [lam, c] : rest.coeffs()) {
      if (top == nullptr || label_less(*top, lam)) top = &lam;
    }
    const Partition mu = *top;
    const RatFunc c = rest.coefficient(mu);
    rest -= macdonald_P(mu, f.n_vars()) * c;
    if (!rest.coefficient(mu).is_zero()) throw std::logic_error("to_P_basis: P_mu is not monic");
    out.emplace_back(mu, c);
  }
  return out;
}

LaurentPExpansion to_P_basis_laurent(const SymFunc& f) {
  SymFunc poly = f.times_en(-f.en_power());
  LaurentPExpansion out;
  for (auto& [mu, c] : to_P_basis(poly)) {
    out.emplace_back(ExtendedPartition(mu, BigRational(f.en_power()), f.n_vars()), c);
  }
  return out;
}

SymFunc from_P_basis(const LaurentPExpansion& terms, int n_vars) {
  SymFunc f(n_vars, Field::qt);
  for (const auto& [delta, c] : terms) {
    if (!delta.is_integral()) throw std::invalid_argument("from_P_basis: non-integral label");
    f += (macdonald_P(delta.shape(), n_vars) * c).times_en(delta.last_int());
  }
  return f;
}

PExpansion pieri_expand(const Partition& lambda, int k, int n_vars) {
  if (lambda.length() > n_vars) throw std::invalid_argument("pieri_expand: too many parts");
  PExpansion out;
  if (k > n_vars) return out;
  for (const auto& mu : vertical_strips(lambda, k, n_vars)) {
    out.emplace_back(mu, psi(mu, lambda, Field::qt));
  }
  return out;
}

RatFunc norm_ratio(const Partition& lambda, int n_vars) {
  if (lambda.length() > n_vars) throw std::invalid_argument("norm_ratio: too many parts");
  RatFunc r = RatFunc::one(Field::qt);
  Partition cur = lambda;
  while (!cur.empty()) {
    const int k = cur.length();
    const Partition prev = cur.minus_column(k);
    r *= psi(prev.plus_column(n_vars), cur, Field::qt);
    cur = prev;
  }
  return r;
}

RatFunc norm_closed_form_ratio(const Partition& lambda, int n_vars) {
  if (lambda.length() > n_vars) throw std::invalid_argument("norm_closed_form_ratio: too many parts");
  RatFunc r = RatFunc::one(Field::qt);
  for (int i = 1; i <= lambda.length(); ++i) {
    for (int j = 1; j <= lambda.part(i); ++j) {
      const Cell s{i, j};
      const int ap = coarm(lambda, s), lp = coleg(lambda, s);
      r /= b_lambda(lambda, s, Field::qt);
      r *= one_minus_qt(ap, n_vars - lp) / one_minus_qt(ap + 1, n_vars - lp - 1);
    }
  }
  return r;
}

RatFunc norm_ratio_adjoint(const Partition& lambda, int n_vars) {
  if (lambda.length() > n_vars) throw std::invalid_argument("norm_ratio_adjoint: too many parts");
  RatFunc r = RatFunc::one(Field::qt);
  Partition cur = lambda;
  while (!cur.empty()) {
    const int k = cur.length();
    const Partition prev = cur.minus_column(k);
    // (P_cur, P_cur) = c_prev/c_cur * (P_prev, B_k^- P_cur).
    const SymFunc image = b_minus(macdonald_P(cur, n_vars), k).times_en(1);
    const Partition target = prev.plus_column(n_vars);
    RatFunc coeff = RatFunc::zero(Field::qt);
    for (const auto& [mu, c] : to_P_basis(image)) {
      if (mu == target) coeff = c;
    }
    r *= coeff * c_lambda_qt(prev) / c_lambda_qt(cur);
    cur = prev;
  }
  return r;
}

NormRecord norm_record(const Partition& lambda, int n_vars) {
  return {lambda, norm_ratio(lambda, n_vars)};
}

}  // namespace macjack
