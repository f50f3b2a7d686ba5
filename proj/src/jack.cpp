#include "macjack/jack.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "macjack/operators.hpp"
#include "macjack/parallel.hpp"

namespace macjack {

namespace {

void require_alpha(const SymFunc& f) {
  if (f.field() != Field::alpha) throw FieldMismatch("Jack operators act over Q(alpha)");
}

RatFunc a_const(const BigRational& v) { return RatFunc(v, Field::alpha); }

std::vector<int> mask_indices(std::uint32_t mask, int n) {
  std::vector<int> out;
  for (int i = 0; i < n; ++i) {
    if (mask & (1u << i)) out.push_back(i + 1);
  }
  return out;
}

// sum_{|J|=m} x_J D_{J,omega} g. Subsets sharing a suffix share the
// rightmost factors, so suffix results are memoized per call.
MPoly subset_dunkl_sum(const MPoly& g, int m, const RatFunc& omega) {
  const int n = g.n_vars();
  std::map<std::uint32_t, MPoly> memo;
  memo.emplace(0u, g);
  // suffix(mask): factors for the elements of mask, which occupy the last
  // |mask| positions of a size-m index set.
  std::function<const MPoly&(std::uint32_t)> suffix = [&](std::uint32_t mask) -> const MPoly& {
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    int first = 0;
    while (!(mask & (1u << first))) ++first;
    const std::uint32_t rest = mask & ~(1u << first);
    const int size = __builtin_popcount(mask);
    const int position = m - size;  // 0-based position of `first` in J
    const MPoly& inner = suffix(rest);
    MPoly r = dunkl(inner, first + 1) + inner * (omega + a_const(BigRational(position)));
    return memo.emplace(mask, std::move(r)).first->second;
  };
  MPoly total(n, g.field());
  for (std::uint32_t subset : subsets_of_size(n, m)) {
    Monomial xj;
    for (int i = 0; i < n; ++i) {
      if (subset & (1u << i)) xj[i] = 1;
    }
    total += suffix(subset).times_monomial(xj);
  }
  return total;
}

SymFunc symmetric_result(const MPoly& g) {
  try {
    return from_x(g);
  } catch (const std::invalid_argument&) {
    throw std::logic_error("Dunkl-operator expression produced a non-symmetric result");
  }
}

template <class Op>
SymFunc memo_jack_chain(int tag, const Partition& lambda, int n, Op op) {
  if (lambda.length() > n) {
    throw std::invalid_argument("partition " + lambda.to_string() + " has more than " + std::to_string(n) + " parts");
  }
  if (lambda.empty()) return SymFunc::one(n, Field::alpha);
  static std::mutex mu;
  static std::map<std::tuple<int, Partition, int>, SymFunc> cache;
  const auto key = std::make_tuple(tag, lambda, n);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const int k = lambda.length();
  SymFunc f = op(memo_jack_chain(tag, lambda.minus_column(k), n, op), k);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(f)).first->second;
}

bool label_less(const Partition& a, const Partition& b) {
  if (a.weight() != b.weight()) return a.weight() < b.weight();
  return a < b;
}

MPoly embed(const MPoly& f, int n) {
  std::vector<MPoly::Term> ts(f.terms().begin(), f.terms().end());
  return MPoly::from_terms(n, f.field(), std::move(ts));
}

std::string kappa_text(const BigRational& k) { return k.get_str(); }

std::vector<VerificationReport> f_family_sweep(const SweepBounds& b) {
  struct Case {
    int kind;  // 0 action vs tilde, 1 realization vs action, 2 commutator
    int n, m, l, shift;
    BigRational kappa;
    Partition lambda;
  };
  std::vector<BigRational> kappas;
  for (int k = b.kappa_min; k <= b.kappa_max; ++k) kappas.emplace_back(k);
  kappas.emplace_back(BigRational(2 * b.kappa_min + 1, 2));
  std::vector<Case> cases;
  for (int n = std::max(1, b.n_min); n <= b.n_max; ++n) {
    for (const auto& lam : partitions_up_to(b.deg_max, n)) {
      for (int k = 1; k <= n; ++k) cases.push_back({0, n, k, 0, 0, BigRational(k), lam});
      for (int m = 1; m <= n; ++m) {
        for (const auto& kap : kappas) {
          for (int shift : {0, -1}) cases.push_back({1, n, m, 0, shift, kap, lam});
        }
      }
      for (int m = 1; m <= n; ++m) {
        for (int l = m + 1; l <= n; ++l) {
          for (const auto& kap : kappas) cases.push_back({2, n, m, l, 0, kap, lam});
        }
      }
    }
  }
  return parallel_map(cases.size(), b.jobs, [&](std::size_t i) {
    const Case& c = cases[i];
    const std::string nk = "N=" + std::to_string(c.n);
    if (c.kind == 0) {
      return run_case("jack-f-family", nk + " k=" + std::to_string(c.m) + " lambda=" + c.lambda.to_string() +
                                           " action-vs-tilde",
                      false, [&] {
                        const ExtendedPartition beta(c.lambda, BigRational(0), c.n);
                        return tilde_b_plus_alpha(jack_P(c.lambda, c.n), c.m) -
                               from_jack_P_basis(f_alpha_action(beta, c.m, c.kappa), c.n);
                      });
    }
    if (c.kind == 1) {
      const ExtendedPartition beta(c.lambda, BigRational(c.shift), c.n);
      return run_case("jack-f-family", nk + " m=" + std::to_string(c.m) + " kappa=" + kappa_text(c.kappa) +
                                           " beta=" + beta.to_string() + " realization-vs-action",
                      false, [&] {
                        const SymFunc p = jack_P(c.lambda, c.n).times_en(c.shift);
                        return jack_f_realized(p, c.m, c.kappa) -
                               from_jack_P_basis(f_alpha_action(beta, c.m, c.kappa), c.n);
                      });
    }
    return run_case("jack-f-family", nk + " m=" + std::to_string(c.m) + " n=" + std::to_string(c.l) +
                                         " kappa=" + kappa_text(c.kappa) + " lambda=" + c.lambda.to_string() +
                                         " commutator",
                    false, [&] {
                      const SymFunc j = rodrigues_jack(c.lambda, c.n);
                      return jack_f_realized(jack_f_realized(j, c.l, c.kappa), c.m, c.kappa) -
                             jack_f_realized(jack_f_realized(j, c.m, c.kappa), c.l, c.kappa);
                    });
  });
}

std::vector<VerificationReport> chains_sweep(const SweepBounds& b) {
  std::vector<std::pair<int, Partition>> cases;
  for (int n = std::max(1, b.n_min); n <= b.n_max; ++n) {
    for (const auto& lam : partitions_up_to(b.deg_max, n)) cases.emplace_back(n, lam);
  }
  return parallel_map(cases.size(), b.jobs, [&](std::size_t i) {
    const auto& [n, lam] = cases[i];
    return run_case("jack-chains", "N=" + std::to_string(n) + " lambda=" + lam.to_string(), true,
                    [&] { return rodrigues_jack_b(lam, n) - rodrigues_jack(lam, n); });
  });
}

std::vector<VerificationReport> eigen_sweep(const SweepBounds& b) {
  struct Case {
    int n, l, omega;
    Partition lambda;
  };
  std::vector<Case> cases;
  for (int n = std::max(1, b.n_min); n <= b.n_max; ++n) {
    for (int l = 1; l <= std::min(n, 3); ++l) {
      for (const auto& lam : partitions_up_to(std::min(b.deg_max, 4), l)) {
        for (int omega = 0; omega <= 2; ++omega) cases.push_back({n, l, omega, lam});
      }
    }
  }
  return parallel_map(cases.size(), b.jobs, [&](std::size_t i) {
    const Case& c = cases[i];
    const std::string key = "N=" + std::to_string(c.n) + " J={1.." + std::to_string(c.l) +
                            "} omega=" + std::to_string(c.omega) + " lambda=" + c.lambda.to_string();
    return run_case("jack-eigen", key, true, [&] {
      const MPoly f = embed(to_x(rodrigues_jack(c.lambda, c.l)), c.n);
      DunklProductSpec spec{{}, RatFunc(static_cast<long>(c.omega), Field::alpha)};
      for (int j = 1; j <= c.l; ++j) spec.indices.push_back(j);
      RatFunc ev = RatFunc::one(Field::alpha);
      for (int j = 1; j <= c.l; ++j) {
        ev *= RatFunc::alpha() * a_const(BigRational(c.lambda.part(j))) +
              a_const(BigRational(c.omega + c.l - j));
      }
      return d_product(f, spec, (1u << c.l) - 1) - f * ev;
    });
  });
}

std::vector<VerificationReport> bridge_sweep(const SweepBounds& b, const std::vector<int>& alphas) {
  struct Case {
    int n, a;
    Partition lambda;
  };
  std::vector<Case> cases;
  for (int a : alphas) {
    for (int n = std::max(1, b.n_min); n <= b.n_max; ++n) {
      for (const auto& lam : partitions_up_to(b.deg_max, n)) cases.push_back({n, a, lam});
    }
  }
  return parallel_map(cases.size(), b.jobs,
                      [&](std::size_t i) { return limit_bridge_report(cases[i].lambda, cases[i].n, cases[i].a); });
}

}  // namespace

MPoly dunkl(const MPoly& f, int i, std::uint32_t scope) {
  if (f.field() != Field::alpha) throw FieldMismatch("Dunkl operators act over Q(alpha)");
  const int n = f.n_vars();
  if (i < 1 || i > n) throw std::out_of_range("Dunkl index outside 1..N");
  MPoly r = euler(f, i) * RatFunc::alpha();
  Monomial xi;
  xi[i - 1] = 1;
  for (int j = 1; j <= n; ++j) {
    if (j == i) continue;
    if (scope != 0 && !(scope & (1u << (j - 1)))) continue;
    r += divided_difference(f, i, j).times_monomial(xi);
  }
  return r;
}

MPoly d_product(const MPoly& f, const DunklProductSpec& spec, std::uint32_t scope) {
  for (std::size_t p = 1; p < spec.indices.size(); ++p) {
    if (spec.indices[p] <= spec.indices[p - 1]) throw std::invalid_argument("Dunkl product indices must increase");
  }
  MPoly g = f;
  for (std::size_t p = spec.indices.size(); p-- > 0;) {
    g = dunkl(g, spec.indices[p], scope) + g * (spec.omega + a_const(BigRational(static_cast<long>(p))));
  }
  return g;
}

SymFunc tilde_b_plus_alpha(const SymFunc& f, int k) {
  require_alpha(f);
  if (k < 1 || k > f.n_vars()) throw std::out_of_range("need 1 <= k <= N");
  return symmetric_result(subset_dunkl_sum(to_x(f), k, RatFunc::one(Field::alpha)));
}

SymFunc jack_f_realized(const SymFunc& f, int m, const BigRational& kappa) {
  require_alpha(f);
  if (m < 1 || m > f.n_vars()) throw std::out_of_range("need 1 <= m <= N");
  return symmetric_result(subset_dunkl_sum(to_x(f), m, a_const(kappa - m + 1)));
}

SymFunc b_plus_alpha(const SymFunc& f, int k) {
  require_alpha(f);
  const int n = f.n_vars();
  if (k < 1 || k > n) throw std::out_of_range("need 1 <= k <= N");
  RatFunc scale = RatFunc::one(Field::alpha);
  for (int j = k + 1; j <= n; ++j) scale /= a_const(BigRational(k + 1 - j)) - RatFunc::alpha();
  DunklProductSpec spec{mask_indices((1u << n) - 1, n), a_const(BigRational(k + 1 - n)) - RatFunc::alpha()};
  const MPoly g = d_product(to_x(multiply(e_k(n, k, Field::alpha), f)), spec);
  return symmetric_result(g) * scale;
}

SymFunc rodrigues_jack(const Partition& lambda, int n_vars) {
  return memo_jack_chain(0, lambda, n_vars, [](const SymFunc& f, int k) { return tilde_b_plus_alpha(f, k); });
}

SymFunc rodrigues_jack_b(const Partition& lambda, int n_vars) {
  return memo_jack_chain(1, lambda, n_vars, [](const SymFunc& f, int k) { return b_plus_alpha(f, k); });
}

SymFunc jack_P(const Partition& lambda, int n_vars) {
  return rodrigues_jack(lambda, n_vars) / c_lambda_alpha(lambda);
}

JackBasisElement jack_element(const Partition& lambda, int n_vars, BasisKind kind) {
  if (kind == BasisKind::macdonald_J) return {lambda, kind, rodrigues_jack(lambda, n_vars)};
  if (kind == BasisKind::macdonald_P) return {lambda, kind, jack_P(lambda, n_vars)};
  throw std::invalid_argument("Jack basis elements are of kind P or J");
}

PExpansion to_jack_P_basis(const SymFunc& f) {
  require_alpha(f);
  if (f.en_power() != 0) throw std::invalid_argument("to_jack_P_basis: polynomial input required");
  PExpansion out;
  SymFunc rest = f;
  while (!rest.is_zero()) {
    const Partition* top = nullptr;
    for (const auto& [lam, c] : rest.coeffs()) {
      if (top == nullptr || label_less(*top, lam)) top = &lam;
    }
    const Partition mu = *top;
    const RatFunc c = rest.coefficient(mu);
    rest -= jack_P(mu, f.n_vars()) * c;
    out.emplace_back(mu, c);
  }
  return out;
}

SymFunc from_jack_P_basis(const LaurentPExpansion& terms, int n_vars) {
  SymFunc f(n_vars, Field::alpha);
  for (const auto& [delta, c] : terms) {
    if (!delta.is_integral()) throw std::invalid_argument("from_jack_P_basis: non-integral label");
    f += (jack_P(delta.shape(), n_vars) * c).times_en(delta.last_int());
  }
  return f;
}

PExpansion pieri_alpha(const Partition& lambda, int k, int n_vars) {
  if (lambda.length() > n_vars) throw std::invalid_argument("pieri_alpha: too many parts");
  PExpansion out;
  if (k > n_vars) return out;
  for (const auto& mu : vertical_strips(lambda, k, n_vars)) out.emplace_back(mu, psi(mu, lambda, Field::alpha));
  return out;
}

LaurentPExpansion f_alpha_action(const ExtendedPartition& beta, int m, const BigRational& kappa) {
  const BigRational& bn = beta.last();
  const Partition base = beta.shape_relative_to(bn);
  LaurentPExpansion out;
  for (const auto& delta : vertical_strips(beta, m)) {
    const Partition top = delta.shape_relative_to(bn);
    RatFunc c = psi(top, base, Field::alpha);
    for (int i = 1; i <= top.length(); ++i) {
      for (int j = base.part(i) + 1; j <= top.part(i); ++j) {
        const Cell s{i, j};
        c *= RatFunc::alpha() * a_const(bn + coarm(top, s)) + a_const(kappa - coleg(top, s));
      }
    }
    if (!c.is_zero()) out.emplace_back(delta, c);
  }
  return out;
}

VerificationReport limit_bridge_report(const Partition& lambda, int n_vars, int a) {
  const std::string key = "alpha=" + std::to_string(a) + " N=" + std::to_string(n_vars) + " lambda=" + lambda.to_string();
  return run_case("jack-bridge", key, true, [&] {
    if (a < 1) throw std::invalid_argument("bridge needs a positive integer alpha");
    const SymFunc jq = rodrigues(lambda, n_vars);
    const SymFunc ja = rodrigues_jack(lambda, n_vars);
    const RatFunc scale = (RatFunc::one(Field::t) - RatFunc::t(1, Field::t)).pow(-lambda.weight());
    SymFunc diff(n_vars, Field::alpha);
    for (const auto& lam : partitions_of(lambda.weight(), n_vars)) {
      const BigRational lhs = eval_cancel(substitute_q_power(jq.coefficient(lam), a) * scale, BigRational(1));
      const BigRational rhs = eval_alpha(ja.coefficient(lam), BigRational(a));
      if (lhs != rhs) diff.add_term(lam, RatFunc(BigRational(lhs - rhs), Field::alpha));
    }
    return diff;
  });
}

bool limit_bridge(const Partition& lambda, int n_vars, int a) {
  return limit_bridge_report(lambda, n_vars, a).status == Status::verified;
}

std::vector<std::string> jack_sweep_names() { return {"jack-f-family", "jack-chains", "jack-eigen", "jack-bridge"}; }

std::vector<VerificationReport> jack_sweep(const std::string& which, const SweepBounds& bounds,
                                           const std::vector<int>& bridge_alphas) {
  if (which == "jack-f-family") return f_family_sweep(bounds);
  if (which == "jack-chains") return chains_sweep(bounds);
  if (which == "jack-eigen") return eigen_sweep(bounds);
  if (which == "jack-bridge") return bridge_sweep(bounds, bridge_alphas);
  throw std::invalid_argument("unknown Jack sweep '" + which + "'");
}

}  // namespace macjack
