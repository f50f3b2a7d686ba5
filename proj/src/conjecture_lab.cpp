#include "macjack/conjecture_lab.hpp"

#include <map>
#include <mutex>
#include <random>
#include <stdexcept>
#include <tuple>

#include "macjack/operators.hpp"
#include "macjack/parallel.hpp"

namespace macjack {

namespace {

std::uint32_t full_mask(int n) { return (1u << n) - 1; }

std::string subset_text(std::uint32_t mask, int n) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < n; ++i) {
    if (!(mask & (1u << i))) continue;
    if (!first) s += ",";
    s += std::to_string(i + 1);
    first = false;
  }
  return s + "}";
}

DifferenceOperator build_subset_operator(const SubsetOperatorSpec& spec) {
  const int n = spec.n_vars, k = spec.k;
  std::vector<OperatorTerm> terms;
  for (std::uint32_t subset : subsets_of_size(n, k)) {
    const std::uint32_t comp = full_mask(n) & ~subset;
    Monomial xi;
    std::vector<PairFactor> pairs;
    for (int i = 0; i < n; ++i) {
      if (!(subset & (1u << i))) continue;
      xi[i] = 1;
      for (int j = 0; j < n; ++j) {
        if (!(comp & (1u << j))) continue;
        if (spec.kind == SubsetOperatorKind::bar) {
          pairs.push_back({i, j, RatFunc::one(Field::qt), RatFunc::t()});
        } else {
          pairs.push_back({i, j, RatFunc::t(), RatFunc::one(Field::qt)});
        }
      }
    }
    if (spec.kind == SubsetOperatorKind::bar) {
      append_subset_M_terms(terms, subset, -RatFunc::t(), RatFunc::one(Field::qt), pairs, xi, comp);
    } else {
      const int kappa = spec.kind == SubsetOperatorKind::tilde ? k : spec.kappa;
      const RatFunc X = -RatFunc::t(kappa - k + 1);
      append_subset_M_terms(terms, subset, X, RatFunc::t(-(n - k) * k), pairs, xi, 0);
    }
  }
  return DifferenceOperator(n, terms);
}

const char* kind_tag(SubsetOperatorKind k) {
  switch (k) {
    case SubsetOperatorKind::tilde: return "tilde";
    case SubsetOperatorKind::bar: return "bar";
    case SubsetOperatorKind::f_realized: return "F";
  }
  return "?";
}

SymFunc memo_chain(SubsetOperatorKind kind, const Partition& lambda, int n) {
  if (lambda.length() > n) throw std::invalid_argument("chain: partition has too many parts");
  if (lambda.empty()) return SymFunc::one(n);
  static std::mutex mu;
  static std::map<std::tuple<int, Partition, int>, SymFunc> cache;
  const auto key = std::make_tuple(static_cast<int>(kind), lambda, n);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const int k = lambda.length();
  SymFunc f = apply_subset_operator(memo_chain(kind, lambda.minus_column(k), n), {kind, k, k, n});
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(f)).first->second;
}

// Heights of the columns of lambda, i.e. the k used by the chain.
std::vector<int> column_heights(const Partition& lambda) {
  std::vector<int> out;
  for (int k = 1; k <= lambda.length(); ++k) {
    if (lambda.part(k) > lambda.part(k + 1)) out.push_back(k);
  }
  return out;
}

std::string nl_key(int n, const Partition& lambda) {
  return "N=" + std::to_string(n) + " lambda=" + lambda.to_string();
}

std::vector<std::pair<int, Partition>> cases_by_n(const SweepBounds& b, int max_deg) {
  std::vector<std::pair<int, Partition>> out;
  for (int n = std::max(1, b.n_min); n <= b.n_max; ++n) {
    for (const auto& lam : partitions_up_to(max_deg, n)) out.emplace_back(n, lam);
  }
  return out;
}

RatFunc random_laurent(std::mt19937_64& rng, int terms, int span) {
  std::uniform_int_distribution<int> coef(-3, 3), ex(-span, span);
  RatFunc c = RatFunc::zero(Field::qt);
  for (int i = 0; i < terms; ++i) {
    c += RatFunc(static_cast<long>(coef(rng))) * RatFunc::q(ex(rng)) * RatFunc::t(ex(rng));
  }
  return c;
}

std::vector<VerificationReport> chain_sweep(const std::string& name, SubsetOperatorKind kind,
                                            const SweepBounds& b) {
  const auto cases = cases_by_n(b, b.deg_max);
  return parallel_map(cases.size(), b.jobs, [&](std::size_t i) {
    const auto& [n, lam] = cases[i];
    bool proven = true;
    for (int k : column_heights(lam)) {
      if (kind == SubsetOperatorKind::tilde ? k < n - 1 : k < n) proven = false;
    }
    return run_case(name, nl_key(n, lam), proven,
                    [&] { return memo_chain(kind, lam, n) - rodrigues(lam, n); });
  });
}

std::vector<VerificationReport> integrality_sweep(const SweepBounds& b) {
  const auto cases = cases_by_n(b, b.deg_max);
  return parallel_map(cases.size(), b.jobs, [&](std::size_t i) {
    const auto& [n, lam] = cases[i];
    return run_case("integrality", nl_key(n, lam), false, [&] {
      SymFunc bad(n, Field::qt);
      const SymFunc chain = memo_chain(SubsetOperatorKind::bar, lam, n);
      for (const auto& [mu, c] : chain.coeffs()) {
        if (!c.is_integral_polynomial()) bad.add_term(mu, c);
      }
      return bad;
    });
  });
}

std::vector<VerificationReport> tilde_as_f_sweep(const SweepBounds& b) {
  struct Case {
    int n, m, kappa, shift;
    Partition lambda;
    bool action_vs_tilde;
  };
  std::vector<Case> cases;
  for (const auto& [n, lam] : cases_by_n(b, b.deg_max)) {
    for (int k = 1; k <= n; ++k) cases.push_back({n, k, k, 0, lam, true});
    for (int m = 1; m <= n; ++m) {
      for (int kappa = b.kappa_min; kappa <= b.kappa_max; ++kappa) {
        for (int shift : {0, -1}) cases.push_back({n, m, kappa, shift, lam, false});
      }
    }
  }
  return parallel_map(cases.size(), b.jobs, [&](std::size_t i) {
    const Case& c = cases[i];
    const ExtendedPartition beta(c.lambda, BigRational(c.shift), c.n);
    if (c.action_vs_tilde) {
      const std::string key = "N=" + std::to_string(c.n) + " k=" + std::to_string(c.m) +
                              " lambda=" + c.lambda.to_string() + " action-vs-tilde";
      return run_case("tilde-as-f", key, false, [&] {
        const SymFunc lhs = tilde_b_plus(macdonald_P(c.lambda, c.n), c.m);
        return lhs - from_P_basis(f_action(beta, c.m, c.m), c.n);
      });
    }
    const std::string key = "N=" + std::to_string(c.n) + " m=" + std::to_string(c.m) +
                            " kappa=" + std::to_string(c.kappa) + " beta=" + beta.to_string() +
                            " realization-vs-action";
    return run_case("tilde-as-f", key, false, [&] {
      const SymFunc p = macdonald_P(c.lambda, c.n).times_en(c.shift);
      return f_realized(p, c.m, c.kappa) - from_P_basis(f_action(beta, c.m, c.kappa), c.n);
    });
  });
}

std::vector<VerificationReport> commuting_sweep(const SweepBounds& b) {
  struct Case {
    int n, m, l, kappa;
    Partition lambda;
  };
  std::vector<Case> cases;
  for (const auto& [n, lam] : cases_by_n(b, b.deg_max)) {
    for (int m = 1; m <= n; ++m) {
      for (int l = m + 1; l <= n; ++l) {
        for (int kappa = b.kappa_min; kappa <= b.kappa_max; ++kappa) cases.push_back({n, m, l, kappa, lam});
      }
    }
  }
  return parallel_map(cases.size(), b.jobs, [&](std::size_t i) {
    const Case& c = cases[i];
    const std::string key = "N=" + std::to_string(c.n) + " m=" + std::to_string(c.m) + " n=" +
                            std::to_string(c.l) + " kappa=" + std::to_string(c.kappa) +
                            " lambda=" + c.lambda.to_string();
    return run_case("commuting", key, false, [&] {
      const SymFunc j = rodrigues(c.lambda, c.n);
      return f_realized(f_realized(j, c.l, c.kappa), c.m, c.kappa) -
             f_realized(f_realized(j, c.m, c.kappa), c.l, c.kappa);
    });
  });
}

std::vector<VerificationReport> tilde_equals_b_sweep(const SweepBounds& b) {
  struct Case {
    int n, k;
    Partition lambda;
  };
  std::vector<Case> cases;
  for (int k = std::max(1, b.n_min); k <= b.n_max; ++k) {
    for (const auto& lam : partitions_up_to(b.deg_max, k)) cases.push_back({k, k, lam});
  }
  for (int k = std::max(1, b.n_min); k <= std::min(b.n_max, 3); ++k) {
    for (const auto& lam : partitions_up_to(std::max(0, b.deg_max + 1 - k), k)) cases.push_back({k + 1, k, lam});
  }
  return parallel_map(cases.size(), b.jobs, [&](std::size_t i) {
    const Case& c = cases[i];
    const std::string key = "N=" + std::to_string(c.n) + " k=" + std::to_string(c.k) +
                            " lambda=" + c.lambda.to_string();
    return run_case("tilde-equals-b", key, true, [&] {
      const SymFunc j = rodrigues(c.lambda, c.n);
      const SymFunc lhs = tilde_b_plus(j, c.k);
      SymFunc diff = lhs - b_plus(j, c.k);
      if (c.n == c.k + 1) diff += lhs - rodrigues(c.lambda.plus_column(c.k), c.n);
      return diff;
    });
  });
}

std::vector<VerificationReport> en_commutation_sweep(const SweepBounds& b) {
  const int trials = std::max(0, b.trials);
  return parallel_map(static_cast<std::size_t>(2 * trials), b.jobs, [&](std::size_t i) {
    std::mt19937_64 rng(b.seed + i);
    const bool general_power = i >= static_cast<std::size_t>(trials);
    std::uniform_int_distribution<int> nd(std::max(1, b.n_min), std::max(1, b.n_max));
    const int n = nd(rng);
    std::uniform_int_distribution<std::uint32_t> sd(1, full_mask(n));
    const std::uint32_t subset = sd(rng);
    std::uniform_int_distribution<int> rd(-2, 2);
    const int rho = general_power ? rd(rng) : 1;
    const RatFunc X = random_laurent(rng, 2, 2);
    const SymFunc f = random_symfunc(n, 3, rng());
    const std::string key = "trial=" + std::to_string(general_power ? i - trials : i) + " N=" + std::to_string(n) +
                            " I=" + subset_text(subset, n) + " rho=" + std::to_string(rho);
    return run_case(general_power ? "en-power-commutation" : "en-commutation", key, true, [&] {
      Monomial shift;
      for (int v = 0; v < n; ++v) shift[v] = static_cast<std::int16_t>(rho);
      const MPoly fx = to_x(f);
      const MPoly lhs = apply_M_subset(fx.times_monomial(shift), subset, X);
      const MPoly rhs = apply_M_subset(fx, subset, X * RatFunc::q(rho)).times_monomial(shift);
      return lhs - rhs;
    });
  });
}

std::vector<VerificationReport> garsia_tesler_sweep(const SweepBounds& b) {
  std::vector<std::pair<int, int>> cases;
  for (int n = std::max(1, b.n_min); n <= b.n_max; ++n) {
    for (int k = 1; k <= n; ++k) cases.emplace_back(n, k);
  }
  return parallel_map(cases.size(), b.jobs,
                      [&](std::size_t i) { return garsia_tesler_check(cases[i].first, cases[i].second); });
}

std::vector<VerificationReport> eigen_sweep(const SweepBounds& b) {
  struct Case {
    int n, r, l;  // l < 0: eigen relation for M^r, else the commutator [M^r, M^l]
    Partition lambda;
  };
  std::vector<Case> cases;
  for (const auto& [n, lam] : cases_by_n(b, b.deg_max)) {
    for (int r = 1; r <= n; ++r) cases.push_back({n, r, -1, lam});
    for (int r = 1; r <= n; ++r) {
      for (int l = r + 1; l <= n; ++l) cases.push_back({n, r, l, lam});
    }
  }
  return parallel_map(cases.size(), b.jobs, [&](std::size_t i) {
    const Case& c = cases[i];
    std::string key = nl_key(c.n, c.lambda) + " r=" + std::to_string(c.r);
    if (c.l >= 0) key += " l=" + std::to_string(c.l);
    return run_case("eigen", key, true, [&] {
      const SymFunc j = rodrigues(c.lambda, c.n);
      if (c.l < 0) return apply_M_r(j, c.r) - j * eigenvalue_M_r(c.lambda, c.n, c.r);
      return apply_M_r(apply_M_r(j, c.l), c.r) - apply_M_r(apply_M_r(j, c.r), c.l);
    });
  });
}

std::vector<VerificationReport> pieri_sweep(const SweepBounds& b) {
  struct Case {
    int n, k;
    Partition lambda;
  };
  std::vector<Case> cases;
  for (int n = std::max(1, b.n_min); n <= b.n_max; ++n) {
    for (int k = 1; k <= n; ++k) {
      for (const auto& lam : partitions_up_to(b.deg_max, n)) cases.push_back({n, k, lam});
    }
  }
  return parallel_map(cases.size(), b.jobs, [&](std::size_t i) {
    const Case& c = cases[i];
    const std::string key = nl_key(c.n, c.lambda) + " k=" + std::to_string(c.k);
    return run_case("pieri", key, true, [&] {
      const PExpansion terms = pieri_expand(c.lambda, c.k, c.n);
      LaurentPExpansion as_laurent;
      for (const auto& [mu, coef] : terms) as_laurent.emplace_back(ExtendedPartition(mu, BigRational(0), c.n), coef);
      SymFunc diff = multiply(e_k(c.n, c.k), macdonald_P(c.lambda, c.n)) - from_P_basis(as_laurent, c.n);
      // Short lambda: lambda + (1^k) comes with coefficient 1 and every
      // other target has exactly one cell in row k+1. Offending terms are
      // added to the difference.
      if (c.lambda.length() <= c.k) {
        const Partition top = c.lambda.plus_column(c.k);
        for (const auto& [mu, coef] : terms) {
          if (mu == top ? !coef.is_one() : mu.part(c.k + 1) != 1) diff.add_term(mu, coef);
        }
      }
      return diff;
    });
  });
}

// The adjoint route expands e_N B_k^- P_lambda in degree |lambda| + N - k,
// so it needs P's well beyond the sweep degree; kept as its own suite.
std::vector<VerificationReport> norms_sweep(const SweepBounds& b, bool adjoint) {
  const auto cases = cases_by_n(b, b.deg_max);
  const std::string name = adjoint ? "norms-adjoint" : "norms";
  return parallel_map(cases.size(), b.jobs, [&](std::size_t i) {
    const auto& [n, lam] = cases[i];
    return run_case(name, nl_key(n, lam), true, [&] {
      return (adjoint ? norm_ratio_adjoint(lam, n) : norm_ratio(lam, n)) - norm_closed_form_ratio(lam, n);
    });
  });
}

std::vector<VerificationReport> orthogonality_sweep(const SweepBounds& b) {
  struct Case {
    int n;
    Partition lambda, mu;  // mu empty: triangularity of J_lambda
  };
  std::vector<Case> cases;
  for (int n = std::max(1, b.n_min); n <= b.n_max; ++n) {
    for (int d = 0; d <= b.deg_max; ++d) {
      const auto labels = partitions_of(d, n);
      for (std::size_t x = 0; x < labels.size(); ++x) {
        cases.push_back({n, labels[x], Partition{}});
        if (d > n) continue;
        for (std::size_t y = x + 1; y < labels.size(); ++y) cases.push_back({n, labels[x], labels[y]});
      }
    }
  }
  return parallel_map(cases.size(), b.jobs, [&](std::size_t i) {
    const Case& c = cases[i];
    if (c.mu.empty()) {
      return run_case("orthogonality", nl_key(c.n, c.lambda) + " triangular", true, [&] {
        const SymFunc j = rodrigues(c.lambda, c.n);
        SymFunc bad(c.n, Field::qt);
        for (const auto& [nu, coef] : j.coeffs()) {
          if (!dominance_leq(nu, c.lambda)) bad.add_term(nu, coef);
        }
        bad.add_term(c.lambda, j.coefficient(c.lambda) - c_lambda_qt(c.lambda));
        return bad;
      });
    }
    const std::string key = nl_key(c.n, c.lambda) + " mu=" + c.mu.to_string();
    return run_case("orthogonality", key, true,
                    [&] { return scalar_qt(rodrigues(c.lambda, c.n), rodrigues(c.mu, c.n)); });
  });
}

}  // namespace

SymFunc apply_subset_operator(const SymFunc& f, const SubsetOperatorSpec& spec) {
  if (f.field() != Field::qt) throw FieldMismatch("subset operators act over Q(q,t)");
  if (spec.n_vars != f.n_vars()) throw std::invalid_argument("subset operator built for a different N");
  if (spec.k < 1 || spec.k > spec.n_vars) throw std::out_of_range("subset size must be in 1..N");
  const int kappa = spec.kind == SubsetOperatorKind::f_realized ? spec.kappa : spec.k;
  const std::string key = std::string("subset/") + kind_tag(spec.kind) + "/" + std::to_string(spec.k) + "/" +
                          std::to_string(kappa) + "/" + std::to_string(spec.n_vars);
  return cached_operator(key, [spec] { return build_subset_operator(spec); })->apply(f);
}

SymFunc tilde_b_plus(const SymFunc& f, int k) {
  return apply_subset_operator(f, {SubsetOperatorKind::tilde, k, k, f.n_vars()});
}

SymFunc bar_b_plus(const SymFunc& f, int k) {
  return apply_subset_operator(f, {SubsetOperatorKind::bar, k, k, f.n_vars()});
}

SymFunc f_realized(const SymFunc& f, int m, int kappa) {
  return apply_subset_operator(f, {SubsetOperatorKind::f_realized, m, kappa, f.n_vars()});
}

SymFunc tilde_chain(const Partition& lambda, int n_vars) {
  return memo_chain(SubsetOperatorKind::tilde, lambda, n_vars);
}

SymFunc bar_chain(const Partition& lambda, int n_vars) {
  return memo_chain(SubsetOperatorKind::bar, lambda, n_vars);
}

VerificationReport garsia_tesler_check(int n_vars, int k) {
  const std::string key = "N=" + std::to_string(n_vars) + " k=" + std::to_string(k);
  return run_case("garsia-tesler", key, true, [&] {
    if (k < 1 || k > n_vars) throw std::out_of_range("need 1 <= k <= N");
    std::vector<OperatorTerm> terms;
    for (std::uint32_t subset : subsets_of_size(n_vars, k)) {
      OperatorTerm term;
      term.coeff = RatFunc::one(Field::qt);
      for (int i = 0; i < n_vars; ++i) {
        if (!(subset & (1u << i))) continue;
        term.monomial[i] = 1;
        for (int j = 0; j < n_vars; ++j) {
          if (subset & (1u << j)) continue;
          term.pairs.push_back({i, j, RatFunc::one(Field::qt), RatFunc::t()});
        }
      }
      terms.push_back(std::move(term));
    }
    const DifferenceOperator op(n_vars, terms);
    return op.apply(MPoly::constant(n_vars, RatFunc::one(Field::qt))) - to_x(e_k(n_vars, k));
  });
}

LaurentPExpansion f_action(const ExtendedPartition& beta, int m, int kappa) {
  if (!beta.is_integral()) {
    throw std::domain_error("F action on the (q,t) side needs an integral last entry");
  }
  const int bn = beta.last_int();
  const Partition base = beta.shape_relative_to(beta.last());
  LaurentPExpansion out;
  for (const auto& delta : vertical_strips(beta, m)) {
    const Partition top = delta.shape_relative_to(beta.last());
    RatFunc c = psi(top, base, Field::qt);
    for (int i = 1; i <= top.length(); ++i) {
      for (int j = base.part(i) + 1; j <= top.part(i); ++j) {
        const Cell s{i, j};
        c *= RatFunc::one(Field::qt) - RatFunc::t(kappa - coleg(top, s)) * RatFunc::q(coarm(top, s) + bn);
      }
    }
    if (!c.is_zero()) out.emplace_back(delta, c);
  }
  return out;
}

MPoly apply_M_subset(const MPoly& f, std::uint32_t subset, const RatFunc& X) {
  const int n = f.n_vars();
  const std::string key = "M_I/" + std::to_string(n) + "/" + std::to_string(subset) + "/" + X.to_string();
  return cached_operator(key, [n, subset, X] {
           std::vector<OperatorTerm> terms;
           append_subset_M_terms(terms, subset, X, RatFunc::one(Field::qt), {}, Monomial{}, 0);
           return DifferenceOperator(n, terms);
         })
      ->apply(f);
}

SymFunc random_symfunc(int n_vars, int max_degree, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto labels = partitions_up_to(max_degree, n_vars);
  std::uniform_int_distribution<std::size_t> pick(0, labels.size() - 1);
  std::uniform_int_distribution<int> count(1, 3), coef(-3, 3), ex(0, 2);
  SymFunc f(n_vars, Field::qt);
  const int terms = count(rng);
  for (int i = 0; i < terms; ++i) {
    RatFunc c = RatFunc::zero(Field::qt);
    for (int r = 0; r < 2; ++r) c += RatFunc(static_cast<long>(coef(rng))) * RatFunc::q(ex(rng)) * RatFunc::t(ex(rng));
    f.add_term(labels[pick(rng)], c);
  }
  if (f.is_zero()) f.add_term(labels[pick(rng)], RatFunc::one(Field::qt));
  return f;
}

std::vector<std::string> sweep_names() {
  return {"tilde-chain",    "bar-chain",     "integrality", "tilde-as-f",  "commuting", "tilde-equals-b",
          "en-commutation", "garsia-tesler", "eigen",       "pieri",       "norms",     "norms-adjoint",
          "orthogonality"};
}

std::vector<VerificationReport> conjecture_sweep(const std::string& which, const SweepBounds& bounds) {
  if (which == "tilde-chain") return chain_sweep(which, SubsetOperatorKind::tilde, bounds);
  if (which == "bar-chain") return chain_sweep(which, SubsetOperatorKind::bar, bounds);
  if (which == "integrality") return integrality_sweep(bounds);
  if (which == "tilde-as-f") return tilde_as_f_sweep(bounds);
  if (which == "commuting") return commuting_sweep(bounds);
  if (which == "tilde-equals-b") return tilde_equals_b_sweep(bounds);
  if (which == "en-commutation") return en_commutation_sweep(bounds);
  if (which == "garsia-tesler") return garsia_tesler_sweep(bounds);
  if (which == "eigen") return eigen_sweep(bounds);
  if (which == "pieri") return pieri_sweep(bounds);
  if (which == "norms") return norms_sweep(bounds, false);
  if (which == "norms-adjoint") return norms_sweep(bounds, true);
  if (which == "orthogonality") return orthogonality_sweep(bounds);
  throw std::invalid_argument("unknown sweep '" + which + "'");
}

std::vector<VerificationReport> worked_example_check(const SweepBounds& bounds) {
  std::vector<VerificationReport> out;
  const ExtendedPartition beta = ExtendedPartition::from_integers({1, 1, -1, -1});
  const Partition base{2, 2};
  for (int kappa = bounds.kappa_min; kappa <= bounds.kappa_max; ++kappa) {
    const std::string key = "N=4 m=2 kappa=" + std::to_string(kappa) + " beta=" + beta.to_string();
    auto factor = [&](int dt, int dq) { return RatFunc::one(Field::qt) - RatFunc::t(kappa + dt) * RatFunc::q(dq); };
    LaurentPExpansion expected = {
        {ExtendedPartition::from_integers({2, 2, -1, -1}),
         psi(Partition{3, 3}, base, Field::qt) * factor(0, 1) * factor(-1, 1)},
        {ExtendedPartition::from_integers({2, 1, 0, -1}),
         psi(Partition{3, 2, 1}, base, Field::qt) * factor(0, 1) * factor(-2, -1)},
        {ExtendedPartition::from_integers({1, 1, 0, 0}),
         psi(Partition{2, 2, 1, 1}, base, Field::qt) * factor(-2, -1) * factor(-3, -1)},
    };
    out.push_back(run_case("worked-example", key + " action", true, [&] {
      // Labels delta >= -1 become partitions delta + 1, so the two
      // coefficient lists can be subtracted as monomial-basis vectors.
      auto encode = [](const LaurentPExpansion& terms) {
        SymFunc f(4, Field::qt);
        for (const auto& [delta, c] : terms) f.add_term(delta.shape_relative_to(BigRational(-1)), c);
        return f;
      };
      return encode(f_action(beta, 2, kappa)) - encode(expected);
    }));
    out.push_back(run_case("worked-example", key + " realization", false, [&] {
      const SymFunc p = macdonald_P(beta.shape(), 4).times_en(beta.last_int());
      return f_realized(p, 2, kappa) - from_P_basis(expected, 4);
    }));
  }
  return out;
}

}  // namespace macjack
