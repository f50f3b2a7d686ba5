// Macdonald operators, the column-adding creation operators, the integral
// forms J_lambda they generate, P-basis expansion, Pieri coefficients and
// norm ratios.
#pragma once

#include <utility>
#include <vector>

#include "macjack/partitions.hpp"
#include "macjack/symmetric.hpp"

namespace macjack {

struct MacdonaldBasisElement {
  Partition label;
  BasisKind kind = BasisKind::macdonald_J;
  SymFunc value;
};

struct NormRecord {
  Partition label;
  RatFunc ratio_to_empty;  // (P_lambda, P_lambda) / (P_0, P_0)
};

using PExpansion = std::vector<std::pair<Partition, RatFunc>>;
using LaurentPExpansion = std::vector<std::pair<ExtendedPartition, RatFunc>>;

/// M_N^r f; 0 <= r <= N, throws std::out_of_range otherwise.
SymFunc apply_M_r(const SymFunc& f, int r);
/// M_N(X) f = sum_r X^r M_N^r f.
SymFunc apply_M_X(const SymFunc& f, const RatFunc& X);
/// prod_i (1 + X q^{lambda_i} t^{N-i}).
RatFunc eigenvalue_M_X(const Partition& lambda, int n_vars, const RatFunc& X);
/// e_r(q^{lambda_i} t^{N-i}), the coefficient of X^r above.
RatFunc eigenvalue_M_r(const Partition& lambda, int n_vars, int r);

/// B_k^+ f = M_N(-t^{k+1-N}/q) e_k f / (1/q; 1/t)_{N-k}.
SymFunc b_plus(const SymFunc& f, int k);
/// B_k^- f = e_N^{-1} e_{N-k} M_N(-t^{k+1-N}/q) f / (1/q; 1/t)_{N-k}.
SymFunc b_minus(const SymFunc& f, int k);

/// J_lambda in N variables built by the column-by-column operator chain.
/// Memoized; thread-safe.
SymFunc rodrigues(const Partition& lambda, int n_vars);
/// P_lambda = J_lambda / c_lambda.
SymFunc macdonald_P(const Partition& lambda, int n_vars);
MacdonaldBasisElement macdonald_element(const Partition& lambda, int n_vars, BasisKind kind);

/// (op_N)^{lambda_N} ... (op_1)^{lambda_1 - lambda_2} 1, rightmost factor
/// first; op(f, k) adds one column of height k.
template <class Op>
SymFunc column_chain(const Partition& lambda, int n_vars, Field field, Op op) {
  SymFunc f = SymFunc::one(n_vars, field);
  for (int k = 1; k <= n_vars; ++k) {
    const int times = lambda.part(k) - lambda.part(k + 1);
    for (int s = 0; s < times; ++s) f = op(f, k);
  }
  return f;
}

/// Expansion of a polynomial symmetric function in the P-basis, labels in
/// decreasing (weight, lexicographic) order.
PExpansion to_P_basis(const SymFunc& f);
/// Same for Laurent input: P_beta = e_N^{beta_N} P_{beta - beta_N}.
LaurentPExpansion to_P_basis_laurent(const SymFunc& f);
/// sum c P_delta; integral labels only.
SymFunc from_P_basis(const LaurentPExpansion& terms, int n_vars);

/// e_k P_lambda = sum Psi_{mu/lambda} P_mu over vertical k-strips mu of
/// length <= N.
PExpansion pieri_expand(const Partition& lambda, int k, int n_vars);

/// (P_lambda,P_lambda)/(P_0,P_0) by iterating the Pieri recursion along the
/// column chain.
RatFunc norm_ratio(const Partition& lambda, int n_vars);
/// Same ratio from the arm/leg product formula.
RatFunc norm_closed_form_ratio(const Partition& lambda, int n_vars);
/// Same ratio with every step read off from an actual B_k^- application.
RatFunc norm_ratio_adjoint(const Partition& lambda, int n_vars);
NormRecord norm_record(const Partition& lambda, int n_vars);

}  // namespace macjack
