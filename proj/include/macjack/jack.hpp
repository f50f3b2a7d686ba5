// The alpha side: Dunkl operators, Jack polynomials from two operator
// chains, alpha-Pieri coefficients, the F^(alpha) family, and the exact
// q = t^a, t -> 1 bridge from the Macdonald side.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "macjack/conjecture_lab.hpp"
#include "macjack/partitions.hpp"
#include "macjack/polyring.hpp"
#include "macjack/report.hpp"
#include "macjack/symmetric.hpp"

namespace macjack {

struct JackBasisElement {
  Partition label;
  BasisKind kind = BasisKind::macdonald_J;
  SymFunc value;
};

/// D_{J,omega} = (D_{j1}+omega)(D_{j2}+omega+1)...(D_{jl}+omega+l-1),
/// 1-indexed strictly increasing J.
struct DunklProductSpec {
  std::vector<int> indices;
  RatFunc omega;
};

/// D_i f = alpha x_i d_i f + sum_{j != i} x_i (f - K_ij f)/(x_i - x_j).
/// When scope is nonzero, j only runs over the 0-indexed bits of scope
/// (the Dunkl operator of those variables alone).
MPoly dunkl(const MPoly& f, int i, std::uint32_t scope = 0);
MPoly d_product(const MPoly& f, const DunklProductSpec& spec, std::uint32_t scope = 0);

/// sum_{|J|=k} x_J D_{J,1} f.
SymFunc tilde_b_plus_alpha(const SymFunc& f, int k);
/// prod_{j=k+1}^N (-alpha+k+1-j)^{-1} D_{{1..N}, k+1-N-alpha} e_k f.
SymFunc b_plus_alpha(const SymFunc& f, int k);
/// sum_{|J|=m} x_J D_{J,kappa-m+1} f.
SymFunc jack_f_realized(const SymFunc& f, int m, const BigRational& kappa);

/// J_lambda(x; alpha) from the tilde_b_plus_alpha chain. Memoized.
SymFunc rodrigues_jack(const Partition& lambda, int n_vars);
/// The same polynomial from the b_plus_alpha chain. Memoized.
SymFunc rodrigues_jack_b(const Partition& lambda, int n_vars);
SymFunc jack_P(const Partition& lambda, int n_vars);
JackBasisElement jack_element(const Partition& lambda, int n_vars, BasisKind kind);

PExpansion to_jack_P_basis(const SymFunc& f);
SymFunc from_jack_P_basis(const LaurentPExpansion& terms, int n_vars);

/// e_k P_lambda = sum Psi^(alpha)_{mu/lambda} P_mu.
PExpansion pieri_alpha(const Partition& lambda, int k, int n_vars);

/// Finite action of F^(alpha)_{m,kappa} on P_beta; beta_N may be rational.
LaurentPExpansion f_alpha_action(const ExtendedPartition& beta, int m, const BigRational& kappa);

/// Compares (J_lambda(q,t) at q = t^a) / (1-t)^{|lambda|} at t = 1 with
/// J_lambda(alpha) at alpha = a, coefficient by coefficient.
bool limit_bridge(const Partition& lambda, int n_vars, int a);
VerificationReport limit_bridge_report(const Partition& lambda, int n_vars, int a);

/// Suites: "jack-f-family", "jack-chains", "jack-eigen", "jack-bridge".
/// bridge_alphas is used by "jack-bridge" only.
std::vector<VerificationReport> jack_sweep(const std::string& which, const SweepBounds& bounds,
                                           const std::vector<int>& bridge_alphas = {1, 2, 3});
std::vector<std::string> jack_sweep_names();

}  // namespace macjack
