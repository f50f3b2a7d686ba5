// Subset-sum creation operators (tilde and bar forms), the F_{m,kappa}
// family in both its P-basis action and its operator realization, the
// proven identities around them, and sweeps that test each claim exactly.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "macjack/macdonald.hpp"
#include "macjack/partitions.hpp"
#include "macjack/report.hpp"
#include "macjack/symmetric.hpp"

namespace macjack {

enum class SubsetOperatorKind { tilde, bar, f_realized };

struct SubsetOperatorSpec {
  SubsetOperatorKind kind = SubsetOperatorKind::tilde;
  int k = 1;      // subset size (m for the F family)
  int kappa = 0;  // used by f_realized only
  int n_vars = 1;
};

SymFunc apply_subset_operator(const SymFunc& f, const SubsetOperatorSpec& spec);

/// sum_I t^{-(N-k)k} prod_{i in I, j notin I} (t x_i - x_j)/(x_i - x_j) x_I M_I(-t).
SymFunc tilde_b_plus(const SymFunc& f, int k);
/// sum_I prod (x_i - t x_j)/(x_i - x_j) prod_{j notin I} T_{q,x_j} x_I M_I(-t).
SymFunc bar_b_plus(const SymFunc& f, int k);
/// The tilde form with M_I(-t^{kappa-m+1}).
SymFunc f_realized(const SymFunc& f, int m, int kappa);

/// sum_I prod (x_i - t x_j)/(x_i - x_j) x_I == e_k, checked exactly.
VerificationReport garsia_tesler_check(int n_vars, int k);

/// F_{m,kappa} P_beta = sum_delta Psi_{delta/beta} F_{delta/beta}(kappa) P_delta.
/// beta must have an integral last entry (std::domain_error otherwise).
LaurentPExpansion f_action(const ExtendedPartition& beta, int m, int kappa);

/// M_I(X) in N variables acting on a polynomial that is symmetric in x_I.
MPoly apply_M_subset(const MPoly& f, std::uint32_t subset, const RatFunc& X);

/// Column chain built from tilde_b_plus / bar_b_plus, memoized.
SymFunc tilde_chain(const Partition& lambda, int n_vars);
SymFunc bar_chain(const Partition& lambda, int n_vars);

struct SweepBounds {
  int n_min = 1;
  int n_max = 3;
  int deg_max = 5;
  int kappa_min = 0;
  int kappa_max = 4;
  int trials = 20;
  std::uint64_t seed = 20240601;
  int jobs = 1;
};

/// Suite names accepted by conjecture_sweep.
std::vector<std::string> sweep_names();

/// Runs one suite. Conjectural: "tilde-chain", "bar-chain", "integrality",
/// "tilde-as-f", "commuting". Proven (failures are bugs): "tilde-equals-b",
/// "en-commutation", "garsia-tesler", "eigen", "pieri", "norms",
/// "norms-adjoint", "orthogonality". Orthogonality pairs are only formed for degree <= N.
std::vector<VerificationReport> conjecture_sweep(const std::string& which, const SweepBounds& bounds);

/// The N = 4, m = 2 worked example F_{2,kappa} P_{(1,1,-1,-1)} with its
/// three explicit terms, compared against f_action and, for each kappa in
/// range, against f_realized.
std::vector<VerificationReport> worked_example_check(const SweepBounds& bounds);

/// Small random symmetric function with coefficients in Z[q,t].
SymFunc random_symfunc(int n_vars, int max_degree, std::uint64_t seed);

}  // namespace macjack
