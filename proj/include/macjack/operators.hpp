// Subset-sum q-difference operators
//   sum_terms coeff * prod (a x_i - b x_j)/(x_i - x_j) * x^v * T_S
// applied exactly: everything is multiplied through by the Vandermonde
// determinant, the shifted inputs are combined, and the total is divided
// back out with a zero-remainder check.
#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "macjack/polyring.hpp"
#include "macjack/symmetric.hpp"

namespace macjack {

/// (a x_i - b x_j) / (x_i - x_j), 0-indexed i != j.
struct PairFactor {
  int i = 0;
  int j = 1;
  RatFunc a;
  RatFunc b;
};

struct OperatorTerm {
  RatFunc coeff;
  std::vector<PairFactor> pairs;
  Monomial monomial;
  std::uint32_t shift_mask = 0;  // T_{q,x_i} for each set bit i
};

class DifferenceOperator {
 public:
  DifferenceOperator(int n_vars, const std::vector<OperatorTerm>& terms);

  int n_vars() const { return n_; }
  /// Throws NotExact if the result is not a Laurent polynomial.
  MPoly apply(const MPoly& f) const;
  /// Applies to a symmetric function; throws std::logic_error if the
  /// result is not symmetric.
  SymFunc apply(const SymFunc& f) const;

 private:
  int n_;
  std::vector<std::pair<std::uint32_t, MPoly>> kernels_;
  MPoly vandermonde_;
};

/// Process-wide cache of built operators keyed by a descriptive string.
std::shared_ptr<const DifferenceOperator> cached_operator(
    const std::string& key, const std::function<DifferenceOperator()>& build);

/// Subsets of {0..n-1} of size k as bitmasks, in increasing numeric order
/// of their sorted index lists.
std::vector<std::uint32_t> subsets_of_size(int n, int k);

/// Terms of M_I(X) = sum_{J subset I} X^{|J|} t^{|J|(|J|-1)/2}
/// prod_{j in J, l in I\J} (t x_j - x_l)/(x_j - x_l) T_J, each multiplied by
/// `scale` and with the given extra pairs, monomial and complement shift.
void append_subset_M_terms(std::vector<OperatorTerm>& out, std::uint32_t subset, const RatFunc& X,
                           const RatFunc& scale, const std::vector<PairFactor>& extra_pairs,
                           const Monomial& monomial, std::uint32_t extra_shift);

}  // namespace macjack
