// Symmetric functions in N variables stored in the monomial basis, with the
// power-sum scalar products on both sides.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "macjack/coefficients.hpp"
#include "macjack/partitions.hpp"
#include "macjack/polyring.hpp"

namespace macjack {

enum class BasisKind { monomial, elementary, powersum, macdonald_P, macdonald_J };

const char* basis_name(BasisKind b);

/// e_N^{en_power} * sum_lambda c_lambda m_lambda with l(lambda) <= N.
///
/// en_power <= 0 always; it is negative only for Laurent symmetric
/// polynomials that are not themselves polynomials.
class SymFunc {
 public:
  using Map = std::map<Partition, RatFunc>;

  explicit SymFunc(int n_vars = 1, Field field = Field::qt);

  static SymFunc one(int n_vars, Field field = Field::qt);
  static SymFunc constant(int n_vars, const RatFunc& c);
  /// c * m_lambda.
  static SymFunc monomial(int n_vars, const Partition& lambda, const RatFunc& c);

  int n_vars() const { return n_; }
  Field field() const { return field_; }
  int en_power() const { return en_power_; }
  const Map& coeffs() const { return coeffs_; }
  RatFunc coefficient(const Partition& lambda) const;
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the single homogeneous component, or -1 if mixed/zero.
  int homogeneous_degree() const;

  /// Accumulate c * m_lambda (e_N power untouched).
  void add_term(const Partition& lambda, const RatFunc& c);

  SymFunc operator-() const;
  SymFunc& operator+=(const SymFunc& o);
  SymFunc& operator-=(const SymFunc& o);
  SymFunc& operator*=(const RatFunc& c);
  SymFunc& operator/=(const RatFunc& c);
  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  friend SymFunc operator*(SymFunc a, const RatFunc& c) { return a *= c; }
  friend SymFunc operator/(SymFunc a, const RatFunc& c) { return a /= c; }
  friend bool operator==(const SymFunc& a, const SymFunc& b) {
    return a.n_ == b.n_ && a.field_ == b.field_ && a.en_power_ == b.en_power_ &&
           a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const SymFunc& a, const SymFunc& b) { return !(a == b); }

  /// Multiply by e_N^k (k may be negative).
  SymFunc times_en(int k) const;

  /// Canonical text, e.g. "(1-t)*m[1]"; partitions in decreasing
  /// lexicographic order.
  std::string to_string() const;
  std::string to_latex() const;

 private:
  void normalize_en();
  void check_compatible(const SymFunc& o) const;
  int n_;
  Field field_;
  int en_power_ = 0;
  Map coeffs_;
};

MPoly to_x(const SymFunc& f);
/// Throws std::invalid_argument when g is not symmetric.
SymFunc from_x(const MPoly& g);

/// e_k in N variables; zero when k > N.
SymFunc e_k(int n_vars, int k, Field field = Field::qt);
/// Power sum p_k in N variables.
SymFunc p_k(int n_vars, int k, Field field = Field::qt);

/// Product computed by convolution in the monomial basis.
SymFunc multiply(const SymFunc& f, const SymFunc& g);

/// z_lambda = prod_i i^{m_i} m_i!.
BigInt z_lambda(const Partition& lambda);

struct PBasisMatrix {
  std::vector<Partition> basis;                  // partitions of n with l <= N
  std::vector<std::vector<BigRational>> rows;    // rows[a][b]: coeff of m_basis[b] in p_basis[a]
};

PBasisMatrix p_basis_matrix(int n, int n_vars);

/// <f, g>_{q,t} through the power-sum pairing; f and g homogeneous of the
/// same degree n <= N.
RatFunc scalar_qt(const SymFunc& f, const SymFunc& g);
/// <f, g>_alpha through the power-sum pairing.
RatFunc scalar_alpha(const SymFunc& f, const SymFunc& g);

/// Coordinates of f in the power-sum basis (partitions of the degree).
std::map<Partition, RatFunc> to_p_basis(const SymFunc& f);

}  // namespace macjack
