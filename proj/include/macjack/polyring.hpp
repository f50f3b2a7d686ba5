// Sparse multivariate Laurent polynomials in x_1..x_N over Q(q,t) or Q(alpha).
#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "macjack/coefficients.hpp"

namespace macjack {

inline constexpr int kMaxVars = 8;

/// Exponent vector; entries past the ring's n_vars are always zero.
struct Monomial {
  std::array<std::int16_t, kMaxVars> e{};

  std::int16_t& operator[](int i) { return e[static_cast<std::size_t>(i)]; }
  std::int16_t operator[](int i) const { return e[static_cast<std::size_t>(i)]; }
  int degree() const;
  Monomial operator+(const Monomial& o) const;
  Monomial operator-(const Monomial& o) const;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

class MPoly {
 public:
  using Term = std::pair<Monomial, RatFunc>;

  explicit MPoly(int n_vars = 0, Field field = Field::qt);

  static MPoly constant(int n_vars, const RatFunc& c);
  /// x_i, 1-indexed.
  static MPoly variable(int n_vars, int i, Field field = Field::qt);
  static MPoly monomial(int n_vars, const Monomial& m, const RatFunc& c);
  /// Build from unsorted terms; equal monomials are combined.
  static MPoly from_terms(int n_vars, Field field, std::vector<Term> terms);

  int n_vars() const { return n_; }
  Field field() const { return field_; }
  /// Terms sorted lexicographically descending on exponent vectors.
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  RatFunc coefficient(const Monomial& m) const;
  int max_degree() const;
  int min_degree() const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const RatFunc& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const RatFunc& c) { return a *= c; }
  friend bool operator==(const MPoly& a, const MPoly& b);
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  /// Multiply by the monomial x^m.
  MPoly times_monomial(const Monomial& m) const;

 private:
  void check_compatible(const MPoly& o) const;
  int n_;
  Field field_;
  std::vector<Term> terms_;
};

/// T_{q,x_i}: x_i -> q x_i (1-indexed i).
MPoly shift_q(const MPoly& f, int i);
/// Product of T_{q,x_i} over the 0-indexed bits set in mask, with q -> q^power.
MPoly shift_q_mask(const MPoly& f, std::uint32_t mask, int power = 1);
/// K_{ij}: exchange x_i and x_j (1-indexed).
MPoly swap_vars(const MPoly& f, int i, int j);
/// Exact quotient f/g in the Laurent ring; throws NotExact on a nonzero remainder.
MPoly exact_div(const MPoly& f, const MPoly& g);
/// (f - K_{ij} f) / (x_i - x_j), 1-indexed.
MPoly divided_difference(const MPoly& f, int i, int j);
/// Invariance under every adjacent transposition.
bool is_symmetric(const MPoly& f);
/// prod_{i<j} (x_i - x_j).
MPoly vandermonde(int n_vars, Field field = Field::qt);
/// Terms in decreasing lexicographic order, e.g. "(1-t)*x1^2*x2 + x3".
std::string to_string(const MPoly& f);
/// x_i d/dx_i applied termwise (Euler operator in x_i, 1-indexed).
MPoly euler(const MPoly& f, int i);

}  // namespace macjack
