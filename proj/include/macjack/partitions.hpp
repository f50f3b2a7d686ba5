// Partitions, Young diagram statistics, dominance order, vertical strips and
// the arm/leg coefficient formulas (c_lambda, b_lambda, Psi) on both the
// (q,t) side and the alpha side.
#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "macjack/coefficients.hpp"

namespace macjack {

/// Weakly decreasing sequence of nonnegative integers, trailing zeros trimmed.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Accepts "(5,4,4,1)", "5,4,4,1", "()" and "(0)".
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  /// Row length lambda_i with 1-indexed i; 0 beyond the last row.
  int part(int i) const {
    return i >= 1 && i <= static_cast<int>(parts_.size()) ? parts_[i - 1] : 0;
  }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  bool empty() const { return parts_.empty(); }

  Partition conjugate() const;
  /// Diagram containment: this ⊇ mu.
  bool contains(const Partition& mu) const;
  /// lambda + (1^k): add one cell to each of the first k rows.
  Partition plus_column(int k) const;
  /// lambda - (1^k); the first k parts must be positive.
  Partition minus_column(int k) const;

  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// A cell (i, j) of a diagram, 1-indexed: row i, column j.
struct Cell {
  int row = 1;
  int col = 1;
  friend bool operator==(const Cell&, const Cell&) = default;
};

bool in_diagram(const Partition& lambda, Cell s);

int arm(const Partition& lambda, Cell s);     // a(s): cells east
int leg(const Partition& lambda, Cell s);     // l(s): cells south
int coarm(const Partition& lambda, Cell s);   // a'(s): cells west
int coleg(const Partition& lambda, Cell s);   // l'(s): cells north

/// mu <= lambda in dominance order; throws if the weights differ.
bool dominance_leq(const Partition& mu, const Partition& lambda);

/// All partitions of n with at most max_len parts, lexicographically decreasing.
std::vector<Partition> partitions_of(int n, int max_len);
/// Partitions of weight 0..n_max (at most max_len parts), by weight then
/// lexicographically decreasing.
std::vector<Partition> partitions_up_to(int n_max, int max_len);

/// True when mu ⊇ lambda and mu - lambda has at most one cell per column.
bool is_vertical_strip(const Partition& mu, const Partition& lambda);

/// All mu ⊇ lambda of length <= max_len with mu - lambda a vertical k-strip,
/// lexicographically decreasing.
std::vector<Partition> vertical_strips(const Partition& lambda, int k, int max_len);

/// c_lambda: prod over cells of (1 - q^a t^{l+1}) on the (q,t) side,
/// (alpha a + l + 1) on the alpha side.
RatFunc c_lambda(const Partition& lambda, Field field);
inline RatFunc c_lambda_qt(const Partition& lambda) { return c_lambda(lambda, Field::qt); }
inline RatFunc c_lambda_alpha(const Partition& lambda) { return c_lambda(lambda, Field::alpha); }

/// b_lambda(s); equals 1 when s is outside the diagram.
RatFunc b_lambda(const Partition& lambda, Cell s, Field field);

/// Pieri coefficient Psi_{mu/lambda}; throws if mu - lambda is not a vertical strip.
RatFunc psi(const Partition& mu, const Partition& lambda, Field field);

/// Psi_{mu+1/lambda+1} == Psi_{mu/lambda} where +1 adds a full column of
/// height n_vars.
bool shift_invariance_check(const Partition& mu, const Partition& lambda, int n_vars,
                            Field field = Field::qt);

/// A sequence (beta_1, ..., beta_N) with integer gaps beta_i - beta_{i+1} >= 0
/// and rational last entry. Stored as its shape beta - beta_N plus beta_N.
class ExtendedPartition {
 public:
  /// The entries are shape_i + offset; shape may have up to n_vars parts.
  ExtendedPartition(Partition shape, BigRational offset, int n_vars);
  /// From explicit integer entries, e.g. {1, 1, -1, -1}.
  static ExtendedPartition from_integers(const std::vector<int>& entries);
  static ExtendedPartition parse(std::string_view text, int n_vars);

  const Partition& shape() const { return shape_; }
  const BigRational& last() const { return last_; }
  int n_vars() const { return n_vars_; }
  bool is_integral() const { return last_.get_den() == 1; }
  /// beta_N as an int; requires is_integral().
  int last_int() const;
  /// Entries minus ref as a partition; ref must sit at or below beta_N by an
  /// integer amount.
  Partition shape_relative_to(const BigRational& ref) const;
  std::string to_string() const;

  friend bool operator==(const ExtendedPartition& a, const ExtendedPartition& b) {
    return a.n_vars_ == b.n_vars_ && a.last_ == b.last_ && a.shape_ == b.shape_;
  }

 private:
  Partition shape_;
  BigRational last_;
  int n_vars_;
};

/// All delta with delta - beta a vertical m-strip (delta keeps n_vars entries),
/// lexicographically decreasing in the shape delta - beta_N.
std::vector<ExtendedPartition> vertical_strips(const ExtendedPartition& beta, int m);

}  // namespace macjack
