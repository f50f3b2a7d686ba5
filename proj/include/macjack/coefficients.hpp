// Exact coefficient arithmetic: the fields Q(q,t), Q(alpha) and Q(t).
//
// Elements are stored as a reduced fraction num/den where num is a Laurent
// polynomial with integer coefficients and den is an ordinary polynomial that
// is not divisible by any variable. With that convention the normal form is
// unique (see RatFunc::normalize) and equality is structural.
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace macjack {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Coefficient field tag. `alpha` uses the first variable slot, `t` (the
/// image of Q(q,t) under q -> t^a) uses the second one.
enum class Field : std::uint8_t { qt, alpha, t };

const char* field_name(Field f);

struct DivisionByZero : std::domain_error {
  using std::domain_error::domain_error;
};
struct FieldMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};
struct NotExact : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Term2 {
  int eq = 0;  // exponent of the first variable (q or alpha)
  int et = 0;  // exponent of the second variable (t)
  BigInt c;
};

/// Sparse Laurent polynomial in two variables over Z. Terms are kept in
/// degree-lexicographic descending order, so terms().front() is the leading
/// term.
class Poly2 {
 public:
  Poly2() = default;
  explicit Poly2(const BigInt& c);
  explicit Poly2(long c) : Poly2(BigInt(c)) {}

  static Poly2 monomial(const BigInt& c, int eq, int et);
  static Poly2 from_terms(std::vector<Term2> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool has_negative_exponents() const;
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term2>& terms() const { return terms_; }
  const Term2& leading() const { return terms_.front(); }

  int min_eq() const;
  int min_et() const;
  int max_eq() const;
  int max_et() const;
  /// Positive gcd of all integer coefficients (0 for the zero polynomial).
  BigInt content() const;

  Poly2 shifted(int dq, int dt) const;
  Poly2 operator-() const;
  Poly2& operator+=(const Poly2& o);
  Poly2& operator-=(const Poly2& o);
  Poly2& operator*=(const BigInt& c);
  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  friend Poly2 operator*(Poly2 a, const BigInt& c) { return a *= c; }
  friend bool operator==(const Poly2& a, const Poly2& b);
  friend bool operator!=(const Poly2& a, const Poly2& b) { return !(a == b); }

  Poly2 divexact(const BigInt& c) const;
  BigRational evaluate(const BigRational& x, const BigRational& y) const;
  /// Replace the first variable by y^a.
  Poly2 substitute_first(int a) const;
  std::size_t hash() const;

  /// Exact quotient a/b in the Laurent ring; throws NotExact otherwise.
  static Poly2 exact_div(const Poly2& a, const Poly2& b);
  /// Quotient if b divides a exactly, empty optional-like flag otherwise.
  static bool try_exact_div(const Poly2& a, const Poly2& b, Poly2& out);
  /// Greatest common divisor of two polynomials with nonnegative exponents,
  /// normalized to a positive leading coefficient.
  static Poly2 gcd(const Poly2& a, const Poly2& b);

  /// Terms in ascending deglex order, explicit signs, e.g. "1-t-q*t+q*t^2".
  std::string to_string(const char* x = "q", const char* y = "t") const;
  std::string to_latex(const char* x = "q", const char* y = "t") const;

 private:
  void canonicalize();
  std::vector<Term2> terms_;
};

/// An element of Q(q,t), Q(alpha) or Q(t) in canonical normal form.
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(long v, Field f = Field::qt);
  RatFunc(const BigRational& v, Field f = Field::qt);
  RatFunc(Poly2 num, Field f);
  RatFunc(Poly2 num, Poly2 den, Field f);

  static RatFunc q(int power = 1);
  static RatFunc t(int power = 1, Field f = Field::qt);
  static RatFunc alpha(int power = 1);
  static RatFunc zero(Field f) { return RatFunc(0L, f); }
  static RatFunc one(Field f) { return RatFunc(1L, f); }

  const Poly2& num() const { return num_; }
  const Poly2& den() const;
  Field field() const { return field_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_zero() && num_.is_one(); }
  /// True when the denominator is 1 (the value lies in the Laurent ring).
  bool is_laurent() const { return den_.is_zero(); }
  /// True when the value lies in Z[q,t] (no denominator, no negative powers).
  bool is_integral_polynomial() const;

  RatFunc operator-() const;
  RatFunc inverse() const;
  RatFunc pow(int e) const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.field_ == b.field_ && a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  std::size_t hash() const;
  std::string to_string() const;
  std::string to_latex() const;

 private:
  void normalize();
  void check_field(const RatFunc& o) const;
  Poly2 num_;
  Poly2 den_;  // empty means 1
  Field field_ = Field::qt;
};

/// Field operations spelled out as named functions.
RatFunc add(const RatFunc& a, const RatFunc& b);
RatFunc sub(const RatFunc& a, const RatFunc& b);
RatFunc mul(const RatFunc& a, const RatFunc& b);
RatFunc div(const RatFunc& a, const RatFunc& b);

/// q -> t^a on an element of Q(q,t); the result lives in Q(t).
RatFunc substitute_q_power(const RatFunc& f, int a);
/// Exact value of f in Q(t) at t = t0; throws PoleError at a genuine pole.
BigRational eval_cancel(const RatFunc& f, const BigRational& t0);
/// Exact value of f in Q(alpha) at alpha = a0.
BigRational eval_alpha(const RatFunc& f, const BigRational& a0);

/// (a; base)_n = (1-a)(1-base*a)...(1-base^{n-1}*a), with (a; base)_0 = 1.
RatFunc pochhammer(const RatFunc& a, const RatFunc& base, int n);
/// 1 - q^a t^b as a field element.
RatFunc one_minus_qt(int a, int b);

}  // namespace macjack
