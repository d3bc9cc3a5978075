#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace monotile {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
using Rational = mpq_class;

/// Exact element p + q*sqrt(3) of the real quadratic field Q[sqrt3].
///
/// Because sqrt3 is irrational the pair (p, q) is unique, so equality is
/// componentwise. Ordering compares real values exactly.
class QS3 {
 public:
  QS3() = default;
  QS3(long value) : p_(value) {}  // NOLINT(google-explicit-constructor)
  QS3(Rational p) : p_(std::move(p)) { p_.canonicalize(); }  // NOLINT
  QS3(Rational p, Rational q) : p_(std::move(p)), q_(std::move(q)) {
    p_.canonicalize();
    q_.canonicalize();
  }

  static QS3 sqrt3() { return QS3(Rational(0), Rational(1)); }
  static QS3 fraction(long num, long den) { return QS3(Rational(num, den)); }

  const Rational& rational_part() const { return p_; }
  const Rational& sqrt3_part() const { return q_; }

  bool is_zero() const { return sgn(p_) == 0 && sgn(q_) == 0; }
  bool is_rational() const { return sgn(q_) == 0; }

  /// Exact sign of the real value: -1, 0 or +1.
  int sign() const;

  /// Algebraic conjugate p - q*sqrt3.
  QS3 conjugate() const { return QS3(p_, -q_); }
  /// Field norm p^2 - 3 q^2.
  Rational norm() const;
  /// Throws DivisionByZero for zero.
  QS3 inverse() const;

  QS3& operator+=(const QS3& rhs);
  QS3& operator-=(const QS3& rhs);
  QS3& operator*=(const QS3& rhs);
  QS3& operator/=(const QS3& rhs);

  friend QS3 operator+(QS3 lhs, const QS3& rhs) { return lhs += rhs; }
  friend QS3 operator-(QS3 lhs, const QS3& rhs) { return lhs -= rhs; }
  friend QS3 operator*(QS3 lhs, const QS3& rhs) { return lhs *= rhs; }
  friend QS3 operator/(QS3 lhs, const QS3& rhs) { return lhs /= rhs; }
  friend QS3 operator-(const QS3& x) { return QS3(-x.p_, -x.q_); }

  friend bool operator==(const QS3& a, const QS3& b) { return a.p_ == b.p_ && a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const QS3& a, const QS3& b);

  /// Cheap total order on the representation (not on the real value).
  /// Suitable for map keys where only a consistent order is required.
  static bool structural_less(const QS3& a, const QS3& b);

 private:
  Rational p_{0};
  Rational q_{0};
};

enum class ArithOp { kAdd, kSub, kMul, kDiv };

/// Field operation by tag; division by zero throws DivisionByZero.
QS3 qs3_arith(const QS3& x, const QS3& y, ArithOp op);

inline int qs3_sign(const QS3& x) { return x.sign(); }

/// Non-negative square root inside Q[sqrt3], or nullopt when the root is not
/// in the field. Throws DomainError for negative input.
std::optional<QS3> qs3_sqrt(const QS3& x);

/// Rational square root, or nullopt when x is not a perfect rational square.
std::optional<Rational> rational_sqrt(const Rational& x);

/// Nearest double (within 1-2 ulp), cancellation-safe.
double qs3_to_float(const QS3& x);

/// Canonical text `p/q + r/s*sqrt3` with zero terms suppressed.
std::string to_string(const QS3& x);
std::string to_string(const Rational& x);

/// Fixed-point decimal rendering of the float approximation.
std::string to_decimal(const QS3& x, int digits);

/// Parses an expression over integers, decimals, `sqrt3`, + - * / and
/// parentheses. Throws ParseError (with position) or DivisionByZero.
QS3 parse_qs3(std::string_view text);

std::ostream& operator<<(std::ostream& os, const QS3& x);

struct QS3StructuralLess {
  bool operator()(const QS3& a, const QS3& b) const { return QS3::structural_less(a, b); }
};

std::size_t hash_value(const QS3& x);

}  // namespace monotile

template <>
struct std::hash<monotile::QS3> {
  std::size_t operator()(const monotile::QS3& x) const { return monotile::hash_value(x); }
};
