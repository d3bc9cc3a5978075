#include "monotile/qs3.hpp"

#include <cstdio>
#include <sstream>

#include "monotile/errors.hpp"

namespace monotile {

namespace {

// 256 bits leaves ample headroom over the 53-bit double mantissa.
constexpr mp_bitcnt_t kFloatBits = 256;

std::size_t hash_mpz(mpz_srcptr z) {
  std::size_t h = static_cast<std::size_t>(mpz_sgn(z)) * 0x9e3779b97f4a7c15ULL;
  const std::size_t limbs = mpz_size(z);
  for (std::size_t i = 0; i < limbs; ++i) {
    h ^= static_cast<std::size_t>(mpz_getlimbn(z, i)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

int compare_rational(const Rational& a, const Rational& b) { return cmp(a, b); }

}  // namespace

int QS3::sign() const {
  const int sp = sgn(p_);
  const int sq = sgn(q_);
  if (sp >= 0 && sq >= 0) return (sp > 0 || sq > 0) ? 1 : 0;
  if (sp <= 0 && sq <= 0) return -1;
  // Mixed signs: |p| vs sqrt3 |q|, decided on squares.
  const Rational p2 = p_ * p_;
  const Rational q2 = 3 * q_ * q_;
  const int c = cmp(p2, q2);
  return sp > 0 ? c : -c;
}

Rational QS3::norm() const {
  Rational n = p_ * p_ - 3 * q_ * q_;
  return n;
}

QS3 QS3::inverse() const {
  if (is_zero()) throw DivisionByZero();
  // Rationalize with the conjugate: 1/(p+q r3) = (p - q r3)/(p^2 - 3q^2).
  // The norm cannot vanish for non-zero input since sqrt3 is irrational.
  const Rational n = norm();
  Rational p = p_ / n;
  Rational q = -q_ / n;
  return QS3(std::move(p), std::move(q));
}

QS3& QS3::operator+=(const QS3& rhs) {
  p_ += rhs.p_;
  q_ += rhs.q_;
  return *this;
}

QS3& QS3::operator-=(const QS3& rhs) {
  p_ -= rhs.p_;
  q_ -= rhs.q_;
  return *this;
}

QS3& QS3::operator*=(const QS3& rhs) {
  Rational p = p_ * rhs.p_ + 3 * q_ * rhs.q_;
  Rational q = p_ * rhs.q_ + q_ * rhs.p_;
  p_ = std::move(p);
  q_ = std::move(q);
  return *this;
}

QS3& QS3::operator/=(const QS3& rhs) { return *this *= rhs.inverse(); }

std::strong_ordering operator<=>(const QS3& a, const QS3& b) {
  const int s = (a - b).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool QS3::structural_less(const QS3& a, const QS3& b) {
  const int c = compare_rational(a.p_, b.p_);
  if (c != 0) return c < 0;
  return compare_rational(a.q_, b.q_) < 0;
}

QS3 qs3_arith(const QS3& x, const QS3& y, ArithOp op) {
  switch (op) {
    case ArithOp::kAdd: return x + y;
    case ArithOp::kSub: return x - y;
    case ArithOp::kMul: return x * y;
    case ArithOp::kDiv: return x / y;
  }
  return {};
}

std::optional<Rational> rational_sqrt(const Rational& x) {
  if (sgn(x) < 0) return std::nullopt;
  const mpz_class& num = x.get_num();
  const mpz_class& den = x.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

std::optional<QS3> qs3_sqrt(const QS3& x) {
  if (x.sign() < 0) throw DomainError("square root of a negative value");
  if (x.is_zero()) return QS3();

  const Rational& p = x.rational_part();
  const Rational& q = x.sqrt3_part();

  // (a + b r3)^2 = (a^2 + 3 b^2) + 2ab r3, so a^2 + 3b^2 = p and 2ab = q.
  std::optional<QS3> root;
  if (sgn(q) == 0) {
    if (auto a = rational_sqrt(p)) {
      root = QS3(*a);
    } else if (auto b = rational_sqrt(Rational(p / 3))) {
      root = QS3(Rational(0), *b);
    }
  } else {
    // a^2 solves t^2 - p t + 3q^2/4 = 0, so t = (p +- sqrt(p^2 - 3q^2)) / 2.
    const auto d = rational_sqrt(x.norm());
    if (!d) return std::nullopt;
    for (const Rational& t : {Rational((p + *d) / 2), Rational((p - *d) / 2)}) {
      if (sgn(t) <= 0) continue;
      auto a = rational_sqrt(t);
      if (!a) continue;
      Rational b = q / (2 * *a);
      root = QS3(*a, std::move(b));
      break;
    }
  }
  if (!root) return std::nullopt;
  if (root->sign() < 0) root = -*root;
  if (*root * *root != x) return std::nullopt;
  return root;
}

double qs3_to_float(const QS3& x) {
  const Rational& p = x.rational_part();
  const Rational& q = x.sqrt3_part();
  if (sgn(q) == 0) return p.get_d();

  mpf_class r3(3, kFloatBits);
  mpf_sqrt(r3.get_mpf_t(), r3.get_mpf_t());
  mpf_class fp(p, kFloatBits);
  mpf_class fq(q, kFloatBits);

  mpf_class value(0, kFloatBits);
  if (sgn(p) * sgn(q) >= 0) {
    value = fp + fq * r3;
  } else {
    // Cancellation-free route through the conjugate.
    mpf_class n(x.norm(), kFloatBits);
    mpf_class conj(0, kFloatBits);
    conj = fp - fq * r3;
    value = n / conj;
  }
  return value.get_d();
}

std::string to_string(const Rational& x) {
  return x.get_str();
}

std::string to_string(const QS3& x) {
  const Rational& p = x.rational_part();
  const Rational& q = x.sqrt3_part();
  if (x.is_zero()) return "0";

  std::string out;
  if (sgn(p) != 0) out = p.get_str();

  if (sgn(q) != 0) {
    Rational mag = abs(q);
    std::string term = mag == 1 ? std::string("sqrt3") : mag.get_str() + "*sqrt3";
    if (out.empty()) {
      out = sgn(q) < 0 ? "-" + term : term;
    } else {
      out += sgn(q) < 0 ? " - " : " + ";
      out += term;
    }
  }
  return out;
}

std::string to_decimal(const QS3& x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, qs3_to_float(x));
  std::string s(buf);
  // Avoid printing "-0.00".
  if (s.find_first_not_of("-0.") == std::string::npos && !s.empty() && s[0] == '-') s.erase(0, 1);
  return s;
}

std::ostream& operator<<(std::ostream& os, const QS3& x) { return os << to_string(x); }

std::size_t hash_value(const QS3& x) {
  const Rational& p = x.rational_part();
  const Rational& q = x.sqrt3_part();
  std::size_t h = hash_mpz(p.get_num_mpz_t());
  h = h * 31 + hash_mpz(p.get_den_mpz_t());
  h = h * 31 + hash_mpz(q.get_num_mpz_t());
  h = h * 31 + hash_mpz(q.get_den_mpz_t());
  return h;
}

}  // namespace monotile
