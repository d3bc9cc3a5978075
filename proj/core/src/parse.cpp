#include <cctype>

#include "monotile/errors.hpp"
#include "monotile/qs3.hpp"

namespace monotile {

namespace {

// Recursive-descent parser:
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('-' | '+') unary | primary
//   primary := number | 'sqrt3' | '(' expr ')'
//   number  := digits ('.' digits)?
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  QS3 parse() {
    QS3 value = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  QS3 expr() {
    QS3 value = term();
    for (;;) {
      if (accept('+')) {
        value += term();
      } else if (accept('-')) {
        value -= term();
      } else {
        return value;
      }
    }
  }

  QS3 term() {
    QS3 value = unary();
    for (;;) {
      if (accept('*')) {
        value *= unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        QS3 divisor = unary();
        if (divisor.is_zero()) throw ParseError("division by zero", at);
        value /= divisor;
      } else {
        return value;
      }
    }
  }

  QS3 unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return primary();
  }

  QS3 primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (accept('(')) {
      QS3 value = expr();
      if (!accept(')')) fail("expected ')'");
      return value;
    }
    if (text_.substr(pos_, 5) == "sqrt3") {
      pos_ += 5;
      return QS3::sqrt3();
    }
    if (std::isdigit(static_cast<unsigned char>(text_[pos_]))) return number();
    fail("expected number, 'sqrt3' or '('");
  }

  QS3 number() {
    std::string digits;
    std::size_t scale = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      digits += text_[pos_++];
    }
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        fail("expected digit after '.'");
      }
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        digits += text_[pos_++];
        ++scale;
      }
    }
    mpz_class num(digits, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, scale);
    Rational r(num, den);
    r.canonicalize();
    return QS3(std::move(r));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

QS3 parse_qs3(std::string_view text) { return Parser(text).parse(); }

}  // namespace monotile
