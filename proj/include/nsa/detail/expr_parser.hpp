#pragma once

#include "nsa/error.hpp"
#include "nsa/rational.hpp"

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nsa::detail {

/*
 * Recursive-descent parser for arithmetic over one formal variable:
 *
 *   expr    ::= term { ('+' | '-') term }
 *   term    ::= unary { ('*' | '/') unary }
 *   unary   ::= '-' unary | '+' unary | power
 *   power   ::= primary [ '^' unary ]
 *   primary ::= NUMBER | VARIABLE | '(' expr ')'
 *
 * Field supplies the value type and arithmetic:
 *   using Value = ...;
 *   static Value constant(const Rational&);
 *   static Value variable();
 *   static Value add/sub/mul/quotient(const Value&, const Value&);
 *   static Value negate(const Value&);
 *   static std::optional<Rational> as_rational(const Value&);
 *   static Value power(const Value&, const Rational& exponent);
 */
template <class Field>
class ExprParser {
 public:
  using Value = typename Field::Value;

  ExprParser(std::string_view text, std::vector<std::string_view> variable_names)
      : text_(text), names_(std::move(variable_names)) {}

  Value parse() {
    Value v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("end of input");
    return v;
  }

 private:
  [[noreturn]] void fail(std::string_view expected) const {
    throw Error(ErrorKind::SyntaxError, "at position " + std::to_string(pos_) + " in '" +
                                            std::string(text_) + "': expected " +
                                            std::string(expected));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool accept_variable() {
    skip_ws();
    for (auto name : names_) {
      if (text_.substr(pos_, name.size()) != name) continue;
      std::size_t end = pos_ + name.size();
      if (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) continue;
      pos_ = end;
      return true;
    }
    return false;
  }

  Value expr() {
    Value acc = term();
    for (;;) {
      if (accept('+'))
        acc = Field::add(acc, term());
      else if (accept('-'))
        acc = Field::sub(acc, term());
      else
        return acc;
    }
  }

  Value term() {
    Value acc = unary();
    for (;;) {
      if (accept('*') || accept_middle_dot())
        acc = Field::mul(acc, unary());
      else if (accept('/'))
        acc = Field::quotient(acc, unary());
      else
        return acc;
    }
  }

  bool accept_middle_dot() {
    skip_ws();
    static constexpr std::string_view kDot = "·";
    if (text_.substr(pos_, kDot.size()) == kDot) {
      pos_ += kDot.size();
      return true;
    }
    return false;
  }

  Value unary() {
    if (accept('-')) return Field::negate(unary());
    if (accept('+')) return unary();
    return power();
  }

  Value power() {
    Value base = primary();
    if (!accept('^')) return base;
    std::size_t at = pos_;
    Value exponent = unary();
    auto q = Field::as_rational(exponent);
    if (!q) {
      pos_ = at;
      fail("a constant rational exponent");
    }
    return Field::power(base, *q);
  }

  Value primary() {
    skip_ws();
    if (accept('(')) {
      Value v = expr();
      if (!accept(')')) fail("')'");
      return v;
    }
    if (accept_variable()) return Field::variable();
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
      ++pos_;
    if (start == pos_) fail("a number, variable or '('");
    return Field::constant(parse_rational(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  std::vector<std::string_view> names_;
  std::size_t pos_ = 0;
};

}  // namespace nsa::detail
