#pragma once

#include <cctype>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "hk/error.hpp"

namespace hk {

/// Recursive-descent parser for arithmetic expressions over a value type V.
///
///   expr   := term (('+' | '-') term)*
///   term   := factor (('*' | '/') factor)*
///   factor := '-' factor | '+' factor | base ('^' digits)?
///   base   := digits | identifier | '(' expr ')'
///
/// Integers become values through `from_integer`; identifiers are resolved by
/// `identifier` (returning nullopt rejects them). Division goes through
/// `divide`, which may throw for value types where it is partial.
template <class V>
struct ExpressionGrammar {
  std::function<V(const mpz_class&)> from_integer;
  std::function<std::optional<V>(std::string_view)> identifier;
  std::function<V(const V&, const V&)> divide;
};

namespace detail {

template <class V>
class ExpressionParser {
 public:
  ExpressionParser(std::string_view s, const ExpressionGrammar<V>& g) : s_(s), g_(g) {}

  V parse() {
    V v = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(i_ + 1, msg + " at column " + std::to_string(i_ + 1) + " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  V expr() {
    V acc = term();
    for (;;) {
      if (eat('+')) {
        acc = acc + term();
      } else if (eat('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  V term() {
    V acc = factor();
    for (;;) {
      if (eat('*')) {
        acc = acc * factor();
      } else if (eat('/')) {
        std::size_t at = i_;
        V d = factor();
        try {
          acc = g_.divide(acc, d);
        } catch (const Error& e) {
          i_ = at;
          fail("invalid division (" + e.detail() + ")");
        }
      } else {
        return acc;
      }
    }
  }

  V factor() {
    if (eat('-')) return V() - factor();
    if (eat('+')) return factor();
    V b = base();
    if (eat('^')) {
      skip();
      std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (start == i_) fail("expected exponent");
      if (i_ - start > 4) fail("exponent too large");
      int e = std::stoi(std::string(s_.substr(start, i_ - start)));
      V r = g_.from_integer(mpz_class(1));
      for (int k = 0; k < e; ++k) r = r * b;
      return r;
    }
    return b;
  }

  V base() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end of input");
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      V v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return g_.from_integer(mpz_class(std::string(s_.substr(start, i_ - start)), 10));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = i_;
      while (i_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[i_]))) ++i_;
      auto name = s_.substr(start, i_ - start);
      auto v = g_.identifier(name);
      if (!v) {
        i_ = start;
        fail("unknown symbol '" + std::string(name) + "'");
      }
      return *v;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  const ExpressionGrammar<V>& g_;
  std::size_t i_ = 0;
};

}  // namespace detail

template <class V>
V parse_expression(std::string_view s, const ExpressionGrammar<V>& grammar) {
  return detail::ExpressionParser<V>(s, grammar).parse();
}

/// True when `s` has no top-level ` + ` / ` - ` and so can be multiplied
/// without parentheses.
inline bool is_atomic_text(std::string_view s) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth == 0 && (c == '+' || c == '-') && i > 0) return false;
  }
  return true;
}

}  // namespace hk
