#pragma once

#include <string>
#include <string_view>

#include "hk/parse.hpp"
#include "hk/poly.hpp"
#include "hk/valued_field.hpp"

namespace hk {

/// Parses a polynomial over the field's K.
///
/// Two forms are accepted: a comma-separated list of ascending coefficients
/// (`5,1,1`, whitespace tolerated), or an expression in `X` such as the
/// output of pretty() (`X^2 + X + 5`). A string without `X` is read as a
/// coefficient list. Errors in the list form report the 1-based token index.
template <ValuedField F>
Poly<typename F::Elem> parse_poly(std::string_view s, const F& field) {
  using E = typename F::Elem;
  using P = Poly<E>;
  const bool is_list = s.find(',') != std::string_view::npos || s.find('X') == std::string_view::npos;
  if (is_list) {
    std::vector<E> coeffs;
    std::size_t token = 1, start = 0;
    for (;;) {
      const std::size_t comma = s.find(',', start);
      auto piece = s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
      try {
        coeffs.push_back(field.parse_elem(piece));
      } catch (const ParseError& e) {
        throw ParseError(token, "parse error at token " + std::to_string(token) + " ('" + std::string(piece) +
                                    "'): " + e.detail());
      } catch (const Error& e) {
        throw ParseError(token, "parse error at token " + std::to_string(token) + ": " + e.detail());
      }
      if (comma == std::string_view::npos) break;
      start = comma + 1;
      ++token;
    }
    return P(std::move(coeffs));
  }
  ExpressionGrammar<P> g{
      [](const mpz_class& n) { return P::constant(E(Rational(n))); },
      [&field](std::string_view id) -> std::optional<P> {
        if (id == "X") return P::x();
        if (auto c = field.symbol(id)) return P::constant(*c);
        return std::nullopt;
      },
      [](const P& a, const P& b) {
        if (b.degree() != 0) throw Error(ErrorCode::ParseError, "polynomials may only be divided by nonzero constants");
        return a * (E(1) / b[0]);
      },
  };
  return parse_expression(s, g);
}

}  // namespace hk
