#include "hk/rational.hpp"

#include <cctype>

#include "hk/error.hpp"

namespace hk {

Rational::Rational(mpz_class num, mpz_class den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero rational");
  q_ /= o.q_;
  return *this;
}

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) return Rational(1) / pow(base, -exponent);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.get().get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), base.get().get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(n, d);
}

namespace {

std::size_t skip_ws(std::string_view s, std::size_t i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return i;
}

mpz_class read_integer(std::string_view s, std::size_t& i, bool allow_sign) {
  std::size_t start = i;
  std::string digits;
  if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) {
    if (s[i] == '-') digits.push_back('-');
    ++i;
  }
  std::size_t first_digit = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits.push_back(s[i++]);
  if (i == first_digit) {
    throw ParseError(start + 1, "expected integer at column " + std::to_string(start + 1) + " in '" +
                                    std::string(s) + "'");
  }
  return mpz_class(digits, 10);
}

}  // namespace

Rational Rational::parse(std::string_view s) {
  std::size_t i = skip_ws(s, 0);
  mpz_class num = read_integer(s, i, true);
  mpz_class den = 1;
  i = skip_ws(s, i);
  if (i < s.size() && s[i] == '/') {
    i = skip_ws(s, i + 1);
    den = read_integer(s, i, false);
    if (den == 0) throw ParseError(i, "zero denominator in '" + std::string(s) + "'");
    i = skip_ws(s, i);
  }
  if (i != s.size()) {
    throw ParseError(i + 1, "unexpected '" + std::string(1, s[i]) + "' at column " + std::to_string(i + 1) +
                                " in '" + std::string(s) + "'");
  }
  return Rational(num, den);
}

}  // namespace hk
