#include "hk/valued_field.hpp"

#include <cctype>

#include "hk/error.hpp"

namespace hk {

PadicField::PadicField(mpz_class p) : p_(std::move(p)) {
  if (p_ < 2 || mpz_probab_prime_p(p_.get_mpz_t(), 40) == 0) {
    throw Error(ErrorCode::InvalidField, "p-adic field needs a prime, got " + p_.get_str());
  }
}

namespace {

long strip(const mpz_class& n, const mpz_class& p) {
  mpz_class rest;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

}  // namespace

Val PadicField::valuation(const Rational& a) const {
  if (a.is_zero()) return Val::inf();
  return Val(strip(a.num(), p_) - strip(a.den(), p_));
}

Val TadicField::valuation(const RatFunc& a) const {
  if (a.is_zero()) return Val::inf();
  return Val(order_at_zero(a.num()) - order_at_zero(a.den()));
}

AnyField parse_field(std::string_view spec) {
  auto trimmed = spec;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.remove_suffix(1);
  if (trimmed == "tadic") return TadicField{};
  constexpr std::string_view prefix = "padic:";
  if (trimmed.substr(0, prefix.size()) == prefix) {
    auto digits = trimmed.substr(prefix.size());
    bool ok = !digits.empty() && digits.size() < 64;
    for (char c : digits) ok = ok && std::isdigit(static_cast<unsigned char>(c));
    if (ok) return PadicField(mpz_class(std::string(digits), 10));
  }
  throw Error(ErrorCode::InvalidField, "unknown field specifier '" + std::string(spec) +
                                           "' (expected padic:<prime> or tadic)");
}

}  // namespace hk
