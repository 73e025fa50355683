#include "hk/matrix.hpp"

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "hk/error.hpp"

namespace hk {

namespace {

using QPoly = Poly<Rational>;

// Dense polynomial over Z, just enough ring structure for berkowitz().
struct ZPoly {
  std::vector<mpz_class> c;

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  ZPoly& operator+=(const ZPoly& o) {
    if (c.size() < o.c.size()) c.resize(o.c.size());
    for (std::size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
    trim();
    return *this;
  }
  friend ZPoly operator-(ZPoly a, const ZPoly& b) {
    if (a.c.size() < b.c.size()) a.c.resize(b.c.size());
    for (std::size_t i = 0; i < b.c.size(); ++i) a.c[i] -= b.c[i];
    a.trim();
    return a;
  }
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    ZPoly out;
    if (a.c.empty() || b.c.empty()) return out;
    out.c.resize(a.c.size() + b.c.size() - 1);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
      if (a.c[i] == 0) continue;
      for (std::size_t j = 0; j < b.c.size(); ++j) mpz_addmul(out.c[i + j].get_mpz_t(), a.c[i].get_mpz_t(), b.c[j].get_mpz_t());
    }
    out.trim();
    return out;
  }
};

QPoly to_q(const ZPoly& z) {
  std::vector<Rational> c;
  c.reserve(z.c.size());
  for (const auto& x : z.c) c.emplace_back(x);
  return QPoly(std::move(c));
}

// m = entries / den with entries and den over Z.
struct Cleared {
  std::vector<std::vector<ZPoly>> entries;
  QPoly den;
};

Cleared clear_denominators(const Matrix<RatFunc>& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::Internal, "square matrix expected");
  QPoly den = QPoly::constant(Rational(1));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const QPoly& d = m(i, j).den();
      if (d.degree() > 0) den = den * (d / qpoly_gcd(den, d));
    }
  std::vector<std::vector<QPoly>> nums(static_cast<std::size_t>(m.rows()));
  mpz_class scale = 1;
  for (const auto& c : den.coeffs()) scale = lcm(scale, c.den());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      QPoly e = m(i, j).num() * (den / m(i, j).den());
      for (const auto& c : e.coeffs()) scale = lcm(scale, c.den());
      nums[static_cast<std::size_t>(i)].push_back(std::move(e));
    }
  Cleared out;
  out.den = den * Rational(scale);
  out.entries.resize(nums.size());
  for (std::size_t i = 0; i < nums.size(); ++i)
    for (const auto& e : nums[i]) {
      ZPoly z;
      for (const auto& c : e.coeffs()) z.c.push_back(c.num() * (scale / c.den()));
      out.entries[i].push_back(std::move(z));
    }
  return out;
}

}  // namespace

// det(T - N/D) = D^{-n} det(D T - N): coefficient k picks up D^{k-n}.
Poly<RatFunc> charpoly(const Matrix<RatFunc>& m) {
  const auto c = clear_denominators(m);
  const auto coeffs = berkowitz(c.entries, ZPoly{{mpz_class(1)}});
  const std::size_t n = c.entries.size();
  std::vector<RatFunc> out(n + 1);
  QPoly dpow = QPoly::constant(Rational(1));  // D^{n-k}
  for (std::size_t k = n + 1; k-- > 0;) {
    out[k] = RatFunc(to_q(coeffs[n - k]), dpow);
    dpow = dpow * c.den;
  }
  return Poly<RatFunc>(std::move(out));
}

RatFunc determinant(const Matrix<RatFunc>& m) {
  const auto c = clear_denominators(m);
  const std::size_t n = c.entries.size();
  const auto coeffs = berkowitz(c.entries, ZPoly{{mpz_class(1)}});
  QPoly det = to_q(coeffs[n]);
  if (n % 2) det = QPoly() - det;
  return RatFunc(det, pow(c.den, n));
}

}  // namespace hk
