#include <doctest.h>

#include "hk/error.hpp"
#include "hk/hensel.hpp"
#include "support/random.hpp"

using namespace hk;
using hk::testing::Rng;
using QP = Poly<Rational>;

namespace {

Rational q(long n, long d = 1) { return Rational(mpz_class(n), mpz_class(d)); }

QP poly(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long a : c) v.emplace_back(a);
  return QP(std::move(v));
}

template <ValuedField F>
Poly<typename F::Elem> random_admissible(const F& field, Rng& rng, int deg) {
  auto f = hk::testing::random_poly_V(field, rng, deg);
  std::vector<typename F::Elem> c = f.coeffs();
  c.resize(static_cast<std::size_t>(deg) + 1);
  c[0] = rng.coin(0.1) ? typename F::Elem() : hk::testing::random_with_valuation(field, rng, rng.uniform(1, 3));
  c[1] = hk::testing::random_unit(field, rng);
  if (is_zero(c.back())) c.back() = hk::testing::random_unit(field, rng);
  return Poly<typename F::Elem>(std::move(c));
}

// A random Hensel code: adjust the constant term of a random monic f so
// that f(a) lands in the radical, retrying until f'(a) is a unit.
template <ValuedField F>
HenselCode<typename F::Elem> random_code(const F& field, Rng& rng, int deg) {
  using E = typename F::Elem;
  for (;;) {
    const E a = hk::testing::random_V(field, rng);
    auto f = hk::testing::random_monic_V(field, rng, deg);
    f = f - Poly<E>::constant(f(a)) + Poly<E>::constant(hk::testing::random_with_valuation(field, rng, rng.uniform(1, 2)));
    if (check_hensel_code(f, a, field)) return {f, a};
  }
}

}  // namespace

TEST_CASE("check_hensel_code examples") {
  const PadicField f5(5);
  CHECK(check_hensel_code(poly({-6, 0, 1}), q(1), f5));
  CHECK_FALSE(check_hensel_code(poly({-6, 0, 1}), q(0), f5));
  CHECK(check_hensel_code(poly({5, 1, 1}), q(0), f5));
  CHECK_FALSE(check_hensel_code(poly({5, 1, 2}), q(0), f5));   // not monic
  CHECK_FALSE(check_hensel_code(QP({q(1, 5), q(1), q(1)}), q(0), f5));  // coefficient outside V
  CHECK_FALSE(check_hensel_code(poly({-6, 0, 1}), q(1, 5), f5));
  CHECK_THROWS_AS(make_hensel_code(poly({-6, 0, 1}), q(0), f5), Error);
}

TEST_CASE("make_special examples") {
  const PadicField f5(5);
  auto s = make_special(poly({5, 1, 1}), f5);
  CHECK(s.g == poly({5, -1, 1}));
  CHECK(s.g1 == poly({5, 1, 1}));
  CHECK(s.gamma_num() == q(-5));
  CHECK(s.gamma_den() == poly({1, 1}));

  auto lin = make_special(poly({10, 3}), f5);
  CHECK(lin.g == poly({-1, 1}));
  CHECK(lin.g1 == poly({0, 1}));
  CHECK(lin.gamma_num() == q(-10, 3));

  const PadicField f3(3);
  auto s3 = make_special(poly({3, 2, 1}), f3);
  CHECK(s3.g == QP({q(3, 4), q(-1), q(1)}));
  CHECK(s3.g1 == QP({q(3, 4), q(1), q(1)}));

  const TadicField tf;
  const RatFunc t = RatFunc::t();
  auto st = make_special(Poly<RatFunc>({t, RatFunc(1), RatFunc(1)}), tf);
  CHECK(st.g == Poly<RatFunc>({t, RatFunc(-1), RatFunc(1)}));
}

TEST_CASE("make_special rejects bad shapes") {
  const PadicField f5(5);
  for (const QP& f : {poly({1, 1, 1}), poly({5, 5, 1}), QP({q(5), q(1), q(1, 5)}), poly({5})}) {
    try {
      make_special(f, f5);
      FAIL("expected NOT_TRICK1_SHAPE for " << pretty(f));
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotTrick1Shape);
    }
  }
}

template <ValuedField F>
void check_special_properties(const F& field, std::uint64_t seed) {
  Rng rng(seed);
  using E = typename F::Elem;
  for (int i = 0; i < 50; ++i) {
    const auto f = random_admissible(field, rng, static_cast<int>(rng.uniform(1, 5)));
    const auto s = make_special(f, field);
    const std::size_t n = s.n;
    // Identity (*) coefficientwise: X^n f(c / X) = sum_k a_k c^k X^{n-k}
    // with c = -a0/a1 must equal a0 g(X).
    const E c = E() - s.a0 / s.a1;
    E ck(1);
    for (std::size_t k = 0; k <= n; ++k) {
      CHECK(s.a0 * s.g[n - k] == f[k] * ck);
      ck *= c;
    }
    CHECK(s.g1 == shift_compose(s.g, E(1)));
    CHECK(check_hensel_code(s.g1, E(), field));
    // The k = 2 term a0 a2 / a1^2 dominates g1(0) = g(1) when a2 is a unit.
    const Val v0 = field.valuation(s.g1(E()));
    CHECK(v0 >= field.valuation(s.a0));
    if (n >= 2 && field.valuation(f[2]) == Val(0)) CHECK(v0 == field.valuation(s.a0));
  }
}

TEST_CASE("special polynomial identity on random inputs") {
  check_special_properties(PadicField(5), 51);
  check_special_properties(PadicField(2), 52);
  check_special_properties(TadicField{}, 53);
}

TEST_CASE("newton_lift examples") {
  const PadicField f5(5);
  const auto code = make_hensel_code(poly({-6, 0, 1}), q(1), f5);
  CHECK(newton_lift(code, 2, f5) == q(7, 2));
  CHECK(newton_lift(code, 1, f5) == q(1));
  const auto code2 = make_hensel_code(poly({5, 1, 1}), q(0), f5);
  const auto r = newton_lift(code2, 2, f5);
  CHECK(r == q(-5));
  CHECK(f5.valuation(code2.f(r)) == Val(2));
  CHECK_THROWS_AS(newton_lift(code, 0, f5), Error);
  CHECK_THROWS_AS(newton_lift(HenselCode<Rational>{poly({-6, 0, 1}), q(0)}, 2, f5), Error);
}

template <ValuedField F>
void check_lifting(const F& field, std::uint64_t seed, int trials, int max_deg, long max_n) {
  Rng rng(seed);
  using E = typename F::Elem;
  for (int i = 0; i < trials; ++i) {
    const auto code = random_code(field, rng, static_cast<int>(rng.uniform(1, max_deg)));
    const auto xs = newton_iterates(code, 3, field);
    for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
      const Val now = field.valuation(code.f(xs[k]));
      const Val next = field.valuation(code.f(xs[k + 1]));
      CHECK(next >= now + now);
      CHECK(field.valuation(xs[k + 1] - code.a) >= Val(1));
    }
    // A second start in the same residue class lifts to the same zero.
    const E other = code.a + hk::testing::random_with_valuation(field, rng, rng.uniform(1, 2));
    REQUIRE(check_hensel_code(code.f, other, field));
    const HenselCode<E> code_other{code.f, other};
    for (long N = 1; N <= max_n; ++N) {
      const E x = newton_lift(code, N, field);
      const E y = newton_lift(code_other, N, field);
      CHECK(field.valuation(code.f(x)) >= Val(N));
      CHECK(field.valuation(x - y) >= Val(N));
    }
  }
}

TEST_CASE("quadratic convergence and uniqueness of the lifted zero") {
  check_lifting(PadicField(5), 61, 40, 4, 8);
  check_lifting(PadicField(3), 62, 40, 4, 8);
  // exact iterates over Q(t) double in size every step
  check_lifting(TadicField{}, 63, 10, 2, 4);
}
