#include <doctest.h>

#include "hk/error.hpp"
#include "hk/newton_polygon.hpp"
#include "support/random.hpp"

using namespace hk;
using hk::testing::Rng;
using QP = Poly<Rational>;

namespace {

QP poly(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long a : c) v.emplace_back(a);
  return QP(std::move(v));
}

RootVal rv(long n, long d = 1) { return RootVal(mpq_class(n, d)); }

template <class E, ValuedField F>
RootValMultiset multiset_of(const std::vector<E>& roots, const F& field) {
  RootValMultiset m;
  for (const auto& r : roots) {
    const Val v = field.valuation(r);
    m[v.is_inf() ? RootVal::inf() : RootVal(mpq_class(v.value()))] += 1;
  }
  return m;
}

}  // namespace

TEST_CASE("build_polygon examples") {
  const PadicField f5(5);
  auto p = build_polygon(poly({5, 1, 1}), f5);
  CHECK(p.ord0 == 0);
  CHECK(p.degree == 2);
  CHECK(p.vertices == std::vector<std::pair<std::int64_t, std::int64_t>>{{0, 1}, {1, 0}, {2, 0}});
  REQUIRE(p.segments.size() == 2);
  CHECK(p.segments[0] == PolygonSegment{mpq_class(-1), 1});
  CHECK(p.segments[1] == PolygonSegment{mpq_class(0), 1});

  auto m = build_polygon(poly({0, 0, 0, 1}), f5);
  CHECK(m.ord0 == 3);
  CHECK(m.segments.empty());

  auto r = build_polygon(poly({-5, 0, 1}), f5);
  REQUIRE(r.segments.size() == 1);
  CHECK(r.segments[0] == PolygonSegment{mpq_class(-1, 2), 2});

  CHECK_THROWS_AS(build_polygon(QP(), f5), Error);
}

TEST_CASE("collinear points are not vertices") {
  const PadicField f5(5);
  // (0,2), (1,1), (2,0): one segment of length 2
  auto p = build_polygon(poly({25, 5, 1}), f5);
  REQUIRE(p.segments.size() == 1);
  CHECK(p.segments[0] == PolygonSegment{mpq_class(-1), 2});
  CHECK(p.vertices.size() == 2);
}

TEST_CASE("root_valuations examples") {
  const PadicField f5(5);
  CHECK(root_valuations(build_polygon(poly({5, 1, 1}), f5)) == RootValMultiset{{rv(1), 1}, {rv(0), 1}});
  CHECK(root_valuations(build_polygon(poly({0, 4, 1}), f5)) == RootValMultiset{{RootVal::inf(), 1}, {rv(0), 1}});
  CHECK(root_valuations(build_polygon(poly({0, 0, 1}), f5)) == RootValMultiset{{RootVal::inf(), 2}});
  CHECK(root_valuations(build_polygon(poly({-5, 0, 1}), f5)) == RootValMultiset{{rv(1, 2), 2}});
}

TEST_CASE("isolated_slopes examples") {
  const PadicField f5(5);
  auto a = isolated_slopes(build_polygon(poly({5, 1, 1}), f5));
  REQUIRE(a.size() == 2);
  CHECK(a[0].position == 0);
  CHECK(a[1].position == 1);
  CHECK(isolated_slopes(build_polygon(poly({-5, 0, 1}), f5)).empty());
  auto c = isolated_slopes(build_polygon(poly({-5, 1}), f5));
  REQUIRE(c.size() == 1);
  CHECK(c[0].slope == mpq_class(-1));
  // interior isolated slope: roots of valuation 2, 1, 1 give (0,4),(1,2),(3,0)
  auto d = isolated_slopes(build_polygon(hk::testing::from_roots<Rational>({Rational(25), Rational(5), Rational(10)}), f5));
  REQUIRE(d.size() == 1);
  CHECK(d[0].slope == mpq_class(-2));
}

TEST_CASE("isolate_leftmost_root examples") {
  const PadicField f5(5);
  auto a = isolate_leftmost_root(poly({5, 1, 1}), f5);
  CHECK(f5.valuation(a.gamma_num()) == Val(1));
  auto b = isolate_leftmost_root(poly({25, 1, 1}), f5);
  CHECK(f5.valuation(b.gamma_num()) == Val(2));
  CHECK(b.g1 == shift_compose(b.g, Rational(1)));
  try {
    isolate_leftmost_root(poly({5, 5, 1}), f5);
    FAIL("expected NOT_LEFTMOST_ISOLATED");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotLeftmostIsolated);
  }
  CHECK_THROWS_AS(isolate_leftmost_root(poly({1, 1, 1}), f5), Error);
}

template <ValuedField F>
void check_factored_corpora(const F& field, std::uint64_t seed, int corpora) {
  Rng rng(seed);
  using E = typename F::Elem;
  for (int c = 0; c < corpora; ++c) {
    std::vector<E> roots;
    const int n = static_cast<int>(rng.uniform(1, 6));
    for (int i = 0; i < n; ++i) {
      if (rng.coin(0.1)) {
        roots.push_back(E());
      } else {
        roots.push_back(hk::testing::random_with_valuation(field, rng, rng.uniform(-2, 4)));
      }
    }
    // a non-monic multiple does not move the roots
    auto f = hk::testing::from_roots(roots) * hk::testing::random_K(field, rng, 0.0);
    CHECK(root_valuations(build_polygon(f, field)) == multiset_of(roots, field));
  }
}

TEST_CASE("factored corpora") {
  check_factored_corpora(PadicField(2), 71, 20);
  check_factored_corpora(PadicField(3), 72, 20);
  check_factored_corpora(PadicField(5), 73, 20);
  check_factored_corpora(TadicField{}, 74, 20);
}

template <ValuedField F>
void check_polygon_properties(const F& field, std::uint64_t seed, int trials) {
  Rng rng(seed);
  using E = typename F::Elem;
  for (int i = 0; i < trials; ++i) {
    auto f = hk::testing::random_poly_K(field, rng, static_cast<int>(rng.uniform(0, 7)));
    if (f.is_zero()) continue;
    const auto poly = build_polygon(f, field);

    std::int64_t total = poly.ord0;
    for (std::size_t k = 0; k < poly.segments.size(); ++k) {
      total += poly.segments[k].length;
      if (k > 0) CHECK(poly.segments[k - 1].slope < poly.segments[k].slope);
    }
    CHECK(total == poly.degree);
    for (const auto& [x, y] : poly.vertices) CHECK(field.valuation(f[static_cast<std::size_t>(x)]) == Val(y));
    // every coefficient point lies on or above the hull
    for (std::size_t k = 0; k + 1 < poly.vertices.size(); ++k) {
      const auto [x0, y0] = poly.vertices[k];
      const auto [x1, y1] = poly.vertices[k + 1];
      for (auto x = x0; x <= x1; ++x) {
        const Val v = field.valuation(f[static_cast<std::size_t>(x)]);
        if (v.is_inf()) continue;
        CHECK(mpz_class(v.value() - y0) * (x1 - x0) >= mpz_class(y1 - y0) * (x - x0));
      }
    }

    // sum rule
    mpq_class sum = 0;
    for (const auto& [val, mult] : root_valuations(poly)) {
      if (!val.is_inf()) sum += val.value() * mult;
    }
    const Val trailing = field.valuation(f[static_cast<std::size_t>(poly.ord0)]);
    const Val leading = field.valuation(f.lead());
    CHECK(sum == mpq_class(trailing.value() - leading.value()));

    // f(pi X) moves every finite root valuation down by one
    const auto scaled = compose(f, Poly<E>({E(), field.uniformizer()}));
    RootValMultiset shifted;
    for (const auto& [val, mult] : root_valuations(poly)) {
      shifted[val.is_inf() ? val : RootVal(mpq_class(val.value() - 1))] += mult;
    }
    CHECK(root_valuations(build_polygon(scaled, field)) == shifted);
  }
}

TEST_CASE("polygon invariants, sum rule and scaling") {
  check_polygon_properties(PadicField(5), 81, 200);
  check_polygon_properties(PadicField(2), 82, 200);
  check_polygon_properties(TadicField{}, 83, 60);
}
