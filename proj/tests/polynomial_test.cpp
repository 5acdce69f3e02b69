#include <doctest.h>

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "rsee/polynomial.hpp"

using namespace rsee;
using rsee::testing::random_poly;
using rsee::testing::values_of;

namespace {
const Field gf8(3);
}

TEST_CASE("normalization and degree") {
  const Polynomial zero;
  CHECK(zero.is_zero());
  CHECK_FALSE(zero.degree().has_value());
  CHECK(zero.degree_below(0));
  CHECK(Polynomial{0, 0, 0}.is_zero());
  CHECK(Polynomial{1, 2, 0, 0} == Polynomial{1, 2});
  CHECK(*Polynomial{1, 2}.degree() == 1);
  CHECK_FALSE(Polynomial{1, 2}.degree_below(1));
  CHECK(Polynomial{1, 2}.degree_below(2));
  CHECK(Polynomial::monomial(Element{3}, 4) == Polynomial{0, 0, 0, 0, 3});
  CHECK(Polynomial::cyclic_modulus(7) == Polynomial{1, 0, 0, 0, 0, 0, 0, 1});
}

TEST_CASE("poly_add") {
  CHECK(poly_add(Polynomial{1, 1}, Polynomial{1, 1}).is_zero());
  CHECK(poly_add(Polynomial{4, 5, 6}, Polynomial{}) == Polynomial{4, 5, 6});
  // (x^2 + 3) + (x + 3) = x^2 + x
  CHECK(poly_add(Polynomial{3, 0, 1}, Polynomial{3, 1}) == Polynomial{0, 1, 1});
}

TEST_CASE("poly_mul") {
  CHECK(poly_mul(gf8, Polynomial{1, 1}, Polynomial{1, 1}) == Polynomial{1, 0, 1});
  CHECK(poly_mul(gf8, Polynomial{4, 5, 6}, Polynomial{1}) == Polynomial{4, 5, 6});
  // (x + 2)(x + 4) = x^2 + 6x + 3
  CHECK(poly_mul(gf8, Polynomial{2, 1}, Polynomial{4, 1}) == Polynomial{3, 6, 1});
  CHECK(poly_mul(gf8, Polynomial{2, 1}, Polynomial{}).is_zero());
}

TEST_CASE("poly_divmod") {
  auto [q1, r1] = poly_divmod(gf8, Polynomial{1, 0, 1}, Polynomial{1, 1});
  CHECK(q1 == Polynomial{1, 1});
  CHECK(r1.is_zero());

  auto [q2, r2] = poly_divmod(gf8, Polynomial{4, 5, 6}, Polynomial{1});
  CHECK(q2 == Polynomial{4, 5, 6});
  CHECK(r2.is_zero());

  // x^3 + x + 1 = (x^2 + 2) * x + (3x + 1)
  auto [q3, r3] = poly_divmod(gf8, Polynomial{1, 1, 0, 1}, Polynomial{2, 0, 1});
  CHECK(q3 == Polynomial{0, 1});
  CHECK(r3 == Polynomial{1, 3});

  auto [q4, r4] = poly_divmod(gf8, Polynomial{3}, Polynomial{1, 1});
  CHECK(q4.is_zero());
  CHECK(r4 == Polynomial{3});

  CHECK_THROWS_AS(poly_divmod(gf8, Polynomial{1}, Polynomial{}), std::domain_error);
}

TEST_CASE("poly_eval") {
  CHECK(poly_eval(gf8, Polynomial{}, Element{5}) == Element{0});
  CHECK(poly_eval(gf8, Polynomial{0, 1}, gf8.alpha_pow(3)) == Element{3});
  CHECK(poly_eval(gf8, Polynomial{1, 1, 1}, Element{1}) == Element{1});
}

TEST_CASE("reduce_cyclic equals the remainder mod x^n - 1") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const auto p = random_poly(gf8, rng, 20);
    const auto expected = poly_divmod(gf8, p, Polynomial::cyclic_modulus(7)).remainder;
    REQUIRE(reduce_cyclic(p, 7) == expected);
  }
}

TEST_CASE("text form round trip") {
  CHECK(Polynomial{}.to_string() == "0");
  CHECK(Polynomial{3, 0, 1}.to_string() == "3 0 1");
  CHECK(Polynomial::parse("3 0 1", gf8) == Polynomial{3, 0, 1});
  CHECK(Polynomial::parse("  0 ", gf8).is_zero());
  CHECK_THROWS_AS(Polynomial::parse("3 x", gf8), std::invalid_argument);
  CHECK_THROWS_AS(Polynomial::parse("8", gf8), std::invalid_argument);
  std::mt19937_64 rng(2);
  for (int i = 0; i < 100; ++i) {
    const auto p = random_poly(gf8, rng, 12);
    REQUIRE(Polynomial::parse(p.to_string(), gf8) == p);
  }
}

TEST_CASE("ring properties on random inputs") {
  for (unsigned m : {3u, 4u, 8u}) {
    CAPTURE(m);
    const Field f(m);
    std::mt19937_64 rng(100 + m);
    for (int i = 0; i < 10000; ++i) {
      const auto a = random_poly(f, rng, 8);
      const auto b = random_poly(f, rng, 8);
      const auto c = random_poly(f, rng, 8);
      REQUIRE(poly_mul(f, a, b) == poly_mul(f, b, a));
      REQUIRE(poly_mul(f, poly_mul(f, a, b), c) == poly_mul(f, a, poly_mul(f, b, c)));
      REQUIRE(poly_mul(f, a, poly_add(b, c)) == poly_add(poly_mul(f, a, b), poly_mul(f, a, c)));
      REQUIRE(poly_add(poly_add(a, b), c) == poly_add(a, poly_add(b, c)));

      const auto z = testing::random_element(f, rng);
      REQUIRE(poly_eval(f, poly_mul(f, a, b), z) == f.mul(poly_eval(f, a, z), poly_eval(f, b, z)));

      if (!b.is_zero()) {
        const auto [q, r] = poly_divmod(f, a, b);
        REQUIRE(poly_add(poly_mul(f, b, q), r) == a);
        REQUIRE(r.degree_below(*b.degree()));
      }
    }
  }
}

TEST_CASE("poly_eval matches the naive power sum") {
  const Field f(8);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 1000; ++i) {
    const auto p = random_poly(f, rng, 16);
    const auto x = testing::random_element(f, rng);
    REQUIRE(poly_eval(f, p, x).value() ==
            testing::ref_eval(values_of(p), x.value(), f.prim_poly(), 8));
  }
}

TEST_CASE("kernel multiplication counts depend only on degrees") {
  const Field f(4);
  auto count = [&](const Polynomial& a, const Polynomial& b) {
    OpCounter c;
    CountingScope scope(c);
    poly_mul(f, a, b);
    poly_divmod(f, poly_mul(f, a, b), b);
    return c.total().mults;
  };
  // Same degrees, different zero patterns, non-monic divisor.
  CHECK(count(Polynomial{1, 2, 3, 4}, Polynomial{5, 6, 7}) ==
        count(Polynomial{0, 0, 0, 4}, Polynomial{0, 0, 7}));
}
