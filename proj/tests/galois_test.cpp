#include <doctest.h>

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "rsee/galois.hpp"

using namespace rsee;
using rsee::testing::clmul_reduce;
using rsee::testing::power_table;

TEST_CASE("add is xor") {
  CHECK(Field::add(Element{5}, Element{5}) == Element{0});
  CHECK(Field::add(Element{6}, Element{0}) == Element{6});
  CHECK(Field::add(Element{3}, Element{6}) == Element{5});
}

TEST_CASE("GF(8) multiplication and inverse match the shift-and-reduce values") {
  const Field f(3);
  REQUIRE(f.prim_poly() == 0xB);
  CHECK(clmul_reduce(3, 3, 0xB, 3) == 5);
  CHECK(f.mul(Element{3}, Element{3}) == Element{5});
  CHECK(f.mul(Element{0}, Element{7}) == Element{0});
  CHECK(clmul_reduce(7, 5, 0xB, 3) == 6);
  CHECK(f.mul(Element{7}, Element{5}) == Element{6});

  CHECK(f.inv(Element{1}) == Element{1});
  CHECK(f.inv(Element{2}) == Element{5});
  CHECK(clmul_reduce(2, 5, 0xB, 3) == 1);
  CHECK_THROWS_AS(f.inv(Element{0}), std::domain_error);
}

TEST_CASE("alpha_pow reduces the exponent mod n") {
  const Field f(3);
  CHECK(f.alpha_pow(0) == Element{1});
  CHECK(f.alpha_pow(3) == Element{3});
  CHECK(f.alpha_pow(7) == Element{1});
  CHECK(f.alpha_pow(-1) == Element{5});
  CHECK(f.alpha_pow(-7) == Element{1});
  CHECK(f.alpha() == Element{2});
}

TEST_CASE("tables agree with shift-and-reduce for every element, m = 3..8") {
  for (unsigned m = 3; m <= 8; ++m) {
    CAPTURE(m);
    const Field f(m);
    const auto pw = power_table(f.prim_poly(), m);
    for (std::uint32_t i = 0; i < f.order(); ++i) {
      REQUIRE(f.alpha_pow(i).value() == pw[i]);
      REQUIRE(f.log(Element{pw[i]}) == i);
    }
    for (std::uint32_t a = 0; a < f.size(); ++a) {
      for (std::uint32_t b = 0; b < f.size(); ++b) {
        REQUIRE(f.mul(Element{a}, Element{b}).value() == clmul_reduce(a, b, f.prim_poly(), m));
      }
    }
  }
}

TEST_CASE("alpha has full order for every default polynomial") {
  for (unsigned m = Field::kMinDegree; m <= Field::kMaxDegree; ++m) {
    CAPTURE(m);
    const Field f(m);
    CHECK(f.alpha_pow(f.order()) == Element::one());
    // Every nonzero element is some power of alpha exactly once.
    std::vector<bool> seen(f.size(), false);
    for (std::uint32_t j = 0; j < f.order(); ++j) {
      const auto v = f.alpha_pow(j).value();
      REQUIRE_FALSE(seen[v]);
      seen[v] = true;
    }
  }
}

TEST_CASE("field axioms, exhaustive over GF(8)") {
  const Field f(3);
  for (std::uint32_t a = 0; a < 8; ++a) {
    const Element ea{a};
    if (a) CHECK(f.mul(ea, f.inv(ea)) == Element::one());
    if (a) CHECK(f.alpha_pow(f.log(ea)) == ea);
    for (std::uint32_t b = 0; b < 8; ++b) {
      const Element eb{b};
      CHECK(f.mul(ea, eb) == f.mul(eb, ea));
      CHECK(Field::add(ea, eb) == Field::add(eb, ea));
      for (std::uint32_t c = 0; c < 8; ++c) {
        const Element ec{c};
        CHECK(f.mul(f.mul(ea, eb), ec) == f.mul(ea, f.mul(eb, ec)));
        CHECK(Field::add(Field::add(ea, eb), ec) == Field::add(ea, Field::add(eb, ec)));
        CHECK(f.mul(ea, Field::add(eb, ec)) == Field::add(f.mul(ea, eb), f.mul(ea, ec)));
      }
    }
  }
}

TEST_CASE("field axioms on 10^4 random triples, m = 4, 8, 16") {
  for (unsigned m : {4u, 8u, 16u}) {
    CAPTURE(m);
    const Field f(m);
    std::mt19937_64 rng(m);
    for (int i = 0; i < 10000; ++i) {
      const auto a = testing::random_element(f, rng);
      const auto b = testing::random_element(f, rng);
      const auto c = testing::random_element(f, rng);
      REQUIRE(f.mul(a, b) == f.mul(b, a));
      REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      REQUIRE(f.mul(a, Field::add(b, c)) == Field::add(f.mul(a, b), f.mul(a, c)));
      if (!a.is_zero()) {
        REQUIRE(f.mul(a, f.inv(a)) == Element::one());
        REQUIRE(f.alpha_pow(f.log(a)) == a);
      }
    }
  }
}

TEST_CASE("construction rejects bad parameters") {
  CHECK_THROWS_AS(Field(2), std::invalid_argument);
  CHECK_THROWS_AS(Field(17), std::invalid_argument);
  // x^4 + x^3 + x^2 + x + 1 is irreducible but alpha has order 5.
  CHECK_THROWS_AS(Field(4, 0x1F), std::invalid_argument);
  // x^4 + 1 = (x + 1)^4
  CHECK_THROWS_AS(Field(4, 0x11), std::invalid_argument);
  // wrong degree
  CHECK_THROWS_AS(Field(4, 0xB), std::invalid_argument);
  // alternative primitive polynomial x^3 + x^2 + 1
  const Field alt(3, 0xD);
  CHECK(alt.alpha_pow(3) == Element{5});
}

TEST_CASE("element() range-checks") {
  const Field f(3);
  CHECK(f.element(7) == Element{7});
  CHECK_THROWS_AS(f.element(8), std::out_of_range);
  CHECK_THROWS_AS(f.log(Element{0}), std::domain_error);
}

TEST_CASE("counting scope sees multiplications and inversions") {
  const Field f(4);
  OpCounter counter;
  {
    CountingScope scope(counter);
    ops::enter(Step::Recover);
    f.mul(Element{3}, Element{7});
    f.mul(Element{0}, Element{7});
    f.inv(Element{9});
    {
      UncountedScope quiet;
      f.mul(Element{3}, Element{7});
    }
  }
  f.mul(Element{3}, Element{7});
  CHECK(counter.at(Step::Recover).mults == 2);
  CHECK(counter.at(Step::Recover).invs == 1);
  CHECK(counter.total().mults == 2);
}
