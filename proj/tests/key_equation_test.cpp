#include <doctest.h>

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "rsee/codec.hpp"
#include "rsee/key_equation.hpp"
#include "rsee/spectral.hpp"

using namespace rsee;
using rsee::testing::word;

namespace {
const Field gf8(3);
const Polynomial kCyclic7 = Polynomial::cyclic_modulus(7);
}  // namespace

TEST_CASE("half_ceil rounds half-integer bounds up") {
  CHECK(half_ceil(10) == 5);
  CHECK(half_ceil(11) == 6);
  CHECK(half_ceil(1) == 1);
}

TEST_CASE("error-free operand exits before the first division") {
  const Polynomial t{3, 1, 4};
  const auto sol = solve(gf8, {kCyclic7, t, 5});
  CHECK(sol.locator == Polynomial{1});
  CHECK(sol.combination == t);
  CHECK(sol.iterations == 0);
}

TEST_CASE("zero operand yields (1, 0)") {
  const auto sol = solve(gf8, {kCyclic7, Polynomial{}, 5});
  CHECK(sol.locator == Polynomial{1});
  CHECK(sol.combination.is_zero());
}

TEST_CASE("single error at position 2 is located at alpha^2") {
  const auto t = interpolate_all(gf8, word({1, 2, 0, 3, 6, 7, 5}));
  const auto sol = solve(gf8, {kCyclic7, t, 5});
  CHECK(sol.locator == Polynomial{4, 1});  // x + alpha^2
  const auto [m, r] = poly_divmod(gf8, sol.combination, sol.locator);
  CHECK(r.is_zero());
  CHECK(m == Polynomial{0, 1});
}

TEST_CASE("every single error on encode(x) is located, checked against exhaustive search") {
  const auto pw = testing::power_table(0xB, 3);
  // Codebook of RS(7,3) via the reference field arithmetic.
  std::vector<std::vector<std::uint32_t>> codebook;
  for (std::uint32_t a = 0; a < 8; ++a) {
    for (std::uint32_t b = 0; b < 8; ++b) {
      for (std::uint32_t c = 0; c < 8; ++c) {
        std::vector<std::uint32_t> cw(7);
        for (std::size_t i = 0; i < 7; ++i) cw[i] = testing::ref_eval({a, b, c}, pw[i], 0xB, 3);
        codebook.push_back(cw);
      }
    }
  }
  const auto base = evaluate_all(gf8, Polynomial{0, 1}, 7);
  for (std::size_t pos = 0; pos < 7; ++pos) {
    for (std::uint32_t e = 1; e < 8; ++e) {
      auto r = base;
      r[pos] = Field::add(r[pos], Element{e});
      // Exhaustive search: exactly one codeword within distance 1, differing at pos.
      int close = 0;
      std::size_t diff_pos = 99;
      for (const auto& cw : codebook) {
        std::size_t dist = 0;
        for (std::size_t i = 0; i < 7; ++i) {
          if (cw[i] != r[i].value()) {
            ++dist;
            diff_pos = i;
          }
        }
        if (dist <= 1) ++close;
        if (dist == 1) REQUIRE(diff_pos == pos);
      }
      REQUIRE(close == 1);

      const auto sol = solve(gf8, {kCyclic7, interpolate_all(gf8, r), 5});
      REQUIRE(sol.locator == Polynomial{pw[pos], 1});
    }
  }
}

TEST_CASE("malformed problems are rejected") {
  CHECK_THROWS_AS(solve(gf8, {Polynomial{}, Polynomial{}, 1}), std::domain_error);
  CHECK_THROWS_AS(solve(gf8, {Polynomial{1, 1}, Polynomial{1, 1}, 1}), std::domain_error);
  CHECK_THROWS_AS(solve(gf8, {kCyclic7, Polynomial{1}, 0}), std::domain_error);
  CHECK_THROWS_AS(solve(gf8, {kCyclic7, Polynomial{1}, 8}), std::domain_error);
}

TEST_CASE("congruence, degree cap and cofactor identity on random problems") {
  for (unsigned m : {3u, 4u, 8u}) {
    CAPTURE(m);
    const Field f(m);
    std::mt19937_64 rng(300 + m);
    for (int trial = 0; trial < 2000; ++trial) {
      // Random monic modulus of degree 2..20.
      const auto mod_deg = std::uniform_int_distribution<std::size_t>(2, 20)(rng);
      std::vector<Element> mc(mod_deg + 1);
      for (auto& c : mc) c = testing::random_element(f, rng);
      mc[mod_deg] = Element::one();
      const Polynomial modulus(mc);
      const auto known = testing::random_poly(f, rng, mod_deg);
      const auto stop = std::uniform_int_distribution<std::size_t>(1, mod_deg)(rng);

      std::vector<EuclidRow> trace;
      const auto sol = solve(f, {modulus, known, stop}, &trace);
      REQUIRE(sol.locator.is_monic());
      REQUIRE(sol.combination.degree_below(stop));
      const auto lhs = poly_add(poly_mul(f, sol.locator, known), sol.combination);
      REQUIRE(poly_divmod(f, lhs, modulus).remainder.is_zero());
      // Degree of the locator never exceeds deg(modulus) - stop.
      REQUIRE(sol.locator.degree_below(mod_deg - stop + 1));

      REQUIRE(trace.size() == sol.iterations + 2);
      for (const auto& row : trace) {
        REQUIRE(poly_add(poly_mul(f, row.u, modulus), poly_mul(f, row.v, known)) == row.r);
      }
    }
  }
}

TEST_CASE("tracing does not change the operation count") {
  const auto t = interpolate_all(gf8, word({1, 1, 0, 3, 6, 1, 5}));
  OpCounter plain, traced;
  {
    CountingScope s(plain);
    solve(gf8, {kCyclic7, t, 5});
  }
  {
    CountingScope s(traced);
    std::vector<EuclidRow> trace;
    solve(gf8, {kCyclic7, t, 5}, &trace);
  }
  CHECK(plain == traced);
  CHECK(plain.total().iterations > 0);
}
