#include "rsee/selftest.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <ostream>
#include <random>
#include <string>

#include "rsee/channel.hpp"
#include "rsee/codec.hpp"
#include "rsee/oracle.hpp"
#include "rsee/spectral.hpp"

namespace rsee {

namespace {

bool field_axioms(unsigned m) {
  const Field f(m);
  for (std::uint32_t a = 0; a < f.size(); ++a) {
    const Element ea{a};
    if (a != 0 && f.mul(ea, f.inv(ea)) != Element::one()) return false;
    for (std::uint32_t b = 0; b < f.size(); ++b) {
      const Element eb{b};
      if (f.mul(ea, eb) != f.mul(eb, ea)) return false;
      for (std::uint32_t c = 0; c < f.size(); ++c) {
        const Element ec{c};
        if (f.mul(ea, f.add(eb, ec)) != f.add(f.mul(ea, eb), f.mul(ea, ec))) return false;
        if (f.mul(f.mul(ea, eb), ec) != f.mul(ea, f.mul(eb, ec))) return false;
      }
    }
  }
  return true;
}

bool interpolation_identity(unsigned m, std::size_t trials) {
  const Field f(m);
  const std::size_t n = f.order();
  std::mt19937_64 rng(m);
  std::uniform_int_distribution<std::uint32_t> sym(0, f.order());
  std::uniform_int_distribution<std::size_t> count(0, n - 1);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    std::vector<Element> values(n);
    for (auto& v : values) v = Element{sym(rng)};
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    const std::size_t l = count(rng);

    const ReceivedWord word(EvaluationVector(values), {order.begin(), order.begin() + static_cast<std::ptrdiff_t>(l)});
    std::vector<Point> kept;
    for (std::size_t i = 0; i < n; ++i) {
      if (!word.is_erased(i)) kept.push_back({i, values[i]});
    }
    const CodeParams params(std::make_shared<const Field>(f), 1);
    const Polynomial modulus = cyclotomic_quotient(f, erasure_locator(params, word.erasures()), n);
    const Polynomial full = interpolate_all(f, word.symbols());
    if (poly_divmod(f, full, modulus).remainder != interpolate_subset(f, kept)) return false;
  }
  return true;
}

bool radius(unsigned m, std::size_t k, std::size_t trials, bool with_oracle) {
  const CodeParams params(std::make_shared<const Field>(m), k);
  std::mt19937_64 rng(1000 + m);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const auto [t, l] = sample_within_radius(params.d(), rng);
    const Message msg = random_message(params, rng);
    const auto received = corrupt(params.field(), encode(params, msg), {t, l, rng(), {}, {}});
    for (auto a : {Algorithm::Gao, Algorithm::Truong, Algorithm::Suggested}) {
      const auto r = decode(params, received, a, {.self_check = true});
      if (!r || r.message() != msg) return false;
    }
    if (with_oracle) {
      const auto o = oracle_decode(params, received);
      if (!o || o.message() != msg) return false;
    }
  }
  return true;
}

}  // namespace

bool run_selftest(std::ostream& out) {
  const std::pair<std::string, std::function<bool()>> checks[] = {
      {"field axioms GF(8)", [] { return field_axioms(3); }},
      {"field axioms GF(16)", [] { return field_axioms(4); }},
      {"interpolation identity GF(16)", [] { return interpolation_identity(4, 200); }},
      {"interpolation identity GF(256)", [] { return interpolation_identity(8, 20); }},
      {"radius RS(7,3) with oracle", [] { return radius(3, 3, 200, true); }},
      {"radius RS(15,7)", [] { return radius(4, 7, 200, false); }},
  };
  bool all = true;
  for (const auto& [name, check] : checks) {
    bool ok = false;
    try {
      ok = check();
    } catch (const std::exception& e) {
      out << "error in " << name << ": " << e.what() << '\n';
    }
    out << (ok ? "ok   " : "FAIL ") << name << '\n';
    all = all && ok;
  }
  return all;
}

}  // namespace rsee
