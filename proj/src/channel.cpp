#include "rsee/channel.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rsee {

namespace {

void check_positions(const std::vector<std::size_t>& positions, std::size_t expected,
                     std::vector<bool>& used, const char* what) {
  if (positions.size() != expected) {
    throw std::domain_error(std::string(what) + " position count " +
                            std::to_string(positions.size()) + " != " + std::to_string(expected));
  }
  for (auto p : positions) {
    if (p >= used.size()) {
      throw std::domain_error(std::string(what) + " position " + std::to_string(p) +
                              " out of range");
    }
    if (used[p]) {
      throw std::domain_error("position " + std::to_string(p) + " listed more than once");
    }
    used[p] = true;
  }
}

}  // namespace

ReceivedWord corrupt(const Field& field, const EvaluationVector& codeword, const ChannelSpec& spec) {
  const std::size_t n = codeword.size();
  if (spec.t + spec.l > n) throw std::domain_error("t + l exceeds the block length");

  std::mt19937_64 rng(spec.seed);
  std::vector<bool> used(n, false);
  std::vector<std::size_t> errors;
  std::vector<std::size_t> erasures;

  if (spec.error_positions) {
    check_positions(*spec.error_positions, spec.t, used, "error");
    errors = *spec.error_positions;
  }
  if (spec.erasure_positions) {
    check_positions(*spec.erasure_positions, spec.l, used, "erasure");
    erasures = *spec.erasure_positions;
  }

  // Random positions come from a shuffle of whatever is still free.
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < n; ++i) {
    if (!used[i]) free.push_back(i);
  }
  std::shuffle(free.begin(), free.end(), rng);
  std::size_t next = 0;
  if (!spec.error_positions) {
    errors.assign(free.begin(), free.begin() + static_cast<std::ptrdiff_t>(spec.t));
    next = spec.t;
  }
  if (!spec.erasure_positions) {
    const auto first = free.begin() + static_cast<std::ptrdiff_t>(next);
    erasures.assign(first, first + static_cast<std::ptrdiff_t>(spec.l));
  }

  std::uniform_int_distribution<std::uint32_t> nonzero(1, field.order());
  EvaluationVector symbols = codeword;
  for (auto p : errors) symbols[p] = Field::add(symbols[p], Element{nonzero(rng)});
  return ReceivedWord(std::move(symbols), std::move(erasures));
}

std::pair<std::size_t, std::size_t> sample_within_radius(std::size_t d, std::mt19937_64& rng) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t t = 0; 2 * t < d; ++t) {
    for (std::size_t l = 0; 2 * t + l < d; ++l) pairs.emplace_back(t, l);
  }
  std::uniform_int_distribution<std::size_t> pick(0, pairs.size() - 1);
  return pairs[pick(rng)];
}

Message random_message(const CodeParams& params, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> symbol(0, params.field().order());
  Message m(params.k());
  for (auto& e : m) e = Element{symbol(rng)};
  return m;
}

}  // namespace rsee
