#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "rsee/codec.hpp"
#include "rsee/galois.hpp"
#include "rsee/spectral.hpp"

namespace rsee {

// t additive errors and l erasures. Explicit position lists, when given, fix
// where they land and must have exactly t (resp. l) entries; otherwise
// positions are drawn from the seeded generator.
struct ChannelSpec {
  std::size_t t = 0;
  std::size_t l = 0;
  std::uint64_t seed = 0;
  std::optional<std::vector<std::size_t>> error_positions;
  std::optional<std::vector<std::size_t>> erasure_positions;
};

// Applies the channel: error positions get a uniformly random nonzero additive
// error, erased positions are marked and zero-filled. Deterministic for a
// fixed spec. Throws std::domain_error when t + l > n, when explicit lists are
// out of range, duplicated, overlapping, or disagree with t / l.
ReceivedWord corrupt(const Field& field, const EvaluationVector& codeword, const ChannelSpec& spec);

// Uniform (t, l) over all pairs with 2t + l < d.
std::pair<std::size_t, std::size_t> sample_within_radius(std::size_t d, std::mt19937_64& rng);

// Uniformly random message of length k.
Message random_message(const CodeParams& params, std::mt19937_64& rng);

}  // namespace rsee
