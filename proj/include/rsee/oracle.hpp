#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "rsee/codec.hpp"

namespace rsee {

// Largest code the brute-force oracle will enumerate (q^k messages).
inline constexpr std::uint64_t kOracleMaxCodewords = std::uint64_t{1} << 20;

struct NearestCodeword {
  Message message;         // one minimizer (the first in enumeration order)
  std::size_t distance;    // Hamming distance on unerased positions
  std::size_t minimizers;  // how many codewords attain `distance`
};

// Exhaustive minimum-distance search over all q^k codewords. Codewords are
// built from the generator rows (alpha^(i*j))_j directly, not via the
// transform routines the decoders use. Throws std::domain_error when
// q^k > kOracleMaxCodewords.
NearestCodeword nearest_codeword(const CodeParams& params, const ReceivedWord& received);

// nearest_codeword() as a decoder: Failure(Ambiguous) on ties.
DecodeResult oracle_decode(const CodeParams& params, const ReceivedWord& received);

}  // namespace rsee
