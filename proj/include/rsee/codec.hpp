#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "rsee/galois.hpp"
#include "rsee/polynomial.hpp"
#include "rsee/spectral.hpp"

namespace rsee {

// (n, k, d) Reed-Solomon code over GF(2^m) with n = 2^m - 1 and d = n - k + 1.
class CodeParams {
 public:
  // Throws std::invalid_argument unless 1 <= k < n.
  CodeParams(std::shared_ptr<const Field> field, std::size_t k);

  const Field& field() const { return *field_; }
  const std::shared_ptr<const Field>& field_ptr() const { return field_; }
  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }
  std::size_t d() const { return n_ - k_ + 1; }

 private:
  std::shared_ptr<const Field> field_;
  std::size_t n_;
  std::size_t k_;
};

// Message coefficients m_0 .. m_(k-1), low to high.
using Message = std::vector<Element>;

// n received symbols and the sorted set of erased positions. Erased
// positions always hold the zero filler.
class ReceivedWord {
 public:
  ReceivedWord() = default;
  // Throws std::domain_error on an out-of-range or duplicate erasure position.
  explicit ReceivedWord(EvaluationVector symbols, std::vector<std::size_t> erasures = {});

  const EvaluationVector& symbols() const { return symbols_; }
  std::span<const std::size_t> erasures() const { return erasures_; }
  std::size_t size() const { return symbols_.size(); }
  bool is_erased(std::size_t position) const;

  friend bool operator==(const ReceivedWord&, const ReceivedWord&) = default;

 private:
  EvaluationVector symbols_;
  std::vector<std::size_t> erasures_;
};

enum class FailureCause {
  DivisionInexact,  // P/W or Q/(W*Lambda) left a remainder
  DegreeOverflow,   // too many erasures, or degree(M) >= k
  LocatorMismatch,  // degree(W) above the radius cap, or the self-check failed
  Ambiguous,        // several nearest codewords (brute-force oracle only)
};

std::string_view to_string(FailureCause cause);

class DecodeResult {
 public:
  static DecodeResult success(Message message, Polynomial locator, Polynomial combination);
  static DecodeResult failure(FailureCause cause, Polynomial locator = {},
                              Polynomial combination = {});

  bool ok() const { return message_.has_value(); }
  explicit operator bool() const { return ok(); }
  // Precondition: ok().
  const Message& message() const { return *message_; }
  // Precondition: !ok().
  FailureCause cause() const { return cause_; }

  // Key equation outputs: W and P (Q for Truong). Zero when decoding stopped
  // before the key equation was solved.
  const Polynomial& locator() const { return locator_; }
  const Polynomial& combination() const { return combination_; }

 private:
  std::optional<Message> message_;
  FailureCause cause_ = FailureCause::DegreeOverflow;
  Polynomial locator_;
  Polynomial combination_;
};

enum class Algorithm { ErrorsOnly, Gao, Truong, Suggested };

std::string_view to_string(Algorithm algorithm);
// Accepts "errors-only", "gao", "truong", "suggested".
std::optional<Algorithm> parse_algorithm(std::string_view name);

struct DecodeOptions {
  // Re-encode the result and require agreement with the received word at every
  // position that is neither erased nor a root of W.
  bool self_check = false;
};

// Nonsystematic encoding c_i = M(alpha^i). Throws std::domain_error when the
// message length is not k or a symbol lies outside the field.
EvaluationVector encode(const CodeParams& params, const Message& message);

// prod_{j in S} (x - alpha^j); 1 for an empty set. Throws std::domain_error on
// out-of-range or duplicate positions.
Polynomial erasure_locator(const CodeParams& params, std::span<const std::size_t> positions);

// Key equation W*T = P (mod x^n - 1). Corrects t errors when 2t < d.
DecodeResult decode_errors_only(const CodeParams& params, const EvaluationVector& received,
                                const DecodeOptions& options = {});

// The three errors-and-erasures pipelines below correct t errors and l
// erasures whenever 2t + l < d. Each returns Failure(DegreeOverflow) when l >= d.

// Subset interpolation of the unerased symbols, solved mod (x^n - 1)/Lambda.
DecodeResult decode_gao(const CodeParams& params, const ReceivedWord& received,
                        const DecodeOptions& options = {});

// W*(T*Lambda) = Q (mod x^n - 1), then M = Q / (W*Lambda).
DecodeResult decode_truong(const CodeParams& params, const ReceivedWord& received,
                           const DecodeOptions& options = {});

// Full interpolation T reduced mod (x^n - 1)/Lambda, solved over that modulus.
DecodeResult decode_suggested(const CodeParams& params, const ReceivedWord& received,
                              const DecodeOptions& options = {});

// Dispatch by algorithm. ErrorsOnly throws std::domain_error if the word has erasures.
DecodeResult decode(const CodeParams& params, const ReceivedWord& received, Algorithm algorithm,
                    const DecodeOptions& options = {});

}  // namespace rsee
