#include "rsee/codec.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "rsee/key_equation.hpp"

namespace rsee {

CodeParams::CodeParams(std::shared_ptr<const Field> field, std::size_t k)
    : field_(std::move(field)), n_(0), k_(k) {
  if (!field_) throw std::invalid_argument("code needs a field");
  n_ = field_->order();
  if (k_ < 1 || k_ >= n_) {
    throw std::invalid_argument("message length k must satisfy 1 <= k < n = " + std::to_string(n_));
  }
}

ReceivedWord::ReceivedWord(EvaluationVector symbols, std::vector<std::size_t> erasures)
    : symbols_(std::move(symbols)), erasures_(std::move(erasures)) {
  std::sort(erasures_.begin(), erasures_.end());
  for (std::size_t i = 0; i < erasures_.size(); ++i) {
    if (erasures_[i] >= symbols_.size()) {
      throw std::domain_error("erasure position " + std::to_string(erasures_[i]) + " out of range");
    }
    if (i > 0 && erasures_[i] == erasures_[i - 1]) {
      throw std::domain_error("duplicate erasure position " + std::to_string(erasures_[i]));
    }
    symbols_[erasures_[i]] = Element::zero();
  }
}

bool ReceivedWord::is_erased(std::size_t position) const {
  return std::binary_search(erasures_.begin(), erasures_.end(), position);
}

std::string_view to_string(FailureCause cause) {
  switch (cause) {
    case FailureCause::DivisionInexact: return "DivisionInexact";
    case FailureCause::DegreeOverflow: return "DegreeOverflow";
    case FailureCause::LocatorMismatch: return "LocatorMismatch";
    case FailureCause::Ambiguous: return "Ambiguous";
  }
  return "Unknown";
}

DecodeResult DecodeResult::success(Message message, Polynomial locator, Polynomial combination) {
  DecodeResult r;
  r.message_ = std::move(message);
  r.locator_ = std::move(locator);
  r.combination_ = std::move(combination);
  return r;
}

DecodeResult DecodeResult::failure(FailureCause cause, Polynomial locator,
                                   Polynomial combination) {
  DecodeResult r;
  r.cause_ = cause;
  r.locator_ = std::move(locator);
  r.combination_ = std::move(combination);
  return r;
}

std::string_view to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::ErrorsOnly: return "errors-only";
    case Algorithm::Gao: return "gao";
    case Algorithm::Truong: return "truong";
    case Algorithm::Suggested: return "suggested";
  }
  return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (auto a : {Algorithm::ErrorsOnly, Algorithm::Gao, Algorithm::Truong, Algorithm::Suggested}) {
    if (to_string(a) == name) return a;
  }
  return std::nullopt;
}

EvaluationVector encode(const CodeParams& params, const Message& message) {
  if (message.size() != params.k()) {
    throw std::domain_error("message length " + std::to_string(message.size()) + " != k = " +
                            std::to_string(params.k()));
  }
  for (auto m : message) {
    if (!params.field().contains(m)) throw std::domain_error("message symbol outside the field");
  }
  return evaluate_all(params.field(), Polynomial(message), params.n());
}

Polynomial erasure_locator(const CodeParams& params, std::span<const std::size_t> positions) {
  const Field& f = params.field();
  std::vector<bool> seen(params.n(), false);
  Polynomial locator = Polynomial::constant(Element::one());
  for (auto j : positions) {
    if (j >= params.n()) {
      throw std::domain_error("erasure position " + std::to_string(j) + " out of range");
    }
    if (seen[j]) throw std::domain_error("duplicate erasure position " + std::to_string(j));
    seen[j] = true;
    locator = poly_mul(f, locator, Polynomial{f.alpha_pow(static_cast<std::int64_t>(j)).value(), 1});
  }
  return locator;
}

namespace {

// Stop degree for a key equation over a modulus of degree `mod_deg`:
// degree(P) = degree(W) + k - 1 < (mod_deg + k) / 2 for every correctable pattern.
std::size_t stop_degree(std::size_t mod_deg, std::size_t k) { return half_ceil(mod_deg + k); }

bool passes_self_check(const CodeParams& params, const ReceivedWord& received,
                       const Message& message, const Polynomial& locator) {
  UncountedScope quiet;
  const Field& f = params.field();
  const auto codeword = encode(params, message);
  for (std::size_t i = 0; i < params.n(); ++i) {
    if (received.is_erased(i) || codeword[i] == received.symbols()[i]) continue;
    if (!poly_eval(f, locator, f.alpha_pow(static_cast<std::int64_t>(i))).is_zero()) return false;
  }
  return true;
}

// Step 3: M = numerator / divisor, where divisor is W (or W * Lambda).
DecodeResult recover(const CodeParams& params, const ReceivedWord& received,
                     const KeyEquationSolution& sol, const Polynomial& divisor,
                     const DecodeOptions& options) {
  ops::enter(Step::Recover);
  const std::size_t l = received.erasures().size();
  const std::size_t cap = (params.d() - l - 1) / 2;
  if (!sol.locator.degree_below(cap + 1)) {
    return DecodeResult::failure(FailureCause::LocatorMismatch, sol.locator, sol.combination);
  }
  auto [quotient, remainder] = poly_divmod(params.field(), sol.combination, divisor);
  if (!remainder.is_zero()) {
    return DecodeResult::failure(FailureCause::DivisionInexact, sol.locator, sol.combination);
  }
  if (!quotient.degree_below(params.k())) {
    return DecodeResult::failure(FailureCause::DegreeOverflow, sol.locator, sol.combination);
  }
  Message message(params.k());
  for (std::size_t i = 0; i < params.k(); ++i) message[i] = quotient.coeff(i);
  if (options.self_check && !passes_self_check(params, received, message, sol.locator)) {
    return DecodeResult::failure(FailureCause::LocatorMismatch, sol.locator, sol.combination);
  }
  return DecodeResult::success(std::move(message), sol.locator, sol.combination);
}

void check_length(const CodeParams& params, std::size_t size) {
  if (size != params.n()) {
    throw std::domain_error("received word length " + std::to_string(size) + " != n = " +
                            std::to_string(params.n()));
  }
}

}  // namespace

DecodeResult decode_errors_only(const CodeParams& params, const EvaluationVector& received,
                                const DecodeOptions& options) {
  check_length(params, received.size());
  const Field& f = params.field();
  const ReceivedWord word(received);

  ops::enter(Step::Interpolate);
  Polynomial t = interpolate_all(f, received);

  ops::enter(Step::KeyEquation);
  const auto sol = solve(f, {Polynomial::cyclic_modulus(params.n()), std::move(t),
                             stop_degree(params.n(), params.k())});

  return recover(params, word, sol, sol.locator, options);
}

DecodeResult decode_gao(const CodeParams& params, const ReceivedWord& received,
                        const DecodeOptions& options) {
  check_length(params, received.size());
  const std::size_t l = received.erasures().size();
  if (l >= params.d()) return DecodeResult::failure(FailureCause::DegreeOverflow);
  const Field& f = params.field();

  ops::enter(Step::Interpolate);
  std::vector<Point> points;
  points.reserve(params.n() - l);
  for (std::size_t i = 0; i < params.n(); ++i) {
    if (!received.is_erased(i)) points.push_back({i, received.symbols()[i]});
  }
  Polynomial subset_interp = interpolate_subset(f, points);

  ops::enter(Step::Prepare);
  const Polynomial lambda = erasure_locator(params, received.erasures());
  Polynomial modulus = cyclotomic_quotient(f, lambda, params.n());

  ops::enter(Step::KeyEquation);
  const std::size_t mod_deg = params.n() - l;
  const auto sol = solve(f, {std::move(modulus), std::move(subset_interp),
                             stop_degree(mod_deg, params.k())});

  return recover(params, received, sol, sol.locator, options);
}

DecodeResult decode_truong(const CodeParams& params, const ReceivedWord& received,
                           const DecodeOptions& options) {
  check_length(params, received.size());
  const std::size_t l = received.erasures().size();
  if (l >= params.d()) return DecodeResult::failure(FailureCause::DegreeOverflow);
  const Field& f = params.field();

  ops::enter(Step::Locator);
  const Polynomial lambda = erasure_locator(params, received.erasures());

  ops::enter(Step::Interpolate);
  const Polynomial t = interpolate_all(f, received.symbols());

  ops::enter(Step::Prepare);
  Polynomial known = reduce_cyclic(poly_mul(f, t, lambda), params.n());

  ops::enter(Step::KeyEquation);
  const auto sol = solve(f, {Polynomial::cyclic_modulus(params.n()), std::move(known),
                             half_ceil(params.n() + params.k() + l)});

  ops::enter(Step::Recover);
  const Polynomial divisor = poly_mul(f, sol.locator, lambda);
  return recover(params, received, sol, divisor, options);
}

DecodeResult decode_suggested(const CodeParams& params, const ReceivedWord& received,
                              const DecodeOptions& options) {
  check_length(params, received.size());
  const std::size_t l = received.erasures().size();
  if (l >= params.d()) return DecodeResult::failure(FailureCause::DegreeOverflow);
  const Field& f = params.field();

  ops::enter(Step::Interpolate);
  const Polynomial t = interpolate_all(f, received.symbols());

  ops::enter(Step::Prepare);
  const Polynomial lambda = erasure_locator(params, received.erasures());
  Polynomial modulus = cyclotomic_quotient(f, lambda, params.n());
  // T and the subset interpolant agree modulo (x^n - 1)/Lambda, so T may be
  // replaced by its remainder before the Euclid loop.
  Polynomial known = poly_divmod(f, t, modulus).remainder;

  ops::enter(Step::KeyEquation);
  const std::size_t mod_deg = params.n() - l;
  const auto sol = solve(f, {std::move(modulus), std::move(known), stop_degree(mod_deg, params.k())});

  return recover(params, received, sol, sol.locator, options);
}

DecodeResult decode(const CodeParams& params, const ReceivedWord& received, Algorithm algorithm,
                    const DecodeOptions& options) {
  switch (algorithm) {
    case Algorithm::ErrorsOnly:
      if (!received.erasures().empty()) {
        throw std::domain_error("errors-only decoding does not accept erasures");
      }
      return decode_errors_only(params, received.symbols(), options);
    case Algorithm::Gao: return decode_gao(params, received, options);
    case Algorithm::Truong: return decode_truong(params, received, options);
    case Algorithm::Suggested: return decode_suggested(params, received, options);
  }
  throw std::invalid_argument("unknown algorithm");
}

}  // namespace rsee
