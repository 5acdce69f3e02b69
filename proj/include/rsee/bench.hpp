#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "rsee/codec.hpp"
#include "rsee/op_count.hpp"

namespace rsee {

// Corruption distribution for bench(). Unset t or l are drawn per trial:
// l uniform in [0, d - 1], then t uniform in [0, (d - l - 1) / 2].
struct BenchSpec {
  std::size_t trials = 0;
  std::optional<std::size_t> t;
  std::optional<std::size_t> l;
  std::uint64_t seed = 0;
};

// Counts one decode of one trial, per pipeline step.
struct DecodeCost {
  Algorithm algorithm;
  OpCounter counter;
  bool ok = false;
};

struct BenchTrial {
  std::size_t t = 0;
  std::size_t l = 0;
  std::vector<DecodeCost> decodes;

  // Null when the algorithm did not run on this trial.
  const DecodeCost* find(Algorithm a) const;
};

struct OpCountReport {
  std::vector<Algorithm> algorithms;
  std::vector<BenchTrial> trials;

  bool empty() const { return trials.empty(); }
  // Mean cost of one step (or all steps, for nullopt) over the trials the
  // algorithm ran on.
  double mean_mults(Algorithm a, std::optional<Step> step = std::nullopt) const;
  double mean_invs(Algorithm a, std::optional<Step> step = std::nullopt) const;
  double mean_iterations(Algorithm a, std::optional<Step> step = std::nullopt) const;

  // Trials in which the suggested pipeline used more multiplications (resp.
  // more Euclid iterations) than Truong's. Only trials with l >= 1 count.
  std::size_t suggested_mult_violations() const;
  std::size_t suggested_iteration_violations() const;
  // Trials in which some decoder failed.
  std::size_t failures() const;
};

// Runs the Gao, Truong and suggested decoders (plus errors-only on trials with
// l = 0) on identical corrupted codewords, counting field operations.
OpCountReport bench(const CodeParams& params, const BenchSpec& spec);

// Fixed-width table of mean counts per algorithm and step.
void print_report(std::ostream& out, const OpCountReport& report);
// CSV with header algorithm,step,mults,invs,iterations (means; step "total" sums).
void write_csv(std::ostream& out, const OpCountReport& report);

}  // namespace rsee
