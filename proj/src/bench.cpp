#include "rsee/bench.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <random>

#include "rsee/channel.hpp"

namespace rsee {

namespace {

constexpr Algorithm kErasureDecoders[] = {Algorithm::Gao, Algorithm::Truong, Algorithm::Suggested};

StepCost cost_of(const OpCounter& counter, std::optional<Step> step) {
  return step ? counter.at(*step) : counter.total();
}

template <typename Field>
double mean_of(const OpCountReport& report, Algorithm a, std::optional<Step> step, Field field) {
  double sum = 0;
  std::size_t count = 0;
  for (const auto& trial : report.trials) {
    if (const auto* c = trial.find(a)) {
      sum += static_cast<double>(cost_of(c->counter, step).*field);
      ++count;
    }
  }
  return count ? sum / static_cast<double>(count) : 0.0;
}

}  // namespace

const DecodeCost* BenchTrial::find(Algorithm a) const {
  for (const auto& d : decodes) {
    if (d.algorithm == a) return &d;
  }
  return nullptr;
}

double OpCountReport::mean_mults(Algorithm a, std::optional<Step> step) const {
  return mean_of(*this, a, step, &StepCost::mults);
}

double OpCountReport::mean_invs(Algorithm a, std::optional<Step> step) const {
  return mean_of(*this, a, step, &StepCost::invs);
}

double OpCountReport::mean_iterations(Algorithm a, std::optional<Step> step) const {
  return mean_of(*this, a, step, &StepCost::iterations);
}

std::size_t OpCountReport::suggested_mult_violations() const {
  return static_cast<std::size_t>(std::count_if(trials.begin(), trials.end(), [](const auto& t) {
    return t.l >= 1 && t.find(Algorithm::Suggested)->counter.total().mults >
                           t.find(Algorithm::Truong)->counter.total().mults;
  }));
}

std::size_t OpCountReport::suggested_iteration_violations() const {
  return static_cast<std::size_t>(std::count_if(trials.begin(), trials.end(), [](const auto& t) {
    return t.l >= 1 && t.find(Algorithm::Suggested)->counter.at(Step::KeyEquation).iterations >
                           t.find(Algorithm::Truong)->counter.at(Step::KeyEquation).iterations;
  }));
}

std::size_t OpCountReport::failures() const {
  return static_cast<std::size_t>(std::count_if(trials.begin(), trials.end(), [](const auto& t) {
    return std::any_of(t.decodes.begin(), t.decodes.end(), [](const auto& d) { return !d.ok; });
  }));
}

OpCountReport bench(const CodeParams& params, const BenchSpec& spec) {
  OpCountReport report;
  if (spec.trials == 0) return report;
  report.algorithms.assign(std::begin(kErasureDecoders), std::end(kErasureDecoders));

  std::mt19937_64 rng(spec.seed);
  const std::size_t d = params.d();
  bool any_errors_only = false;

  for (std::size_t i = 0; i < spec.trials; ++i) {
    BenchTrial trial;
    trial.l = spec.l.value_or(std::uniform_int_distribution<std::size_t>(0, d - 1)(rng));
    const std::size_t cap = trial.l < d ? (d - trial.l - 1) / 2 : 0;
    trial.t = spec.t.value_or(std::uniform_int_distribution<std::size_t>(0, cap)(rng));

    const Message message = random_message(params, rng);
    ChannelSpec channel{trial.t, trial.l, rng(), std::nullopt, std::nullopt};
    const ReceivedWord received = corrupt(params.field(), encode(params, message), channel);

    auto run = [&](Algorithm a) {
      DecodeCost cost{a, {}, false};
      {
        CountingScope scope(cost.counter);
        const auto result = decode(params, received, a);
        cost.ok = result.ok() && result.message() == message;
      }
      trial.decodes.push_back(std::move(cost));
    };
    for (auto a : kErasureDecoders) run(a);
    if (trial.l == 0) {
      run(Algorithm::ErrorsOnly);
      any_errors_only = true;
    }
    report.trials.push_back(std::move(trial));
  }
  if (any_errors_only) report.algorithms.push_back(Algorithm::ErrorsOnly);
  return report;
}

void print_report(std::ostream& out, const OpCountReport& report) {
  out << "trials: " << report.trials.size() << '\n';
  if (report.empty()) return;
  out << std::left << std::setw(12) << "algorithm" << std::setw(7) << "step" << std::right
      << std::setw(14) << "mults" << std::setw(10) << "invs" << std::setw(12) << "iterations"
      << '\n';
  out << std::fixed << std::setprecision(1);
  for (auto a : report.algorithms) {
    auto row = [&](std::string_view label, std::optional<Step> step) {
      out << std::left << std::setw(12) << to_string(a) << std::setw(7) << label << std::right
          << std::setw(14) << report.mean_mults(a, step) << std::setw(10)
          << report.mean_invs(a, step) << std::setw(12) << report.mean_iterations(a, step) << '\n';
    };
    for (auto s : kAllSteps) row(step_label(s), s);
    row("total", std::nullopt);
  }
  out << "suggested > truong (mults) in " << report.suggested_mult_violations() << " trial(s)\n";
  out << "suggested > truong (euclid iterations) in " << report.suggested_iteration_violations()
      << " trial(s)\n";
  out << "trials with a decode failure: " << report.failures() << '\n';
}

void write_csv(std::ostream& out, const OpCountReport& report) {
  out << "algorithm,step,mults,invs,iterations\n";
  out << std::fixed << std::setprecision(3);
  for (auto a : report.algorithms) {
    auto row = [&](std::string_view label, std::optional<Step> step) {
      out << to_string(a) << ',' << label << ',' << report.mean_mults(a, step) << ','
          << report.mean_invs(a, step) << ',' << report.mean_iterations(a, step) << '\n';
    };
    for (auto s : kAllSteps) row(step_label(s), s);
    row("total", std::nullopt);
  }
}

}  // namespace rsee
