#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>

namespace rsee {

// Decoder pipeline stages. Every errors-and-erasures decoder is split into the
// same five stages so their costs can be compared side by side:
//   Locator      (0)  erasure locator product
//   Interpolate  (1)  full or subset interpolation of the received word
//   Prepare      (2a) modulus construction / operand reduction
//   KeyEquation  (2b) partial extended Euclid
//   Recover      (3)  final polynomial division
enum class Step : std::uint8_t { Locator, Interpolate, Prepare, KeyEquation, Recover };

inline constexpr std::size_t kStepCount = 5;
inline constexpr std::array<Step, kStepCount> kAllSteps = {
    Step::Locator, Step::Interpolate, Step::Prepare, Step::KeyEquation, Step::Recover};

std::string_view step_label(Step step);

struct StepCost {
  std::uint64_t mults = 0;
  std::uint64_t invs = 0;
  std::uint64_t iterations = 0;

  StepCost& operator+=(const StepCost& other) {
    mults += other.mults;
    invs += other.invs;
    iterations += other.iterations;
    return *this;
  }
  friend bool operator==(const StepCost&, const StepCost&) = default;
};

// Accumulates field multiplications, inversions and Euclid iterations,
// attributed to whichever step is current when the operation happens.
class OpCounter {
 public:
  void enter(Step step) { current_ = step; }
  Step current() const { return current_; }

  void count_mul() { ++steps_[index(current_)].mults; }
  void count_inv() { ++steps_[index(current_)].invs; }
  void count_iteration() { ++steps_[index(current_)].iterations; }

  const StepCost& at(Step step) const { return steps_[index(step)]; }
  StepCost total() const;
  void reset() { *this = OpCounter{}; }

  friend bool operator==(const OpCounter&, const OpCounter&) = default;

 private:
  static constexpr std::size_t index(Step s) { return static_cast<std::size_t>(s); }

  std::array<StepCost, kStepCount> steps_{};
  Step current_ = Step::Interpolate;
};

namespace detail {
// Counter receiving events on this thread, or null when counting is off.
inline thread_local OpCounter* active_counter = nullptr;
}  // namespace detail

// Routes all field operations on the current thread into `counter` for the
// lifetime of the scope. Scopes nest; the previous counter is restored.
class CountingScope {
 public:
  explicit CountingScope(OpCounter& counter) : previous_(detail::active_counter) {
    detail::active_counter = &counter;
  }
  ~CountingScope() { detail::active_counter = previous_; }
  CountingScope(const CountingScope&) = delete;
  CountingScope& operator=(const CountingScope&) = delete;

 private:
  OpCounter* previous_;
};

// Disables counting for the lifetime of the scope (diagnostic-only work).
class UncountedScope {
 public:
  UncountedScope() : previous_(detail::active_counter) { detail::active_counter = nullptr; }
  ~UncountedScope() { detail::active_counter = previous_; }
  UncountedScope(const UncountedScope&) = delete;
  UncountedScope& operator=(const UncountedScope&) = delete;

 private:
  OpCounter* previous_;
};

namespace ops {
inline void enter(Step step) {
  if (detail::active_counter) detail::active_counter->enter(step);
}
inline void mul() {
  if (detail::active_counter) detail::active_counter->count_mul();
}
inline void inv() {
  if (detail::active_counter) detail::active_counter->count_inv();
}
inline void iteration() {
  if (detail::active_counter) detail::active_counter->count_iteration();
}
}  // namespace ops

}  // namespace rsee
