#include "rsee/op_count.hpp"

namespace rsee {

std::string_view step_label(Step step) {
  switch (step) {
    case Step::Locator: return "0";
    case Step::Interpolate: return "1";
    case Step::Prepare: return "2a";
    case Step::KeyEquation: return "2b";
    case Step::Recover: return "3";
  }
  return "?";
}

StepCost OpCounter::total() const {
  StepCost sum;
  for (const auto& s : steps_) sum += s;
  return sum;
}

}  // namespace rsee
