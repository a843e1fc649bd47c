#include "mlab/learner.hpp"

#include <string>
#include <utility>

#include "mlab/errors.hpp"
#include "mlab/minimize.hpp"

namespace mlab {

LearningMachine::LearningMachine(int width, HypothesisClass cls)
    : width_(width),
      class_(std::move(cls)),
      observed_(width),
      positives_(width),
      negatives_(width),
      lower_table_(width),
      upper_table_(TruthTable::all_ones(width)),
      lower_(XForm::constant(false)),
      upper_(XForm::constant(true)) {
  if (class_.width() != width) {
    throw Error(ErrorCode::WidthMismatch,
                "class width " + std::to_string(class_.width()) +
                    " differs from machine width " + std::to_string(width),
                class_.width());
  }
}

uint64_t LearningMachine::gap() const {
  return (uint64_t{1} << width_) - observed_.size();
}

std::optional<uint64_t> LearningMachine::consistent_remaining() const {
  // Every class here is exactly countable: AllFunctions and BoundedDnf live
  // at width <= 4, ExplicitList extensions are materialized.
  return consistent_count(class_, observed_, 0).consistent_count;
}

void LearningMachine::rebuild_forms() {
  lower_table_ = positives_;
  upper_table_ = ~negatives_;
  lower_ = canonical_min_dnf(lower_table_);
  upper_ = canonical_min_dnf(upper_table_);
}

void LearningMachine::feed(const LabeledSample& s) {
  if (s.pattern.width() != width_) {
    throw Error(ErrorCode::WidthMismatch,
                "sample width " + std::to_string(s.pattern.width()) +
                    " differs from machine width " + std::to_string(width_),
                s.pattern.width());
  }
  if (const std::optional<bool> prior = observed_.label_of(s.pattern)) {
    if (*prior == s.label) return;
    throw Error(ErrorCode::ConflictingSample,
                "pattern " + s.pattern.to_string() +
                    " already observed with the opposite label");
  }

  std::vector<LabeledSample> grown = observed_.samples();
  grown.push_back(s);
  observed_ = validate_dataset(grown, width_);

  if (s.label) {
    positives_.set(s.pattern.index(), true);
  } else {
    negatives_.set(s.pattern.index(), true);
  }
  rebuild_forms();

  trace_.push_back(TraceEvent{static_cast<int>(trace_.size()) + 1, s, lower_,
                              upper_, gap(), consistent_remaining()});
}

bool LearningMachine::converged() const {
  if (class_.kind() == HypothesisClass::Kind::AllFunctions) {
    return gap() == 0;
  }
  return consistent_remaining() == uint64_t{1};
}

LearnStatus LearningMachine::run_to_convergence(
    std::span<const LabeledSample> samples) {
  for (const LabeledSample& s : samples) {
    if (converged()) return LearnStatus::Converged;
    feed(s);
  }
  return converged() ? LearnStatus::Converged
                     : LearnStatus::NotConvergedStreamExhausted;
}

}  // namespace mlab
