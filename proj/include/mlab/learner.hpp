#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mlab/pattern.hpp"
#include "mlab/sufficiency.hpp"
#include "mlab/truth_table.hpp"
#include "mlab/xform.hpp"

namespace mlab {

struct TraceEvent {
  int step = 0;  // 1-based, novel samples only
  LabeledSample sample;
  XForm lower_after;
  XForm upper_after;
  uint64_t gap = 0;  // undetermined patterns after this step
  std::optional<uint64_t> consistent_remaining;
};

enum class LearnStatus { Converged, NotConvergedStreamExhausted };

/// The incremental machine: consumes labeled samples one at a time and keeps
/// the version-space interval [lower, upper] squeezed around them. lower
/// fits exactly the observed positives; upper fits everything but the
/// observed negatives; every hypothesis consistent with the observations
/// lies pointwise between the two.
///
/// Single-owner stateful value: feeds are strictly sequential. Snapshots of
/// the accessors are safe to share.
class LearningMachine {
 public:
  LearningMachine(int width, HypothesisClass cls);

  int width() const { return width_; }
  const HypothesisClass& hypothesis_class() const { return class_; }
  const Dataset& observed() const { return observed_; }
  const XForm& lower() const { return lower_; }
  const XForm& upper() const { return upper_; }
  const TruthTable& lower_table() const { return lower_table_; }
  const TruthTable& upper_table() const { return upper_table_; }
  const std::vector<TraceEvent>& trace() const { return trace_; }

  uint64_t gap() const;
  /// Exact count of class members consistent with the observations, when
  /// the class supports exact counting; unset otherwise.
  std::optional<uint64_t> consistent_remaining() const;

  /// One learning step. A duplicate of an observed sample with equal label
  /// is a no-op with no trace event; an opposite label is a
  /// ConflictingSample error.
  void feed(const LabeledSample& s);

  /// AllFunctions: every pattern determined (gap 0, lower == upper).
  /// Restricted classes: exactly one member remains consistent.
  bool converged() const;

  /// Feeds in order until converged or the stream ends.
  LearnStatus run_to_convergence(std::span<const LabeledSample> samples);

 private:
  void rebuild_forms();

  int width_;
  HypothesisClass class_;
  Dataset observed_;
  TruthTable positives_;  // on-set = observed positive patterns
  TruthTable negatives_;  // on-set = observed negative patterns
  TruthTable lower_table_;
  TruthTable upper_table_;
  XForm lower_;
  XForm upper_;
  std::vector<TraceEvent> trace_;
};

}  // namespace mlab
