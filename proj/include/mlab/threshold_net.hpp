#pragma once

#include <cstdint>
#include <vector>

#include "mlab/pattern.hpp"
#include "mlab/truth_table.hpp"
#include "mlab/xform.hpp"

namespace mlab {

inline constexpr int kMaxExtractionWidth = 4;

struct TrainConfig {
  double learning_rate = 0.5;
  int epochs = 1000;
  uint64_t seed = 0;
  double init_scale = 0.1;
};

struct NetLayer {
  /// weights[unit][input]; bias per unit.
  std::vector<std::vector<double>> weights;
  std::vector<double> bias;
};

/// A feedforward stack of linear threshold units; the final layer has one
/// unit. Hard mode thresholds every pre-activation at 0 (ties map to 1);
/// training runs the logistic surrogate instead.
struct ThresholdNet {
  int input_width = 0;
  std::vector<NetLayer> layers;

  std::vector<int> shape() const;
};

/// Weights and biases drawn uniformly from [-init_scale, init_scale] with
/// the seeded generator; same (shape, cfg) gives identical nets.
ThresholdNet init_net(const std::vector<int>& shape, const TrainConfig& cfg);

/// Hard-mode output on one pattern.
bool hard_output(const ThresholdNet& net, const Pattern& p);

/// The boolean function the net computes, by exhaustive hard-mode sweep.
/// Requires input_width <= 4.
TruthTable extract_function(const ThresholdNet& net);

/// canonical_min_dnf(extract_function(net)).
XForm net_to_xform(const ThresholdNet& net);

/// One pass of per-sample gradient descent, logistic activations, squared
/// error against the 0/1 label, samples visited in lexicographic pattern
/// order.
ThresholdNet train_epoch(ThresholdNet net, const Dataset& d,
                         const TrainConfig& cfg);

struct TrajectoryEntry {
  int epoch = 0;  // completed epochs; 0 = freshly initialized
  TruthTable table;
  XForm xform;
  int xform_size = 0;
};

/// The distinct canonical forms the training run passes through: entry 0
/// always, then one entry per epoch whose extracted table differs from the
/// previous entry's.
struct XFormTrajectory {
  std::vector<TrajectoryEntry> entries;
};

XFormTrajectory trace_training(const std::vector<int>& shape, const Dataset& d,
                               const TrainConfig& cfg);

}  // namespace mlab
