#include "mlab/threshold_net.hpp"

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "mlab/errors.hpp"
#include "mlab/minimize.hpp"

namespace mlab {

std::vector<int> ThresholdNet::shape() const {
  std::vector<int> s;
  s.reserve(layers.size() + 1);
  s.push_back(input_width);
  for (const NetLayer& l : layers) s.push_back(static_cast<int>(l.weights.size()));
  return s;
}

namespace {

// rng -> uniform double in [0, 1) with the full 53-bit mantissa, no
// distribution object so the stream is identical across standard libraries.
double u01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

ThresholdNet init_net(const std::vector<int>& shape, const TrainConfig& cfg) {
  if (shape.size() < 2) {
    throw Error(ErrorCode::BadShape,
                "shape needs an input width and at least one layer",
                static_cast<long long>(shape.size()));
  }
  if (shape.front() < 1 || shape.front() > kMaxWidth) {
    throw Error(ErrorCode::BadShape,
                "input width " + std::to_string(shape.front()) + " out of range",
                shape.front());
  }
  if (shape.back() != 1) {
    throw Error(ErrorCode::BadShape, "the final layer must have exactly 1 unit",
                shape.back());
  }
  for (size_t i = 1; i < shape.size(); ++i) {
    if (shape[i] < 1) {
      throw Error(ErrorCode::BadShape,
                  "layer " + std::to_string(i) + " has width " +
                      std::to_string(shape[i]),
                  shape[i]);
    }
  }

  std::mt19937_64 rng(cfg.seed);
  ThresholdNet net;
  net.input_width = shape.front();
  for (size_t i = 1; i < shape.size(); ++i) {
    NetLayer layer;
    const int units = shape[i];
    const int inputs = shape[i - 1];
    for (int u = 0; u < units; ++u) {
      std::vector<double> w(static_cast<size_t>(inputs));
      for (double& v : w) v = (2.0 * u01(rng) - 1.0) * cfg.init_scale;
      layer.weights.push_back(std::move(w));
      layer.bias.push_back((2.0 * u01(rng) - 1.0) * cfg.init_scale);
    }
    net.layers.push_back(std::move(layer));
  }
  return net;
}

bool hard_output(const ThresholdNet& net, const Pattern& p) {
  if (p.width() != net.input_width) {
    throw Error(ErrorCode::WidthMismatch,
                "pattern width " + std::to_string(p.width()) +
                    " differs from the net input width " +
                    std::to_string(net.input_width),
                p.width());
  }
  std::vector<double> act(static_cast<size_t>(net.input_width));
  for (int i = 1; i <= net.input_width; ++i) {
    act[static_cast<size_t>(i - 1)] = static_cast<double>(p.bit(i));
  }
  for (const NetLayer& layer : net.layers) {
    std::vector<double> next(layer.weights.size());
    for (size_t u = 0; u < layer.weights.size(); ++u) {
      double z = layer.bias[u];
      for (size_t j = 0; j < act.size(); ++j) z += layer.weights[u][j] * act[j];
      next[u] = z >= 0.0 ? 1.0 : 0.0;  // tie at exactly 0 maps to 1
    }
    act = std::move(next);
  }
  return act[0] >= 0.5;
}

TruthTable extract_function(const ThresholdNet& net) {
  if (net.input_width < 1 || net.input_width > kMaxExtractionWidth) {
    throw Error(ErrorCode::WidthTooLargeForExtraction,
                "extraction sweeps all inputs and needs width <= " +
                    std::to_string(kMaxExtractionWidth) + ", got " +
                    std::to_string(net.input_width),
                net.input_width);
  }
  TruthTable t(net.input_width);
  for (uint32_t k = 0; k < t.num_entries(); ++k) {
    t.set(k, hard_output(net, Pattern(net.input_width, k)));
  }
  return t;
}

XForm net_to_xform(const ThresholdNet& net) {
  return canonical_min_dnf(extract_function(net));
}

ThresholdNet train_epoch(ThresholdNet net, const Dataset& d,
                         const TrainConfig& cfg) {
  if (d.width() != net.input_width) {
    throw Error(ErrorCode::WidthMismatch,
                "dataset width " + std::to_string(d.width()) +
                    " differs from the net input width " +
                    std::to_string(net.input_width),
                d.width());
  }
  if (cfg.learning_rate == 0.0 || d.empty()) return net;

  const size_t nlayers = net.layers.size();
  for (const LabeledSample& s : d.samples()) {
    // Forward pass, logistic units; acts[0] is the input.
    std::vector<std::vector<double>> acts(nlayers + 1);
    acts[0].resize(static_cast<size_t>(net.input_width));
    for (int i = 1; i <= net.input_width; ++i) {
      acts[0][static_cast<size_t>(i - 1)] = static_cast<double>(s.pattern.bit(i));
    }
    for (size_t l = 0; l < nlayers; ++l) {
      const NetLayer& layer = net.layers[l];
      acts[l + 1].resize(layer.weights.size());
      for (size_t u = 0; u < layer.weights.size(); ++u) {
        double z = layer.bias[u];
        for (size_t j = 0; j < acts[l].size(); ++j) {
          z += layer.weights[u][j] * acts[l][j];
        }
        acts[l + 1][u] = 1.0 / (1.0 + std::exp(-z));
      }
    }

    // Backward pass: deltas are dE/dz for E = (y - t)^2 / 2, sigma' = a(1-a).
    std::vector<std::vector<double>> deltas(nlayers);
    {
      const double y = acts[nlayers][0];
      const double t = s.label ? 1.0 : 0.0;
      deltas[nlayers - 1] = {(y - t) * y * (1.0 - y)};
    }
    for (size_t l = nlayers - 1; l-- > 0;) {
      const NetLayer& up = net.layers[l + 1];
      deltas[l].resize(net.layers[l].weights.size());
      for (size_t j = 0; j < deltas[l].size(); ++j) {
        double back = 0.0;
        for (size_t k = 0; k < up.weights.size(); ++k) {
          back += up.weights[k][j] * deltas[l + 1][k];
        }
        const double a = acts[l + 1][j];
        deltas[l][j] = back * a * (1.0 - a);
      }
    }

    for (size_t l = 0; l < nlayers; ++l) {
      NetLayer& layer = net.layers[l];
      for (size_t u = 0; u < layer.weights.size(); ++u) {
        for (size_t j = 0; j < acts[l].size(); ++j) {
          layer.weights[u][j] -= cfg.learning_rate * deltas[l][u] * acts[l][j];
        }
        layer.bias[u] -= cfg.learning_rate * deltas[l][u];
      }
    }
  }
  return net;
}

XFormTrajectory trace_training(const std::vector<int>& shape, const Dataset& d,
                               const TrainConfig& cfg) {
  ThresholdNet net = init_net(shape, cfg);

  XFormTrajectory traj;
  TruthTable table = extract_function(net);
  XForm form = canonical_min_dnf(table);
  const int size0 = form.size();
  traj.entries.push_back(TrajectoryEntry{0, table, std::move(form), size0});

  for (int e = 1; e <= cfg.epochs; ++e) {
    net = train_epoch(std::move(net), d, cfg);
    TruthTable t = extract_function(net);
    if (t == traj.entries.back().table) continue;
    XForm f = canonical_min_dnf(t);
    const int fsize = f.size();
    traj.entries.push_back(TrajectoryEntry{e, std::move(t), std::move(f), fsize});
  }
  return traj;
}

}  // namespace mlab
