#include <cmath>
#include <random>
#include <string>
#include <vector>

#include <doctest.h>

#include "mlab/errors.hpp"
#include "mlab/pattern.hpp"
#include "mlab/threshold_net.hpp"
#include "mlab/truth_table.hpp"
#include "mlab/xform.hpp"

using mlab::Dataset;
using mlab::Error;
using mlab::LabeledSample;
using mlab::ThresholdNet;
using mlab::TrainConfig;

namespace {

// Hand-built net, no randomness involved.
ThresholdNet manual_net(int width,
                        std::vector<mlab::NetLayer> layers) {
  ThresholdNet net;
  net.input_width = width;
  net.layers = std::move(layers);
  return net;
}

Dataset table_dataset(const std::string& bits) {
  const mlab::TruthTable t = mlab::TruthTable::from_string(bits);
  std::vector<LabeledSample> rows;
  for (const mlab::Pattern& p : mlab::enumerate_patterns(t.width())) {
    rows.push_back({p, t.get(p.index())});
  }
  return mlab::validate_dataset(rows);
}

}  // namespace

TEST_CASE("initialization is deterministic and bounded") {
  TrainConfig cfg;
  cfg.seed = 7;
  cfg.init_scale = 0.25;
  const ThresholdNet a = mlab::init_net({2, 3, 1}, cfg);
  const ThresholdNet b = mlab::init_net({2, 3, 1}, cfg);
  REQUIRE(a.layers.size() == 2);
  CHECK(a.shape() == std::vector<int>{2, 3, 1});
  CHECK(a.layers[0].weights.size() == 3);
  CHECK(a.layers[0].weights[0].size() == 2);
  CHECK(a.layers[0].bias.size() == 3);
  CHECK(a.layers[1].weights.size() == 1);
  CHECK(a.layers[1].weights[0].size() == 3);
  for (size_t l = 0; l < a.layers.size(); ++l) {
    for (size_t u = 0; u < a.layers[l].weights.size(); ++u) {
      for (size_t i = 0; i < a.layers[l].weights[u].size(); ++i) {
        const double w = a.layers[l].weights[u][i];
        CHECK(w == b.layers[l].weights[u][i]);
        CHECK(std::abs(w) <= cfg.init_scale);
      }
      CHECK(a.layers[l].bias[u] == b.layers[l].bias[u]);
    }
  }

  TrainConfig other = cfg;
  other.seed = 8;
  const ThresholdNet c = mlab::init_net({2, 3, 1}, other);
  CHECK(c.layers[0].weights[0][0] != a.layers[0].weights[0][0]);
}

TEST_CASE("shapes are validated") {
  const TrainConfig cfg;
  CHECK_THROWS_AS(mlab::init_net({}, cfg), Error);
  CHECK_THROWS_AS(mlab::init_net({2}, cfg), Error);
  CHECK_THROWS_AS(mlab::init_net({2, 2}, cfg), Error);   // last layer != 1
  CHECK_THROWS_AS(mlab::init_net({0, 1}, cfg), Error);
  CHECK_THROWS_AS(mlab::init_net({17, 1}, cfg), Error);
  CHECK_THROWS_AS(mlab::init_net({2, 0, 1}, cfg), Error);
  CHECK_NOTHROW(mlab::init_net({16, 1}, cfg));
}

TEST_CASE("hard outputs of hand-built units") {
  // Single unit with both weights 1 and bias -1.5 fires only on 11.
  const ThresholdNet and_net =
      manual_net(2, {{{{1.0, 1.0}}, {-1.5}}});
  CHECK(mlab::extract_function(and_net).to_string() == "0001");
  CHECK(mlab::net_to_xform(and_net).to_string() == "b1 & b2");

  // Zero weights, negative bias: never fires.
  const ThresholdNet zero_net = manual_net(2, {{{{0.0, 0.0}}, {-1.0}}});
  CHECK(mlab::extract_function(zero_net).to_string() == "0000");

  // Zero weights, zero bias: the tie at 0 goes to 1 everywhere.
  const ThresholdNet tie_net = manual_net(2, {{{{0.0, 0.0}}, {0.0}}});
  CHECK(mlab::extract_function(tie_net).to_string() == "1111");
  CHECK(mlab::net_to_xform(tie_net).to_string() == "1");

  // Two hidden units feeding a disjunction: the classic parity stack.
  const ThresholdNet xor_net = manual_net(
      2, {{{{1.0, -1.0}, {-1.0, 1.0}}, {-0.5, -0.5}},
          {{{1.0, 1.0}}, {-0.5}}});
  CHECK(mlab::extract_function(xor_net).to_string() == "0110");
  CHECK(mlab::net_to_xform(xor_net).to_string() == "b1 & !b2 | !b1 & b2");

  CHECK(mlab::hard_output(xor_net, mlab::parse_pattern("10")));
  CHECK(!mlab::hard_output(xor_net, mlab::parse_pattern("11")));
  CHECK_THROWS_AS(mlab::hard_output(xor_net, mlab::parse_pattern("101")),
                  Error);
}

TEST_CASE("extraction is the exhaustive sweep of hard outputs") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const int width = 1 + static_cast<int>(rng() % 4);
    TrainConfig cfg;
    cfg.seed = rng();
    cfg.init_scale = 1.0;
    const ThresholdNet net = mlab::init_net({width, 3, 1}, cfg);
    const mlab::TruthTable t = mlab::extract_function(net);
    for (const mlab::Pattern& p : mlab::enumerate_patterns(width)) {
      CHECK(t.get(p.index()) == mlab::hard_output(net, p));
    }
    // The canonical form computes the same function.
    CHECK(mlab::truth_table(mlab::net_to_xform(net), width) == t);
  }
}

TEST_CASE("extraction caps the width") {
  const TrainConfig cfg;
  const ThresholdNet wide = mlab::init_net({5, 1}, cfg);
  CHECK_THROWS_AS(mlab::extract_function(wide), Error);
  CHECK_THROWS_AS(mlab::net_to_xform(wide), Error);
  CHECK(mlab::hard_output(wide, mlab::Pattern(5, 7)) ==
        mlab::hard_output(wide, mlab::Pattern(5, 7)));
}

TEST_CASE("positive scaling of a unit never moves its hard function") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    TrainConfig cfg;
    cfg.seed = rng();
    cfg.init_scale = 1.0;
    ThresholdNet net = mlab::init_net({2, 3, 1}, cfg);
    const std::string before = mlab::extract_function(net).to_string();
    for (mlab::NetLayer& layer : net.layers) {
      for (size_t u = 0; u < layer.weights.size(); ++u) {
        const double factor = 0.11 + (rng() % 900) / 100.0;
        for (double& w : layer.weights[u]) w *= factor;
        layer.bias[u] *= factor;
      }
    }
    CHECK(mlab::extract_function(net).to_string() == before);
  }
}

TEST_CASE("training no-ops leave the net untouched") {
  TrainConfig cfg;
  cfg.seed = 5;
  const ThresholdNet net = mlab::init_net({2, 2, 1}, cfg);
  const Dataset d = table_dataset("0001");

  TrainConfig frozen = cfg;
  frozen.learning_rate = 0.0;
  const ThresholdNet after_frozen = mlab::train_epoch(net, d, frozen);
  const ThresholdNet after_empty = mlab::train_epoch(net, Dataset(2), cfg);
  for (size_t l = 0; l < net.layers.size(); ++l) {
    CHECK(net.layers[l].weights == after_frozen.layers[l].weights);
    CHECK(net.layers[l].bias == after_frozen.layers[l].bias);
    CHECK(net.layers[l].weights == after_empty.layers[l].weights);
    CHECK(net.layers[l].bias == after_empty.layers[l].bias);
  }

  CHECK_THROWS_AS(mlab::train_epoch(net, Dataset(3), cfg), Error);
}

TEST_CASE("training is deterministic given the config") {
  TrainConfig cfg;
  cfg.seed = 9;
  const Dataset d = table_dataset("0110");
  ThresholdNet a = mlab::init_net({2, 2, 1}, cfg);
  ThresholdNet b = mlab::init_net({2, 2, 1}, cfg);
  for (int e = 0; e < 50; ++e) {
    a = mlab::train_epoch(std::move(a), d, cfg);
    b = mlab::train_epoch(std::move(b), d, cfg);
  }
  for (size_t l = 0; l < a.layers.size(); ++l) {
    CHECK(a.layers[l].weights == b.layers[l].weights);
    CHECK(a.layers[l].bias == b.layers[l].bias);
  }
}

TEST_CASE("a single unit learns the 1-bit identity") {
  TrainConfig cfg;
  cfg.learning_rate = 0.5;
  cfg.epochs = 200;
  cfg.seed = 1;
  const Dataset d = table_dataset("01");
  ThresholdNet net = mlab::init_net({1, 1}, cfg);
  for (int e = 0; e < cfg.epochs; ++e) {
    net = mlab::train_epoch(std::move(net), d, cfg);
  }
  CHECK(mlab::extract_function(net).to_string() == "01");
  CHECK(mlab::net_to_xform(net).to_string() == "b1");
}

TEST_CASE("trajectories start at epoch zero and record only changes") {
  TrainConfig cfg;
  cfg.learning_rate = 0.5;
  cfg.epochs = 600;
  cfg.seed = 4;
  const Dataset d = table_dataset("0001");
  const mlab::XFormTrajectory traj = mlab::trace_training({2, 2, 1}, d, cfg);
  REQUIRE(!traj.entries.empty());
  CHECK(traj.entries.front().epoch == 0);
  for (size_t i = 0; i < traj.entries.size(); ++i) {
    const mlab::TrajectoryEntry& e = traj.entries[i];
    CHECK(e.xform_size == e.xform.size());
    CHECK(mlab::truth_table(e.xform, 2) == e.table);
    if (i > 0) {
      CHECK(traj.entries[i].epoch > traj.entries[i - 1].epoch);
      CHECK(!(traj.entries[i].table == traj.entries[i - 1].table));
    }
  }
  // The run ends on the trained function.
  CHECK(traj.entries.back().table.to_string() == "0001");

  TrainConfig frozen = cfg;
  frozen.learning_rate = 0.0;
  const mlab::XFormTrajectory flat = mlab::trace_training({2, 2, 1}, d, frozen);
  CHECK(flat.entries.size() == 1);
  CHECK(flat.entries.front().epoch == 0);
}
