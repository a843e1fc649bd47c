#include "mlab/serialize.hpp"

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mlab/errors.hpp"

namespace mlab {

using ordered_json = nlohmann::ordered_json;

std::string dataset_record(const LabeledSample& s) {
  ordered_json j;
  j["pattern"] = s.pattern.to_string();
  j["label"] = s.label ? 1 : 0;
  return j.dump();
}

void write_dataset(std::ostream& out, const Dataset& d) {
  for (const LabeledSample& s : d.samples()) {
    out << dataset_record(s) << '\n';
  }
}

std::string report_record(const SufficiencyReport& r) {
  ordered_json j;
  j["consistent_count"] = r.consistent_count;
  j["sufficient"] = r.sufficient;
  if (r.target_consistent.has_value()) {
    j["target_consistent"] = *r.target_consistent;
  } else {
    j["target_consistent"] = nullptr;
  }
  ordered_json w = ordered_json::array();
  for (const XForm& f : r.witnesses) w.push_back(f.to_string());
  j["witnesses"] = std::move(w);
  return j.dump();
}

std::string trace_record(const TraceEvent& e) {
  ordered_json j;
  j["step"] = e.step;
  j["pattern"] = e.sample.pattern.to_string();
  j["label"] = e.sample.label ? 1 : 0;
  j["lower"] = e.lower_after.to_string();
  j["upper"] = e.upper_after.to_string();
  j["gap"] = e.gap;
  return j.dump();
}

std::string learn_status_record(LearnStatus status, uint64_t gap) {
  ordered_json j;
  j["status"] = status == LearnStatus::Converged
                    ? "converged"
                    : "not_converged_stream_exhausted";
  j["gap"] = gap;
  return j.dump();
}

std::string trajectory_record(const TrajectoryEntry& e) {
  ordered_json j;
  j["epoch"] = e.epoch;
  j["table"] = e.table.to_string();
  j["xform"] = e.xform.to_string();
  j["size"] = e.xform_size;
  return j.dump();
}

std::string net_to_json(const ThresholdNet& net) {
  ordered_json j;
  j["shape"] = net.shape();
  ordered_json layers = ordered_json::array();
  for (const NetLayer& l : net.layers) {
    ordered_json layer;
    layer["weights"] = l.weights;
    layer["bias"] = l.bias;
    layers.push_back(std::move(layer));
  }
  j["layers"] = std::move(layers);
  return j.dump();
}

ThresholdNet net_from_json(const std::string& text) {
  const ordered_json j = ordered_json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object() || !j.contains("shape") ||
      !j.contains("layers") || !j["shape"].is_array() ||
      !j["layers"].is_array()) {
    throw Error(ErrorCode::MalformedRecord,
                "net record needs a shape array and a layers array");
  }

  std::vector<int> shape;
  for (const auto& v : j["shape"]) {
    if (!v.is_number_integer()) {
      throw Error(ErrorCode::MalformedRecord, "shape entries must be integers");
    }
    shape.push_back(v.get<int>());
  }
  if (shape.size() < 2 || shape.back() != 1) {
    throw Error(ErrorCode::BadShape,
                "shape needs an input width and a final layer of 1 unit");
  }
  if (shape.front() < 1 || shape.front() > kMaxWidth) {
    throw Error(ErrorCode::BadShape,
                "input width " + std::to_string(shape.front()) +
                    " out of range",
                shape.front());
  }
  for (const int units : shape) {
    if (units < 1) {
      throw Error(ErrorCode::BadShape, "every layer needs at least one unit",
                  units);
    }
  }
  if (j["layers"].size() != shape.size() - 1) {
    throw Error(ErrorCode::BadShape,
                "layer count does not match the shape",
                static_cast<long long>(j["layers"].size()));
  }

  ThresholdNet net;
  net.input_width = shape.front();
  for (size_t i = 0; i < j["layers"].size(); ++i) {
    const auto& lj = j["layers"][i];
    if (!lj.is_object() || !lj.contains("weights") || !lj.contains("bias")) {
      throw Error(ErrorCode::MalformedRecord,
                  "each layer needs weights and bias");
    }
    NetLayer layer;
    const size_t units = static_cast<size_t>(shape[i + 1]);
    const size_t inputs = static_cast<size_t>(shape[i]);
    if (lj["weights"].size() != units || lj["bias"].size() != units) {
      throw Error(ErrorCode::BadShape,
                  "layer " + std::to_string(i + 1) +
                      " does not match the shape");
    }
    for (const auto& row : lj["weights"]) {
      if (!row.is_array() || row.size() != inputs) {
        throw Error(ErrorCode::BadShape,
                    "layer " + std::to_string(i + 1) +
                        " weight rows do not match the previous width");
      }
      std::vector<double> w;
      for (const auto& v : row) {
        if (!v.is_number()) {
          throw Error(ErrorCode::MalformedRecord, "weights must be numbers");
        }
        w.push_back(v.get<double>());
      }
      layer.weights.push_back(std::move(w));
    }
    for (const auto& v : lj["bias"]) {
      if (!v.is_number()) {
        throw Error(ErrorCode::MalformedRecord, "bias entries must be numbers");
      }
      layer.bias.push_back(v.get<double>());
    }
    net.layers.push_back(std::move(layer));
  }
  return net;
}

}  // namespace mlab
