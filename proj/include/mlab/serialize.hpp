#pragma once

#include <iosfwd>
#include <string>

#include "mlab/learner.hpp"
#include "mlab/pattern.hpp"
#include "mlab/sufficiency.hpp"
#include "mlab/threshold_net.hpp"

namespace mlab {

// Wire formats. All records are single-line JSON with fixed key order, so
// identical inputs serialize to identical bytes.

std::string dataset_record(const LabeledSample& s);
void write_dataset(std::ostream& out, const Dataset& d);

std::string report_record(const SufficiencyReport& r);

std::string trace_record(const TraceEvent& e);
std::string learn_status_record(LearnStatus status, uint64_t gap);

std::string trajectory_record(const TrajectoryEntry& e);

std::string net_to_json(const ThresholdNet& net);
ThresholdNet net_from_json(const std::string& text);

}  // namespace mlab
