#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "mlab/errors.hpp"
#include "mlab/learner.hpp"
#include "mlab/pattern.hpp"
#include "mlab/serialize.hpp"
#include "mlab/sufficiency.hpp"
#include "mlab/threshold_net.hpp"
#include "mlab/xform.hpp"

using mlab::Error;
using mlab::ErrorCode;
using mlab::LabeledSample;

namespace {

ErrorCode code_of(const std::string& text) {
  try {
    mlab::net_from_json(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::EmptyPattern;  // placeholder for "did not throw"
}

}  // namespace

TEST_CASE("dataset records are byte-stable") {
  CHECK(mlab::dataset_record({mlab::parse_pattern("11"), true}) ==
        R"({"pattern":"11","label":1})");
  CHECK(mlab::dataset_record({mlab::parse_pattern("010"), false}) ==
        R"({"pattern":"010","label":0})");

  std::ostringstream out;
  mlab::write_dataset(
      out, mlab::validate_dataset({{mlab::parse_pattern("11"), true},
                                   {mlab::parse_pattern("00"), false}}));
  CHECK(out.str() ==
        "{\"pattern\":\"00\",\"label\":0}\n{\"pattern\":\"11\",\"label\":1}\n");
}

TEST_CASE("report records carry the unset target as null") {
  const mlab::SufficiencyReport counted = mlab::consistent_count(
      mlab::HypothesisClass::all_functions(2),
      mlab::validate_dataset({{mlab::parse_pattern("11"), true},
                              {mlab::parse_pattern("00"), false}}));
  CHECK(mlab::report_record(counted) ==
        R"({"consistent_count":4,"sufficient":false,"target_consistent":null,)"
        R"("witnesses":["b1 & b2","b1","b2","b1 | b2"]})");

  const mlab::SufficiencyReport sufficient = mlab::is_sufficient(
      mlab::HypothesisClass::explicit_list(2, {mlab::parse_xform("b1", 2)}),
      mlab::Dataset(2), mlab::parse_xform("b1", 2), 1);
  CHECK(mlab::report_record(sufficient) ==
        R"({"consistent_count":1,"sufficient":true,"target_consistent":true,)"
        R"("witnesses":["b1"]})");
}

TEST_CASE("trace and status records") {
  mlab::LearningMachine m(2, mlab::HypothesisClass::all_functions(2));
  m.feed({mlab::parse_pattern("11"), true});
  REQUIRE(m.trace().size() == 1);
  CHECK(mlab::trace_record(m.trace()[0]) ==
        R"({"step":1,"pattern":"11","label":1,"lower":"b1 & b2","upper":"1",)"
        R"("gap":3})");

  CHECK(mlab::learn_status_record(mlab::LearnStatus::Converged, 0) ==
        R"({"status":"converged","gap":0})");
  CHECK(mlab::learn_status_record(
            mlab::LearnStatus::NotConvergedStreamExhausted, 3) ==
        R"({"status":"not_converged_stream_exhausted","gap":3})");
}

TEST_CASE("trajectory records") {
  const mlab::XForm f = mlab::parse_xform("b1 & b2", 2);
  const mlab::TrajectoryEntry e{0, mlab::truth_table(f, 2), f, f.size()};
  CHECK(mlab::trajectory_record(e) ==
        R"({"epoch":0,"table":"0001","xform":"b1 & b2","size":3})");
}

TEST_CASE("net json roundtrips exactly") {
  mlab::ThresholdNet net;
  net.input_width = 2;
  net.layers = {{{{1.0, 1.0}}, {-1.5}}};
  const std::string text = mlab::net_to_json(net);
  CHECK(text ==
        R"({"shape":[2,1],"layers":[{"weights":[[1.0,1.0]],"bias":[-1.5]}]})");

  const mlab::ThresholdNet back = mlab::net_from_json(text);
  CHECK(back.input_width == 2);
  REQUIRE(back.layers.size() == 1);
  CHECK(back.layers[0].weights == net.layers[0].weights);
  CHECK(back.layers[0].bias == net.layers[0].bias);
  CHECK(mlab::net_to_json(back) == text);

  // A trained net survives the trip too.
  mlab::TrainConfig cfg;
  cfg.seed = 21;
  const mlab::ThresholdNet r = mlab::init_net({3, 2, 1}, cfg);
  const mlab::ThresholdNet r2 = mlab::net_from_json(mlab::net_to_json(r));
  CHECK(mlab::net_to_json(r2) == mlab::net_to_json(r));
  CHECK(mlab::extract_function(r2) == mlab::extract_function(r));
}

TEST_CASE("net json rejects malformed and misshapen input") {
  CHECK(code_of("not json") == ErrorCode::MalformedRecord);
  CHECK(code_of("[1,2]") == ErrorCode::MalformedRecord);
  CHECK(code_of(R"({"shape":[2,1]})") == ErrorCode::MalformedRecord);
  CHECK(code_of(R"({"shape":["a",1],"layers":[]})") ==
        ErrorCode::MalformedRecord);
  CHECK(code_of(R"({"shape":[2],"layers":[]})") == ErrorCode::BadShape);
  CHECK(code_of(R"({"shape":[2,2],"layers":[]})") == ErrorCode::BadShape);
  CHECK(code_of(R"({"shape":[0,1],"layers":[{"weights":[[]],"bias":[0]}]})") ==
        ErrorCode::BadShape);
  CHECK(code_of(R"({"shape":[2,1],"layers":[]})") == ErrorCode::BadShape);
  CHECK(code_of(R"({"shape":[2,1],"layers":[{"weights":[[1.0]],)"
                R"("bias":[0.0]}]})") == ErrorCode::BadShape);
  CHECK(code_of(R"({"shape":[2,1],"layers":[{"weights":[[1.0,"x"]],)"
                R"("bias":[0.0]}]})") == ErrorCode::MalformedRecord);
  CHECK(code_of(R"({"shape":[2,1],"layers":[{"weights":[[1.0,1.0]]}]})") ==
        ErrorCode::MalformedRecord);
}
