// Command-line front end: eval, canon, tt, suff, learn, nn-trace. Output is
// line-delimited JSON by default, --format table renders aligned columns.
// Exit codes: 0 success, 1 domain error, 2 usage error.

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "mlab/errors.hpp"
#include "mlab/learner.hpp"
#include "mlab/minimize.hpp"
#include "mlab/pattern.hpp"
#include "mlab/serialize.hpp"
#include "mlab/sufficiency.hpp"
#include "mlab/threshold_net.hpp"
#include "mlab/truth_table.hpp"
#include "mlab/xform.hpp"

namespace {

struct GlobalOpts {
  std::optional<int> width;
  uint64_t seed = 0;
  std::string output;
  std::string format = "json";
};

std::string render_table(const std::vector<std::string>& headers,
                         const std::vector<std::vector<std::string>>& rows) {
  std::vector<size_t> col(headers.size());
  for (size_t i = 0; i < headers.size(); ++i) col[i] = headers[i].size();
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      col[i] = std::max(col[i], row[i].size());
    }
  }
  std::ostringstream out;
  const auto emit = [&](const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) {
      out << cells[i];
      if (i + 1 < cells.size()) {
        out << std::string(col[i] - cells[i].size() + 2, ' ');
      }
    }
    out << '\n';
  };
  emit(headers);
  for (const auto& row : rows) emit(row);
  return out.str();
}

std::vector<mlab::LabeledSample> read_samples(const std::string& path) {
  if (path == "-") return mlab::load_samples(std::cin);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open dataset file: " + path);
  return mlab::load_samples(in);
}

int samples_width(const std::vector<mlab::LabeledSample>& samples,
                  const GlobalOpts& g) {
  if (samples.empty()) {
    if (!g.width) {
      throw mlab::Error(mlab::ErrorCode::MixedWidths,
                        "an empty dataset needs --width");
    }
    return *g.width;
  }
  const int width = samples.front().pattern.width();
  for (const auto& s : samples) {
    if (s.pattern.width() != width) {
      throw mlab::Error(mlab::ErrorCode::MixedWidths,
                        "sample widths differ: " + std::to_string(width) +
                            " vs " + std::to_string(s.pattern.width()));
    }
  }
  if (g.width && *g.width != width) {
    throw mlab::Error(mlab::ErrorCode::WidthMismatch,
                      "--width " + std::to_string(*g.width) +
                          " does not match the dataset width " +
                          std::to_string(width),
                      *g.width);
  }
  return width;
}

mlab::HypothesisClass parse_class_spec(const std::string& spec, int width) {
  if (spec == "all") return mlab::HypothesisClass::all_functions(width);
  if (spec.starts_with("dnf:")) {
    const std::string_view rest = std::string_view(spec).substr(4);
    int k = 0;
    const auto [ptr, ec] = std::from_chars(rest.begin(), rest.end(), k);
    if (ec != std::errc{} || ptr != rest.end() || k < 1) {
      throw CLI::ValidationError(
          "--class dnf:<k> needs a positive implicant bound, got \"" + spec +
          "\"");
    }
    return mlab::HypothesisClass::bounded_dnf(width, k);
  }
  if (spec.starts_with("list:")) {
    const std::string path = spec.substr(5);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open class file: " + path);
    std::vector<mlab::XForm> members;
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      members.push_back(mlab::parse_xform(line, width));
    }
    return mlab::HypothesisClass::explicit_list(width, std::move(members));
  }
  throw CLI::ValidationError("--class must be all, dnf:<k>, or list:<path>");
}

int require_width(const GlobalOpts& g) {
  if (!g.width) throw CLI::RequiredError("--width");
  return *g.width;
}

void run_eval(const GlobalOpts& g, const std::string& xform_text,
              const std::string& pattern_text, std::ostream& out) {
  const mlab::Pattern p = mlab::parse_pattern(pattern_text);
  if (g.width && *g.width != p.width()) {
    throw mlab::Error(mlab::ErrorCode::WidthMismatch,
                      "--width " + std::to_string(*g.width) +
                          " does not match the pattern width " +
                          std::to_string(p.width()),
                      *g.width);
  }
  const mlab::XForm f = mlab::parse_xform(xform_text, p.width());
  out << (mlab::evaluate(f, p) ? 1 : 0) << '\n';
}

void run_canon(const GlobalOpts& g, const std::string& xform_text,
               std::ostream& out) {
  const int width = require_width(g);
  const mlab::XForm f = mlab::parse_xform(xform_text, width);
  out << mlab::canonical_min_dnf(mlab::truth_table(f, width)).to_string()
      << '\n';
}

void run_tt(const GlobalOpts& g, const std::string& xform_text,
            std::ostream& out) {
  const int width = require_width(g);
  const mlab::TruthTable t =
      mlab::truth_table(mlab::parse_xform(xform_text, width), width);
  if (g.format == "table") {
    std::vector<std::vector<std::string>> rows;
    for (uint32_t k = 0; k < t.num_entries(); ++k) {
      rows.push_back({mlab::Pattern(width, k).to_string(),
                      t.get(k) ? "1" : "0"});
    }
    out << render_table({"pattern", "output"}, rows);
  } else {
    out << t.to_string() << '\n';
  }
}

void run_suff(const GlobalOpts& g, const std::string& dataset_path,
              const std::string& class_spec,
              const std::optional<std::string>& target_text, int witness_limit,
              std::ostream& out) {
  const std::vector<mlab::LabeledSample> samples = read_samples(dataset_path);
  const int width = samples_width(samples, g);
  const mlab::Dataset d = mlab::validate_dataset(samples, width);
  const mlab::HypothesisClass cls = parse_class_spec(class_spec, width);

  const mlab::SufficiencyReport report =
      target_text
          ? mlab::is_sufficient(cls, d, mlab::parse_xform(*target_text, width),
                                witness_limit)
          : mlab::consistent_count(cls, d, witness_limit);

  if (g.format == "table") {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"consistent_count", std::to_string(report.consistent_count)});
    rows.push_back({"sufficient", report.sufficient ? "true" : "false"});
    rows.push_back({"target_consistent",
                    report.target_consistent
                        ? (*report.target_consistent ? "true" : "false")
                        : "-"});
    for (const mlab::XForm& w : report.witnesses) {
      rows.push_back({"witness", w.to_string()});
    }
    out << render_table({"field", "value"}, rows);
  } else {
    out << mlab::report_record(report) << '\n';
  }
}

void run_learn(const GlobalOpts& g, const std::string& dataset_path,
               const std::string& class_spec, const std::string& order,
               std::ostream& out) {
  std::vector<mlab::LabeledSample> samples = read_samples(dataset_path);
  const int width = samples_width(samples, g);

  if (order == "lex") {
    std::stable_sort(samples.begin(), samples.end(),
                     [](const mlab::LabeledSample& a,
                        const mlab::LabeledSample& b) {
                       return a.pattern.index() < b.pattern.index();
                     });
  } else if (order == "seeded") {
    std::mt19937_64 rng(g.seed);
    for (size_t i = samples.size(); i > 1; --i) {
      const size_t j = static_cast<size_t>(rng() % i);
      std::swap(samples[i - 1], samples[j]);
    }
  }

  mlab::LearningMachine machine(width, parse_class_spec(class_spec, width));
  const mlab::LearnStatus status = machine.run_to_convergence(samples);

  if (g.format == "table") {
    std::vector<std::vector<std::string>> rows;
    for (const mlab::TraceEvent& e : machine.trace()) {
      rows.push_back({std::to_string(e.step), e.sample.pattern.to_string(),
                      e.sample.label ? "1" : "0", e.lower_after.to_string(),
                      e.upper_after.to_string(), std::to_string(e.gap)});
    }
    out << render_table({"step", "pattern", "label", "lower", "upper", "gap"},
                        rows);
    out << render_table(
        {"status", "gap"},
        {{status == mlab::LearnStatus::Converged
              ? "converged"
              : "not_converged_stream_exhausted",
          std::to_string(machine.gap())}});
  } else {
    for (const mlab::TraceEvent& e : machine.trace()) {
      out << mlab::trace_record(e) << '\n';
    }
    out << mlab::learn_status_record(status, machine.gap()) << '\n';
  }
}

void run_nn_trace(const GlobalOpts& g, const std::string& dataset_path,
                  const std::vector<int>& shape, double lr, int epochs,
                  double init_scale, const std::string& dump_net_path,
                  std::ostream& out) {
  if (shape.size() < 2 || shape.back() != 1) {
    throw CLI::ValidationError(
        "--shape needs an input width and a final layer of 1 unit");
  }
  if (g.width && *g.width != shape.front()) {
    throw mlab::Error(mlab::ErrorCode::WidthMismatch,
                      "--width " + std::to_string(*g.width) +
                          " does not match the shape input width " +
                          std::to_string(shape.front()),
                      *g.width);
  }

  const std::vector<mlab::LabeledSample> samples = read_samples(dataset_path);
  const mlab::Dataset d = mlab::validate_dataset(samples, shape.front());
  const mlab::TrainConfig cfg{lr, epochs, g.seed, init_scale};
  const mlab::XFormTrajectory traj = mlab::trace_training(shape, d, cfg);

  if (g.format == "table") {
    std::vector<std::vector<std::string>> rows;
    for (const mlab::TrajectoryEntry& e : traj.entries) {
      rows.push_back({std::to_string(e.epoch), e.table.to_string(),
                      e.xform.to_string(), std::to_string(e.xform_size)});
    }
    out << render_table({"epoch", "table", "xform", "size"}, rows);
  } else {
    for (const mlab::TrajectoryEntry& e : traj.entries) {
      out << mlab::trajectory_record(e) << '\n';
    }
  }

  if (!dump_net_path.empty()) {
    mlab::ThresholdNet net = mlab::init_net(shape, cfg);
    for (int e = 1; e <= cfg.epochs; ++e) {
      net = mlab::train_epoch(std::move(net), d, cfg);
    }
    std::ofstream nf(dump_net_path);
    if (!nf) {
      throw std::runtime_error("cannot open net file: " + dump_net_path);
    }
    nf << mlab::net_to_json(net) << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"desk-scale boolean learning laboratory"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--width", g.width, "pattern width (1-16)")
      ->check(CLI::Range(1, 16));
  app.add_option("--seed", g.seed, "seed for every random choice");
  app.add_option("--output", g.output, "write output to this file");
  app.add_option("--format", g.format, "json (line records) or table")
      ->check(CLI::IsMember({"json", "table"}));

  std::string xform_text;
  std::string pattern_text;
  std::string dataset_path;
  std::string class_spec = "all";
  std::optional<std::string> target_text;
  int witness_limit = mlab::kDefaultWitnessLimit;
  std::string order = "given";
  std::vector<int> shape;
  double lr = 0.5;
  int epochs = 1000;
  double init_scale = 0.1;
  std::string dump_net_path;

  std::ofstream out_file;
  std::ostream* out = &std::cout;
  const auto open_output = [&]() {
    if (g.output.empty()) return;
    out_file.open(g.output);
    if (!out_file) {
      throw std::runtime_error("cannot open output file: " + g.output);
    }
    out = &out_file;
  };

  CLI::App* eval = app.add_subcommand("eval", "evaluate an expression on one pattern");
  eval->add_option("xform", xform_text, "expression text")->required();
  eval->add_option("pattern", pattern_text, "0/1 pattern string")->required();
  eval->callback([&] { open_output(); run_eval(g, xform_text, pattern_text, *out); });

  CLI::App* canon = app.add_subcommand("canon", "canonical minimal form of an expression");
  canon->add_option("xform", xform_text, "expression text")->required();
  canon->callback([&] { open_output(); run_canon(g, xform_text, *out); });

  CLI::App* tt = app.add_subcommand("tt", "truth table of an expression");
  tt->add_option("xform", xform_text, "expression text")->required();
  tt->callback([&] { open_output(); run_tt(g, xform_text, *out); });

  CLI::App* suff = app.add_subcommand("suff", "count consistent hypotheses, decide sufficiency");
  suff->add_option("dataset", dataset_path, "dataset file (JSONL), - for stdin")->required();
  suff->add_option("--class", class_spec, "all | dnf:<k> | list:<path>");
  suff->add_option("--target", target_text, "target expression");
  suff->add_option("--witness-limit", witness_limit, "max witnesses reported")
      ->check(CLI::Range(0, 1 << 20));
  suff->callback([&] {
    open_output();
    run_suff(g, dataset_path, class_spec, target_text, witness_limit, *out);
  });

  CLI::App* learn = app.add_subcommand("learn", "run the incremental machine over a sample stream");
  learn->add_option("dataset", dataset_path, "dataset file (JSONL), - for stdin")->required();
  learn->add_option("--class", class_spec, "all | dnf:<k> | list:<path>");
  learn->add_option("--order", order, "sample order: given, lex, or seeded")
      ->check(CLI::IsMember({"given", "lex", "seeded"}));
  learn->callback([&] {
    open_output();
    run_learn(g, dataset_path, class_spec, order, *out);
  });

  CLI::App* nn = app.add_subcommand("nn-trace", "train a threshold net, trace its expression trajectory");
  nn->add_option("dataset", dataset_path, "dataset file (JSONL), - for stdin")->required();
  nn->add_option("--shape", shape, "layer widths, e.g. 2,3,1")
      ->required()
      ->delimiter(',');
  nn->add_option("--lr", lr, "learning rate")->check(CLI::NonNegativeNumber);
  nn->add_option("--epochs", epochs, "training epochs")
      ->check(CLI::Range(0, 1 << 20));
  nn->add_option("--init-scale", init_scale, "uniform init range")
      ->check(CLI::NonNegativeNumber);
  nn->add_option("--dump-net", dump_net_path, "write the trained net to this file");
  nn->callback([&] {
    open_output();
    run_nn_trace(g, dataset_path, shape, lr, epochs, init_scale, dump_net_path,
                 *out);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const mlab::Error& e) {
    std::cerr << "error [" << mlab::error_code_name(e.code()) << "]: "
              << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
