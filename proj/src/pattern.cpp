#include "mlab/pattern.hpp"

#include <cassert>
#include <istream>
#include <sstream>

#include <json.hpp>

#include "mlab/errors.hpp"

namespace mlab {

Pattern::Pattern(int width, uint32_t index) : width_(width), index_(index) {
  if (width < 1 || width > kMaxWidth) {
    throw Error(ErrorCode::WidthExceeded,
                "pattern width must be between 1 and 16, got " +
                    std::to_string(width));
  }
  assert(index < (uint32_t{1} << width));
}

int Pattern::bit(int i) const {
  assert(i >= 1 && i <= width_);
  return (index_ >> (width_ - i)) & 1u;
}

std::string Pattern::to_string() const {
  std::string s(static_cast<size_t>(width_), '0');
  for (int i = 1; i <= width_; ++i) {
    if (bit(i)) s[static_cast<size_t>(i - 1)] = '1';
  }
  return s;
}

Pattern parse_pattern(std::string_view text) {
  if (text.empty()) {
    throw Error(ErrorCode::EmptyPattern, "empty pattern string");
  }
  if (text.size() > static_cast<size_t>(kMaxWidth)) {
    throw Error(ErrorCode::WidthExceeded,
                "pattern longer than 16 bits: " + std::string(text));
  }
  uint32_t index = 0;
  for (size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c != '0' && c != '1') {
      throw Error(ErrorCode::NonBinaryCharacter,
                  "non-binary character '" + std::string(1, c) +
                      "' at position " + std::to_string(i + 1),
                  static_cast<long long>(i + 1));
    }
    index = (index << 1) | static_cast<uint32_t>(c - '0');
  }
  return Pattern(static_cast<int>(text.size()), index);
}

std::vector<Pattern> enumerate_patterns(int width) {
  if (width < 1 || width > kMaxWidth) {
    throw Error(ErrorCode::WidthExceeded,
                "width must be between 1 and 16, got " + std::to_string(width));
  }
  std::vector<Pattern> out;
  const uint32_t count = uint32_t{1} << width;
  out.reserve(count);
  for (uint32_t k = 0; k < count; ++k) {
    out.emplace_back(width, k);
  }
  return out;
}

Dataset::Dataset(int width) : width_(width) {
  if (width < 1 || width > kMaxWidth) {
    throw Error(ErrorCode::WidthExceeded,
                "dataset width must be between 1 and 16, got " +
                    std::to_string(width));
  }
}

std::optional<bool> Dataset::label_of(const Pattern& p) const {
  if (p.width() != width_) {
    throw Error(ErrorCode::WidthMismatch,
                "pattern width " + std::to_string(p.width()) +
                    " does not match dataset width " + std::to_string(width_));
  }
  auto it = samples_.find(p.index());
  if (it == samples_.end()) return std::nullopt;
  return it->second;
}

std::vector<LabeledSample> Dataset::samples() const {
  std::vector<LabeledSample> out;
  out.reserve(samples_.size());
  for (const auto& [index, label] : samples_) {
    out.push_back({Pattern(width_, index), label});
  }
  return out;
}

std::pair<uint16_t, uint16_t> Dataset::compact_constraints() const {
  assert(width_ <= 4);
  uint16_t care = 0;
  uint16_t want = 0;
  for (const auto& [index, label] : samples_) {
    care = static_cast<uint16_t>(care | (1u << index));
    if (label) want = static_cast<uint16_t>(want | (1u << index));
  }
  return {care, want};
}

Dataset validate_dataset(const std::vector<LabeledSample>& samples,
                         std::optional<int> width_if_empty) {
  if (samples.empty()) {
    if (!width_if_empty) {
      throw Error(ErrorCode::MixedWidths,
                  "empty sample list needs an explicit width");
    }
    return Dataset(*width_if_empty);
  }
  const int width = samples.front().pattern.width();
  for (const auto& s : samples) {
    if (s.pattern.width() != width) {
      throw Error(ErrorCode::MixedWidths,
                  "sample widths differ: " + std::to_string(width) + " vs " +
                      std::to_string(s.pattern.width()));
    }
  }
  Dataset d(width);
  std::map<uint32_t, bool> conflicted;
  for (const auto& s : samples) {
    auto [it, inserted] = d.samples_.emplace(s.pattern.index(), s.label);
    if (!inserted && it->second != s.label) {
      conflicted.emplace(s.pattern.index(), true);
    }
  }
  if (!conflicted.empty()) {
    std::vector<std::string> patterns;
    patterns.reserve(conflicted.size());
    for (const auto& [index, unused] : conflicted) {
      patterns.push_back(Pattern(width, index).to_string());
    }
    std::string msg = "patterns with both labels:";
    for (const auto& p : patterns) msg += " " + p;
    throw Error(ErrorCode::Conflicts, msg, -1, std::move(patterns));
  }
  return d;
}

std::vector<LabeledSample> load_samples(std::istream& in) {
  std::vector<LabeledSample> samples;
  std::string line;
  long long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    nlohmann::json record = nlohmann::json::parse(line, nullptr, false);
    if (record.is_discarded() || !record.is_object()) {
      throw Error(ErrorCode::MalformedRecord,
                  "line " + std::to_string(line_no) + ": not a JSON object",
                  line_no);
    }
    for (const auto& [key, unused] : record.items()) {
      if (key != "pattern" && key != "label") {
        throw Error(ErrorCode::MalformedRecord,
                    "line " + std::to_string(line_no) + ": unknown key \"" +
                        key + "\"",
                    line_no);
      }
    }
    if (!record.contains("pattern") || !record["pattern"].is_string() ||
        !record.contains("label") || !record["label"].is_number_integer()) {
      throw Error(ErrorCode::MalformedRecord,
                  "line " + std::to_string(line_no) +
                      ": need \"pattern\" string and \"label\" 0/1",
                  line_no);
    }
    const int label = record["label"].get<int>();
    if (label != 0 && label != 1) {
      throw Error(ErrorCode::MalformedRecord,
                  "line " + std::to_string(line_no) + ": label must be 0 or 1",
                  line_no);
    }
    try {
      samples.push_back(
          {parse_pattern(record["pattern"].get<std::string>()), label == 1});
    } catch (const Error& e) {
      throw Error(ErrorCode::MalformedRecord,
                  "line " + std::to_string(line_no) + ": " + e.what(), line_no);
    }
  }
  return samples;
}

Dataset load_dataset(std::istream& in, std::optional<int> width_if_empty) {
  return validate_dataset(load_samples(in), width_if_empty);
}

}  // namespace mlab
