#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mlab {

inline constexpr int kMaxWidth = 16;

/// An N-bit pattern, 1 <= N <= 16. Bit 1 is the leftmost character of the
/// textual form. `index()` is the position of the pattern in the
/// lexicographic enumeration of its width, so ascending index equals
/// ascending bit-string order.
class Pattern {
 public:
  Pattern(int width, uint32_t index);

  int width() const { return width_; }
  uint32_t index() const { return index_; }
  int bit(int i) const;  // 1-based, 1 = leftmost
  std::string to_string() const;

  friend bool operator==(const Pattern&, const Pattern&) = default;
  friend std::strong_ordering operator<=>(const Pattern&, const Pattern&) = default;

 private:
  int width_;
  uint32_t index_;
};

Pattern parse_pattern(std::string_view text);

/// All 2^width patterns in ascending lexicographic order.
std::vector<Pattern> enumerate_patterns(int width);

struct LabeledSample {
  Pattern pattern;
  bool label;

  friend bool operator==(const LabeledSample&, const LabeledSample&) = default;
};

/// A conflict-free set of labeled patterns of one width. Iteration and
/// `samples()` are in lexicographic pattern order.
class Dataset {
 public:
  explicit Dataset(int width);

  int width() const { return width_; }
  size_t size() const { return samples_.size(); }
  bool empty() const { return samples_.empty(); }

  std::optional<bool> label_of(const Pattern& p) const;
  std::vector<LabeledSample> samples() const;

  /// Masks over pattern indices: bit k of first element set iff pattern k is
  /// labeled; bit k of second element gives the label. Width <= 4 only.
  std::pair<uint16_t, uint16_t> compact_constraints() const;

  friend bool operator==(const Dataset&, const Dataset&) = default;

 private:
  friend Dataset validate_dataset(const std::vector<LabeledSample>&,
                                  std::optional<int>);
  int width_;
  std::map<uint32_t, bool> samples_;
};

/// Collapses duplicates with equal labels; reports every pattern carrying
/// both labels via ErrorCode::Conflicts. `width_if_empty` names the dataset
/// width when `samples` is empty.
Dataset validate_dataset(const std::vector<LabeledSample>& samples,
                         std::optional<int> width_if_empty = std::nullopt);

/// Reads line-delimited records {"pattern": "<bits>", "label": 0|1} in file
/// order, duplicates and conflicts untouched. Unknown keys are rejected.
/// Blank lines are not records.
std::vector<LabeledSample> load_samples(std::istream& in);

/// load_samples + validate_dataset.
Dataset load_dataset(std::istream& in,
                     std::optional<int> width_if_empty = std::nullopt);

}  // namespace mlab
