#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mlab/pattern.hpp"

namespace mlab {

/// Extensional form of a boolean function on N bits: one output per pattern,
/// indexed by the lexicographic pattern order. Outputs are packed 64 per
/// word, bit k of the words holding the output on the k-th pattern; unused
/// high bits of the last word stay zero.
class TruthTable {
 public:
  explicit TruthTable(int width);

  static TruthTable all_ones(int width);
  /// Parses a 2^N-character 0/1 string; the width is recovered from the
  /// length.
  static TruthTable from_string(std::string_view bits);
  static TruthTable from_compact(int width, uint16_t bits);  // width <= 4

  int width() const { return width_; }
  uint32_t num_entries() const { return uint32_t{1} << width_; }

  bool get(uint32_t k) const;
  void set(uint32_t k, bool v);

  uint64_t on_count() const;
  bool all_zero() const;
  bool all_one() const;

  uint16_t compact() const;  // width <= 4
  std::string to_string() const;

  std::span<const uint64_t> words() const { return words_; }
  std::span<uint64_t> words() { return words_; }
  /// Mask of the used bits in the last word.
  uint64_t tail_mask() const;

  TruthTable operator~() const;
  TruthTable operator&(const TruthTable& o) const;
  TruthTable operator|(const TruthTable& o) const;
  TruthTable operator^(const TruthTable& o) const;
  bool operator==(const TruthTable& o) const;

  /// True iff this table is a subset of `o` as an on-set (pointwise <=).
  bool implies(const TruthTable& o) const;

 private:
  int width_;
  std::vector<uint64_t> words_;
};

/// Order of the output strings: first differing pattern decides, 0 before 1.
bool lexicographic_less(const TruthTable& a, const TruthTable& b);

}  // namespace mlab
