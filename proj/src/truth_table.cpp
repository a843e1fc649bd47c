#include "mlab/truth_table.hpp"

#include <bit>
#include <cassert>

#include "mlab/errors.hpp"
#include "mlab/kernels/kernels.hpp"

namespace mlab {

namespace {

size_t word_count(int width) {
  const uint32_t entries = uint32_t{1} << width;
  return (entries + 63) / 64;
}

}  // namespace

TruthTable::TruthTable(int width) : width_(width), words_(word_count(width), 0) {
  if (width < 1 || width > kMaxWidth) {
    throw Error(ErrorCode::WidthExceeded,
                "truth table width must be between 1 and 16, got " +
                    std::to_string(width));
  }
}

TruthTable TruthTable::all_ones(int width) {
  TruthTable t(width);
  for (auto& w : t.words_) w = ~uint64_t{0};
  t.words_.back() &= t.tail_mask();
  return t;
}

TruthTable TruthTable::from_string(std::string_view bits) {
  int width = 0;
  while (width <= kMaxWidth && (size_t{1} << width) != bits.size()) ++width;
  if (width > kMaxWidth) {
    throw Error(ErrorCode::WidthExceeded,
                "table string length must be a power of two up to 65536, got " +
                    std::to_string(bits.size()));
  }
  TruthTable t(width);
  for (size_t k = 0; k < bits.size(); ++k) {
    if (bits[k] != '0' && bits[k] != '1') {
      throw Error(ErrorCode::NonBinaryCharacter,
                  "non-binary character at position " + std::to_string(k + 1),
                  static_cast<long long>(k + 1));
    }
    if (bits[k] == '1') t.set(static_cast<uint32_t>(k), true);
  }
  return t;
}

TruthTable TruthTable::from_compact(int width, uint16_t bits) {
  assert(width <= 4);
  TruthTable t(width);
  t.words_[0] = bits & t.tail_mask();
  return t;
}

bool TruthTable::get(uint32_t k) const {
  assert(k < num_entries());
  return (words_[k / 64] >> (k % 64)) & 1u;
}

void TruthTable::set(uint32_t k, bool v) {
  assert(k < num_entries());
  const uint64_t bit = uint64_t{1} << (k % 64);
  if (v) {
    words_[k / 64] |= bit;
  } else {
    words_[k / 64] &= ~bit;
  }
}

uint64_t TruthTable::on_count() const {
  return kernels::active().popcount_blocks(words_.data(), words_.size());
}

bool TruthTable::all_zero() const { return on_count() == 0; }

bool TruthTable::all_one() const { return on_count() == num_entries(); }

uint16_t TruthTable::compact() const {
  assert(width_ <= 4);
  return static_cast<uint16_t>(words_[0]);
}

std::string TruthTable::to_string() const {
  std::string s(num_entries(), '0');
  for (uint32_t k = 0; k < num_entries(); ++k) {
    if (get(k)) s[k] = '1';
  }
  return s;
}

uint64_t TruthTable::tail_mask() const {
  const uint32_t used = num_entries() % 64;
  return used == 0 ? ~uint64_t{0} : (uint64_t{1} << used) - 1;
}

TruthTable TruthTable::operator~() const {
  TruthTable out(width_);
  kernels::active().not_blocks(out.words_.data(), words_.data(), words_.size());
  out.words_.back() &= tail_mask();
  return out;
}

TruthTable TruthTable::operator&(const TruthTable& o) const {
  assert(width_ == o.width_);
  TruthTable out(width_);
  kernels::active().and_blocks(out.words_.data(), words_.data(),
                               o.words_.data(), words_.size());
  return out;
}

TruthTable TruthTable::operator|(const TruthTable& o) const {
  assert(width_ == o.width_);
  TruthTable out(width_);
  kernels::active().or_blocks(out.words_.data(), words_.data(), o.words_.data(),
                              words_.size());
  return out;
}

TruthTable TruthTable::operator^(const TruthTable& o) const {
  assert(width_ == o.width_);
  TruthTable out(width_);
  kernels::active().xor_blocks(out.words_.data(), words_.data(), o.words_.data(),
                               words_.size());
  return out;
}

bool TruthTable::operator==(const TruthTable& o) const {
  return width_ == o.width_ &&
         kernels::active().equal_blocks(words_.data(), o.words_.data(),
                                        words_.size());
}

bool TruthTable::implies(const TruthTable& o) const {
  assert(width_ == o.width_);
  for (size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~o.words_[i]) return false;
  }
  return true;
}

bool lexicographic_less(const TruthTable& a, const TruthTable& b) {
  assert(a.width() == b.width());
  const auto wa = a.words();
  const auto wb = b.words();
  for (size_t i = 0; i < wa.size(); ++i) {
    const uint64_t diff = wa[i] ^ wb[i];
    if (diff) {
      // The lowest differing bit is the first differing pattern.
      const uint64_t low = diff & (~diff + 1);
      return (wa[i] & low) == 0;
    }
  }
  return false;
}

}  // namespace mlab
