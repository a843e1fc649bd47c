#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "mlab/kernels/kernels.hpp"

// Reference kernels. Plain loops, no target-specific instructions; every
// other backend must reproduce these bit for bit.

namespace mlab::kernels {

namespace {

void and_blocks_scalar(uint64_t* dst, const uint64_t* a, const uint64_t* b,
                       size_t n) {
  for (size_t i = 0; i < n; ++i) dst[i] = a[i] & b[i];
}

void or_blocks_scalar(uint64_t* dst, const uint64_t* a, const uint64_t* b,
                      size_t n) {
  for (size_t i = 0; i < n; ++i) dst[i] = a[i] | b[i];
}

void xor_blocks_scalar(uint64_t* dst, const uint64_t* a, const uint64_t* b,
                       size_t n) {
  for (size_t i = 0; i < n; ++i) dst[i] = a[i] ^ b[i];
}

void not_blocks_scalar(uint64_t* dst, const uint64_t* a, size_t n) {
  for (size_t i = 0; i < n; ++i) dst[i] = ~a[i];
}

uint64_t popcount_blocks_scalar(const uint64_t* a, size_t n) {
  uint64_t sum = 0;
  for (size_t i = 0; i < n; ++i) sum += static_cast<uint64_t>(std::popcount(a[i]));
  return sum;
}

bool equal_blocks_scalar(const uint64_t* a, const uint64_t* b, size_t n) {
  for (size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

uint64_t count_matching_range_scalar(uint32_t first, uint32_t last,
                                     uint16_t care, uint16_t want) {
  uint64_t count = 0;
  for (uint32_t t = first; t < last; ++t) {
    if ((t & care) == want) ++count;
  }
  return count;
}

void collect_matching_range_scalar(uint32_t first, uint32_t last, uint16_t care,
                                   uint16_t want, std::vector<uint16_t>& out) {
  for (uint32_t t = first; t < last; ++t) {
    if ((t & care) == want) out.push_back(static_cast<uint16_t>(t));
  }
}

uint64_t count_matching_array_scalar(const uint16_t* tables, size_t n,
                                     uint16_t care, uint16_t want) {
  uint64_t count = 0;
  for (size_t i = 0; i < n; ++i) {
    if ((tables[i] & care) == want) ++count;
  }
  return count;
}

void collect_matching_array_scalar(const uint16_t* tables, size_t n,
                                   uint16_t care, uint16_t want,
                                   std::vector<uint16_t>& out) {
  for (size_t i = 0; i < n; ++i) {
    if ((tables[i] & care) == want) out.push_back(tables[i]);
  }
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops ops = {
      "scalar",
      and_blocks_scalar,
      or_blocks_scalar,
      xor_blocks_scalar,
      not_blocks_scalar,
      popcount_blocks_scalar,
      equal_blocks_scalar,
      count_matching_range_scalar,
      collect_matching_range_scalar,
      count_matching_array_scalar,
      collect_matching_array_scalar,
  };
  return ops;
}

}  // namespace mlab::kernels
