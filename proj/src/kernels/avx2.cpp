// AVX2 variants of the enumeration and bitslice kernels. This translation
// unit is compiled with -mavx2; the dispatcher only hands these out after a
// runtime CPU check.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mlab/kernels/kernels.hpp"

#if defined(__AVX2__)

#include <immintrin.h>

namespace mlab::kernels {

namespace {

void and_blocks_avx2(uint64_t* dst, const uint64_t* a, const uint64_t* b,
                     size_t n) {
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                        _mm256_and_si256(va, vb));
  }
  for (; i < n; ++i) dst[i] = a[i] & b[i];
}

void or_blocks_avx2(uint64_t* dst, const uint64_t* a, const uint64_t* b,
                    size_t n) {
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                        _mm256_or_si256(va, vb));
  }
  for (; i < n; ++i) dst[i] = a[i] | b[i];
}

void xor_blocks_avx2(uint64_t* dst, const uint64_t* a, const uint64_t* b,
                     size_t n) {
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                        _mm256_xor_si256(va, vb));
  }
  for (; i < n; ++i) dst[i] = a[i] ^ b[i];
}

void not_blocks_avx2(uint64_t* dst, const uint64_t* a, size_t n) {
  const __m256i ones = _mm256_set1_epi64x(-1);
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                        _mm256_xor_si256(va, ones));
  }
  for (; i < n; ++i) dst[i] = ~a[i];
}

// Byte-wise nibble lookup, summed with SAD into four 64-bit lanes.
inline __m256i popcount_epu64(__m256i v) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3,
                                       3, 4, 0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3,
                                       2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  __m256i lo = _mm256_and_si256(v, low_mask);
  __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  __m256i counts = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo),
                                   _mm256_shuffle_epi8(lut, hi));
  return _mm256_sad_epu8(counts, _mm256_setzero_si256());
}

uint64_t popcount_blocks_avx2(const uint64_t* a, size_t n) {
  __m256i acc = _mm256_setzero_si256();
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    acc = _mm256_add_epi64(acc, popcount_epu64(v));
  }
  uint64_t lanes[4];
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(lanes), acc);
  uint64_t sum = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < n; ++i) {
    sum += static_cast<uint64_t>(__builtin_popcountll(a[i]));
  }
  return sum;
}

bool equal_blocks_avx2(const uint64_t* a, const uint64_t* b, size_t n) {
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    __m256i eq = _mm256_cmpeq_epi64(va, vb);
    if (_mm256_movemask_epi8(eq) != -1) return false;
  }
  for (; i < n; ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

// 16 consecutive candidate tables per step: lane L holds base + L.
inline uint32_t match_mask16(uint32_t base, __m256i care_v, __m256i want_v) {
  const __m256i lane_offsets =
      _mm256_setr_epi16(0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15);
  __m256i t = _mm256_add_epi16(_mm256_set1_epi16(static_cast<short>(base)),
                               lane_offsets);
  __m256i eq = _mm256_cmpeq_epi16(_mm256_and_si256(t, care_v), want_v);
  return static_cast<uint32_t>(_mm256_movemask_epi8(eq));
}

uint64_t count_matching_range_avx2(uint32_t first, uint32_t last, uint16_t care,
                                   uint16_t want) {
  const __m256i care_v = _mm256_set1_epi16(static_cast<short>(care));
  const __m256i want_v = _mm256_set1_epi16(static_cast<short>(want));
  uint64_t count = 0;
  uint32_t t = first;
  for (; t + 16 <= last; t += 16) {
    // Two mask bits per 16-bit lane.
    count += static_cast<uint64_t>(__builtin_popcount(match_mask16(t, care_v, want_v))) / 2;
  }
  for (; t < last; ++t) {
    if ((t & care) == want) ++count;
  }
  return count;
}

void collect_matching_range_avx2(uint32_t first, uint32_t last, uint16_t care,
                                 uint16_t want, std::vector<uint16_t>& out) {
  const __m256i care_v = _mm256_set1_epi16(static_cast<short>(care));
  const __m256i want_v = _mm256_set1_epi16(static_cast<short>(want));
  uint32_t t = first;
  for (; t + 16 <= last; t += 16) {
    uint32_t mask = match_mask16(t, care_v, want_v);
    while (mask) {
      const int lane = __builtin_ctz(mask) / 2;
      out.push_back(static_cast<uint16_t>(t + static_cast<uint32_t>(lane)));
      mask &= ~(3u << (2 * lane));
    }
  }
  for (; t < last; ++t) {
    if ((t & care) == want) out.push_back(static_cast<uint16_t>(t));
  }
}

inline uint32_t match_mask16_array(const uint16_t* p, __m256i care_v,
                                   __m256i want_v) {
  __m256i t = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
  __m256i eq = _mm256_cmpeq_epi16(_mm256_and_si256(t, care_v), want_v);
  return static_cast<uint32_t>(_mm256_movemask_epi8(eq));
}

uint64_t count_matching_array_avx2(const uint16_t* tables, size_t n,
                                   uint16_t care, uint16_t want) {
  const __m256i care_v = _mm256_set1_epi16(static_cast<short>(care));
  const __m256i want_v = _mm256_set1_epi16(static_cast<short>(want));
  uint64_t count = 0;
  size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    count += static_cast<uint64_t>(
                 __builtin_popcount(match_mask16_array(tables + i, care_v, want_v))) /
             2;
  }
  for (; i < n; ++i) {
    if ((tables[i] & care) == want) ++count;
  }
  return count;
}

void collect_matching_array_avx2(const uint16_t* tables, size_t n, uint16_t care,
                                 uint16_t want, std::vector<uint16_t>& out) {
  const __m256i care_v = _mm256_set1_epi16(static_cast<short>(care));
  const __m256i want_v = _mm256_set1_epi16(static_cast<short>(want));
  size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    uint32_t mask = match_mask16_array(tables + i, care_v, want_v);
    while (mask) {
      const int lane = __builtin_ctz(mask) / 2;
      out.push_back(tables[i + static_cast<size_t>(lane)]);
      mask &= ~(3u << (2 * lane));
    }
  }
  for (; i < n; ++i) {
    if ((tables[i] & care) == want) out.push_back(tables[i]);
  }
}

}  // namespace

const Ops* avx2_ops() {
  static const Ops ops = {
      "avx2",
      and_blocks_avx2,
      or_blocks_avx2,
      xor_blocks_avx2,
      not_blocks_avx2,
      popcount_blocks_avx2,
      equal_blocks_avx2,
      count_matching_range_avx2,
      collect_matching_range_avx2,
      count_matching_array_avx2,
      collect_matching_array_avx2,
  };
  return &ops;
}

}  // namespace mlab::kernels

#else

namespace mlab::kernels {

const Ops* avx2_ops() { return nullptr; }

}  // namespace mlab::kernels

#endif  // __AVX2__
