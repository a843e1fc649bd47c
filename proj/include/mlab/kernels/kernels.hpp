#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace mlab::kernels {

// The enumeration and bitslice inner loops run through this table of function
// pointers. Every backend computes bit-identical results; the scalar entries
// are the reference the others are tested against.
//
// The 16-bit filter family scans candidate truth tables (bit k = output on
// pattern k, widths up to 4) and keeps those matching the labeled entries:
// (t & care) == want. Collect variants append matches in ascending value
// order regardless of backend.
struct Ops {
  const char* name;

  void (*and_blocks)(uint64_t* dst, const uint64_t* a, const uint64_t* b, size_t n);
  void (*or_blocks)(uint64_t* dst, const uint64_t* a, const uint64_t* b, size_t n);
  void (*xor_blocks)(uint64_t* dst, const uint64_t* a, const uint64_t* b, size_t n);
  void (*not_blocks)(uint64_t* dst, const uint64_t* a, size_t n);
  uint64_t (*popcount_blocks)(const uint64_t* a, size_t n);
  bool (*equal_blocks)(const uint64_t* a, const uint64_t* b, size_t n);

  uint64_t (*count_matching_range)(uint32_t first, uint32_t last, uint16_t care,
                                   uint16_t want);
  void (*collect_matching_range)(uint32_t first, uint32_t last, uint16_t care,
                                 uint16_t want, std::vector<uint16_t>& out);
  uint64_t (*count_matching_array)(const uint16_t* tables, size_t n,
                                   uint16_t care, uint16_t want);
  void (*collect_matching_array)(const uint16_t* tables, size_t n, uint16_t care,
                                 uint16_t want, std::vector<uint16_t>& out);
};

enum class Backend { Scalar, Avx2 };

const char* backend_name(Backend b);
bool backend_available(Backend b);

/// The backend picked at startup (best available), unless overridden.
const Ops& active();
Backend active_backend();

/// Ops table of a specific backend; the backend must be available.
const Ops& ops_for(Backend b);

/// Overrides the automatic choice (equivalence tests run both backends
/// through the same call sites). Returns false when `b` is not available on
/// this machine.
bool force_backend(Backend b);

}  // namespace mlab::kernels
