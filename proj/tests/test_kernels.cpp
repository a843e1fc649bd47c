#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <doctest.h>

#include "mlab/kernels/kernels.hpp"
#include "mlab/truth_table.hpp"

namespace kn = mlab::kernels;

namespace {

std::vector<uint64_t> random_blocks(std::mt19937_64& rng, size_t n) {
  std::vector<uint64_t> v(n);
  for (uint64_t& w : v) w = rng();
  return v;
}

// Plain loops the backends are checked against, written without any of the
// library's block helpers.
uint64_t naive_popcount(const std::vector<uint64_t>& a) {
  uint64_t total = 0;
  for (uint64_t w : a) {
    for (int i = 0; i < 64; ++i) total += (w >> i) & 1u;
  }
  return total;
}

std::vector<uint16_t> naive_collect(uint32_t first, uint32_t last,
                                    uint16_t care, uint16_t want) {
  std::vector<uint16_t> out;
  for (uint32_t t = first; t < last; ++t) {
    if ((t & care) == (want & care)) out.push_back(static_cast<uint16_t>(t));
  }
  return out;
}

}  // namespace

TEST_CASE("scalar backend exists and carries its name") {
  REQUIRE(kn::backend_available(kn::Backend::Scalar));
  CHECK(std::string(kn::ops_for(kn::Backend::Scalar).name) == "scalar");
  CHECK(std::string(kn::backend_name(kn::Backend::Scalar)) == "scalar");
  CHECK(std::string(kn::backend_name(kn::Backend::Avx2)) == "avx2");
}

TEST_CASE("scalar block ops match naive loops") {
  const kn::Ops& ops = kn::ops_for(kn::Backend::Scalar);
  std::mt19937_64 rng(7);
  for (const size_t n : {size_t{0}, size_t{1}, size_t{3}, size_t{4},
                         size_t{7}, size_t{13}, size_t{64}}) {
    const std::vector<uint64_t> a = random_blocks(rng, n);
    const std::vector<uint64_t> b = random_blocks(rng, n);
    std::vector<uint64_t> dst(n, 0);

    ops.and_blocks(dst.data(), a.data(), b.data(), n);
    for (size_t i = 0; i < n; ++i) CHECK(dst[i] == (a[i] & b[i]));
    ops.or_blocks(dst.data(), a.data(), b.data(), n);
    for (size_t i = 0; i < n; ++i) CHECK(dst[i] == (a[i] | b[i]));
    ops.xor_blocks(dst.data(), a.data(), b.data(), n);
    for (size_t i = 0; i < n; ++i) CHECK(dst[i] == (a[i] ^ b[i]));
    ops.not_blocks(dst.data(), a.data(), n);
    for (size_t i = 0; i < n; ++i) CHECK(dst[i] == ~a[i]);
    CHECK(ops.popcount_blocks(a.data(), n) == naive_popcount(a));
    CHECK(ops.equal_blocks(a.data(), a.data(), n));
    if (n > 0 && a != b) CHECK(!ops.equal_blocks(a.data(), b.data(), n));
  }
}

TEST_CASE("scalar filters match naive loops exhaustively at width 2") {
  const kn::Ops& ops = kn::ops_for(kn::Backend::Scalar);
  // Every (care, want) pair over 4-bit masks, scanning all 16 tables.
  for (uint32_t care = 0; care < 16; ++care) {
    for (uint32_t want = 0; want < 16; ++want) {
      const auto c = static_cast<uint16_t>(care);
      const auto w = static_cast<uint16_t>(want & care);
      const std::vector<uint16_t> expect = naive_collect(0, 16, c, w);
      CHECK(ops.count_matching_range(0, 16, c, w) == expect.size());
      std::vector<uint16_t> got;
      ops.collect_matching_range(0, 16, c, w, got);
      CHECK(got == expect);
    }
  }
}

TEST_CASE("backends compute identical results") {
  const kn::Ops& scalar = kn::ops_for(kn::Backend::Scalar);
  if (!kn::backend_available(kn::Backend::Avx2)) {
    MESSAGE("avx2 backend not available on this machine; skipping");
    return;
  }
  const kn::Ops& simd = kn::ops_for(kn::Backend::Avx2);
  CHECK(std::string(simd.name) == "avx2");

  std::mt19937_64 rng(99);

  SUBCASE("block ops over many lengths including vector tails") {
    for (size_t n = 0; n <= 21; ++n) {
      const std::vector<uint64_t> a = random_blocks(rng, n);
      const std::vector<uint64_t> b = random_blocks(rng, n);
      std::vector<uint64_t> d1(n, 0), d2(n, 1);

      scalar.and_blocks(d1.data(), a.data(), b.data(), n);
      simd.and_blocks(d2.data(), a.data(), b.data(), n);
      CHECK(d1 == d2);
      scalar.or_blocks(d1.data(), a.data(), b.data(), n);
      simd.or_blocks(d2.data(), a.data(), b.data(), n);
      CHECK(d1 == d2);
      scalar.xor_blocks(d1.data(), a.data(), b.data(), n);
      simd.xor_blocks(d2.data(), a.data(), b.data(), n);
      CHECK(d1 == d2);
      scalar.not_blocks(d1.data(), a.data(), n);
      simd.not_blocks(d2.data(), a.data(), n);
      CHECK(d1 == d2);
      CHECK(scalar.popcount_blocks(a.data(), n) ==
            simd.popcount_blocks(a.data(), n));
      CHECK(scalar.equal_blocks(a.data(), b.data(), n) ==
            simd.equal_blocks(a.data(), b.data(), n));
      CHECK(simd.equal_blocks(a.data(), a.data(), n));
      if (n > 0) {
        std::vector<uint64_t> c = a;
        c[n / 2] ^= uint64_t{1} << (rng() % 64);
        CHECK(!simd.equal_blocks(a.data(), c.data(), n));
      }
    }
  }

  SUBCASE("range filters agree over the full width-4 space") {
    for (int trial = 0; trial < 400; ++trial) {
      const auto care = static_cast<uint16_t>(rng());
      const auto want = static_cast<uint16_t>(rng() & care);
      const uint32_t first = rng() % 65536;
      const uint32_t last = first + rng() % (65536 - first + 1);
      CHECK(scalar.count_matching_range(first, last, care, want) ==
            simd.count_matching_range(first, last, care, want));
      std::vector<uint16_t> g1, g2;
      scalar.collect_matching_range(first, last, care, want, g1);
      simd.collect_matching_range(first, last, care, want, g2);
      CHECK(g1 == g2);
      CHECK(std::is_sorted(g1.begin(), g1.end()));
    }
  }

  SUBCASE("array filters agree on scattered tables") {
    for (int trial = 0; trial < 200; ++trial) {
      const size_t n = rng() % 200;
      std::vector<uint16_t> tables(n);
      for (uint16_t& t : tables) t = static_cast<uint16_t>(rng());
      const auto care = static_cast<uint16_t>(rng());
      const auto want = static_cast<uint16_t>(rng() & care);
      CHECK(scalar.count_matching_array(tables.data(), n, care, want) ==
            simd.count_matching_array(tables.data(), n, care, want));
      std::vector<uint16_t> g1, g2;
      scalar.collect_matching_array(tables.data(), n, care, want, g1);
      simd.collect_matching_array(tables.data(), n, care, want, g2);
      CHECK(g1 == g2);
    }
  }
}

TEST_CASE("forcing a backend moves the active table") {
  const kn::Backend before = kn::active_backend();
  REQUIRE(kn::force_backend(kn::Backend::Scalar));
  CHECK(kn::active_backend() == kn::Backend::Scalar);
  CHECK(std::string(kn::active().name) == "scalar");

  if (kn::backend_available(kn::Backend::Avx2)) {
    REQUIRE(kn::force_backend(kn::Backend::Avx2));
    CHECK(kn::active_backend() == kn::Backend::Avx2);
    CHECK(std::string(kn::active().name) == "avx2");
  } else {
    CHECK(!kn::force_backend(kn::Backend::Avx2));
    CHECK(kn::active_backend() == kn::Backend::Scalar);
  }
  REQUIRE(kn::force_backend(before));
}

TEST_CASE("truth table algebra is identical under both backends") {
  if (!kn::backend_available(kn::Backend::Avx2)) {
    MESSAGE("avx2 backend not available on this machine; skipping");
    return;
  }
  const kn::Backend before = kn::active_backend();
  std::mt19937_64 rng(4242);
  for (const int width : {2, 4, 7, 9, 11}) {
    mlab::TruthTable a(width), b(width);
    for (uint64_t k = 0; k < a.num_entries(); ++k) {
      if (rng() & 1) a.set(k, true);
      if (rng() & 1) b.set(k, true);
    }
    REQUIRE(kn::force_backend(kn::Backend::Scalar));
    const mlab::TruthTable and_s = a & b;
    const mlab::TruthTable or_s = a | b;
    const mlab::TruthTable xor_s = a ^ b;
    const mlab::TruthTable not_s = ~a;
    const uint64_t pop_s = a.on_count();
    REQUIRE(kn::force_backend(kn::Backend::Avx2));
    CHECK((a & b) == and_s);
    CHECK((a | b) == or_s);
    CHECK((a ^ b) == xor_s);
    CHECK(~a == not_s);
    CHECK(a.on_count() == pop_s);
  }
  REQUIRE(kn::force_backend(before));
}
