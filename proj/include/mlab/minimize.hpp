#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mlab/truth_table.hpp"
#include "mlab/xform.hpp"

namespace mlab {

/// A product term over the pattern bits. Bit (width - i) of `care` is set
/// when variable i appears as a literal; the matching bit of `value` gives
/// its polarity. Bits outside `care` are zero in `value`, so a cube covers
/// pattern k iff (k & care) == value.
struct Cube {
  uint32_t value = 0;
  uint32_t care = 0;

  friend bool operator==(const Cube&, const Cube&) = default;
};

/// Reading-order key: variables ascending, positive literal before negative
/// before absent. Canonical output lists implicants in this order, which
/// also breaks cover ties (smallest key sequence wins).
bool cube_key_less(int width, const Cube& a, const Cube& b);

std::string cube_to_string(int width, const Cube& c);

struct MinimizedDnf {
  int width = 0;
  std::vector<Cube> implicants;  // sorted by cube_key_less; empty = Const0
  /// Exact-cover search ran (width <= 4). Wider tables get the greedy prime
  /// cover and are not certified minimal.
  bool certified_minimal = true;
};

/// Quine-McCluskey prime implicants, then a minimum cover: exhaustive search
/// in increasing cover size at width <= 4, greedy above.
MinimizedDnf minimize_table(const TruthTable& t);

/// All prime implicants of `t`, sorted by cube_key_less.
std::vector<Cube> prime_implicants(const TruthTable& t);

XForm dnf_to_xform(const MinimizedDnf& dnf);

/// The canonical representative of t's equivalence class:
/// truth_table(canonical_min_dnf(t)) == t, and equal tables give
/// structurally identical forms.
XForm canonical_min_dnf(const TruthTable& t);

}  // namespace mlab
