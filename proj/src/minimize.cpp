#include "mlab/minimize.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace mlab {

bool cube_key_less(int width, const Cube& a, const Cube& b) {
  for (int i = 1; i <= width; ++i) {
    const uint32_t bit = uint32_t{1} << (width - i);
    const int ka = (a.care & bit) == 0 ? 2 : ((a.value & bit) != 0 ? 0 : 1);
    const int kb = (b.care & bit) == 0 ? 2 : ((b.value & bit) != 0 ? 0 : 1);
    if (ka != kb) return ka < kb;
  }
  return false;
}

std::string cube_to_string(int width, const Cube& c) {
  if (c.care == 0) return "1";
  std::string out;
  for (int i = 1; i <= width; ++i) {
    const uint32_t bit = uint32_t{1} << (width - i);
    if ((c.care & bit) == 0) continue;
    if (!out.empty()) out += " & ";
    if ((c.value & bit) == 0) out += '!';
    out += 'b';
    out += std::to_string(i);
  }
  return out;
}

std::vector<Cube> prime_implicants(const TruthTable& t) {
  const int width = t.width();
  const uint32_t full = t.num_entries() - 1;

  std::vector<Cube> current;
  for (uint32_t k = 0; k < t.num_entries(); ++k) {
    if (t.get(k)) current.push_back(Cube{k, full});
  }

  std::vector<Cube> primes;
  while (!current.empty()) {
    // Cubes merge only within one care mask, between adjacent set-bit counts.
    std::map<uint32_t, std::map<int, std::vector<size_t>>> groups;
    for (size_t i = 0; i < current.size(); ++i) {
      groups[current[i].care][std::popcount(current[i].value)].push_back(i);
    }

    std::vector<bool> merged(current.size(), false);
    std::set<uint32_t> seen;
    std::vector<Cube> next;
    for (const auto& [care, by_ones] : groups) {
      for (auto it = by_ones.begin(); it != by_ones.end(); ++it) {
        const auto jt = by_ones.find(it->first + 1);
        if (jt == by_ones.end()) continue;
        for (const size_t ia : it->second) {
          for (const size_t ib : jt->second) {
            const uint32_t diff = current[ia].value ^ current[ib].value;
            if (std::popcount(diff) != 1) continue;
            merged[ia] = true;
            merged[ib] = true;
            const Cube m{current[ia].value & ~diff, care & ~diff};
            if (seen.insert((m.care << 16) | m.value).second) {
              next.push_back(m);
            }
          }
        }
      }
    }

    for (size_t i = 0; i < current.size(); ++i) {
      if (!merged[i]) primes.push_back(current[i]);
    }
    current = std::move(next);
  }

  std::sort(primes.begin(), primes.end(), [width](const Cube& a, const Cube& b) {
    return cube_key_less(width, a, b);
  });
  return primes;
}

namespace {

// First full cover among index tuples of the given size, scanned in
// lexicographic index order over the key-sorted primes. Combined with the
// ascending size loop in exact_cover this lands on the smallest cover, ties
// broken by the reading-order key sequence.
bool cover_search(const std::vector<uint32_t>& cov, size_t start,
                  size_t remaining, uint32_t acc, uint32_t on_mask,
                  std::vector<size_t>& chosen) {
  if (remaining == 0) return acc == on_mask;
  for (size_t i = start; i + remaining <= cov.size(); ++i) {
    chosen.push_back(i);
    if (cover_search(cov, i + 1, remaining - 1, acc | cov[i], on_mask, chosen)) {
      return true;
    }
    chosen.pop_back();
  }
  return false;
}

std::vector<Cube> exact_cover(const std::vector<Cube>& primes,
                              const TruthTable& t) {
  const uint32_t num = t.num_entries();
  uint32_t on_mask = 0;
  for (uint32_t k = 0; k < num; ++k) {
    if (t.get(k)) on_mask |= uint32_t{1} << k;
  }

  std::vector<uint32_t> cov(primes.size(), 0);
  for (size_t i = 0; i < primes.size(); ++i) {
    for (uint32_t k = 0; k < num; ++k) {
      if ((k & primes[i].care) == primes[i].value) cov[i] |= uint32_t{1} << k;
    }
  }

  for (size_t size = 1; size <= primes.size(); ++size) {
    std::vector<size_t> chosen;
    if (cover_search(cov, 0, size, 0, on_mask, chosen)) {
      std::vector<Cube> out;
      out.reserve(chosen.size());
      for (const size_t i : chosen) out.push_back(primes[i]);
      return out;
    }
  }
  return {};
}

std::vector<Cube> greedy_cover(const std::vector<Cube>& primes,
                               const TruthTable& t) {
  const uint32_t full = t.num_entries() - 1;
  std::vector<bool> covered(t.num_entries(), false);
  uint64_t remaining = t.on_count();

  std::vector<Cube> chosen;
  while (remaining > 0) {
    size_t best = primes.size();
    uint64_t best_gain = 0;
    for (size_t i = 0; i < primes.size(); ++i) {
      const uint32_t free = full & ~primes[i].care;
      uint64_t gain = 0;
      uint32_t s = free;
      while (true) {
        const uint32_t k = primes[i].value | s;
        if (!covered[k]) ++gain;
        if (s == 0) break;
        s = (s - 1) & free;
      }
      // Strict comparison keeps the earliest (smallest key) on ties.
      if (gain > best_gain) {
        best_gain = gain;
        best = i;
      }
    }

    const uint32_t free = full & ~primes[best].care;
    uint32_t s = free;
    while (true) {
      covered[primes[best].value | s] = true;
      if (s == 0) break;
      s = (s - 1) & free;
    }
    remaining -= best_gain;
    chosen.push_back(primes[best]);
  }
  return chosen;
}

}  // namespace

MinimizedDnf minimize_table(const TruthTable& t) {
  const int width = t.width();
  if (t.all_zero()) return MinimizedDnf{width, {}, true};
  if (t.all_one()) return MinimizedDnf{width, {Cube{0, 0}}, true};

  const std::vector<Cube> primes = prime_implicants(t);
  const bool exact = width <= 4;
  std::vector<Cube> implicants =
      exact ? exact_cover(primes, t) : greedy_cover(primes, t);
  std::sort(implicants.begin(), implicants.end(),
            [width](const Cube& a, const Cube& b) {
              return cube_key_less(width, a, b);
            });
  return MinimizedDnf{width, std::move(implicants), exact};
}

XForm dnf_to_xform(const MinimizedDnf& dnf) {
  if (dnf.implicants.empty()) return XForm::constant(false);

  std::vector<XForm> terms;
  terms.reserve(dnf.implicants.size());
  for (const Cube& c : dnf.implicants) {
    if (c.care == 0) return XForm::constant(true);
    std::vector<XForm> literals;
    for (int i = 1; i <= dnf.width; ++i) {
      const uint32_t bit = uint32_t{1} << (dnf.width - i);
      if ((c.care & bit) == 0) continue;
      XForm lit = XForm::var(i);
      if ((c.value & bit) == 0) lit = XForm::negation(std::move(lit));
      literals.push_back(std::move(lit));
    }
    terms.push_back(literals.size() == 1
                        ? std::move(literals[0])
                        : XForm::conjunction(std::move(literals)));
  }
  return terms.size() == 1 ? std::move(terms[0])
                           : XForm::disjunction(std::move(terms));
}

XForm canonical_min_dnf(const TruthTable& t) {
  return dnf_to_xform(minimize_table(t));
}

}  // namespace mlab
