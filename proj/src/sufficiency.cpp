#include "mlab/sufficiency.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mlab/errors.hpp"
#include "mlab/kernels/kernels.hpp"
#include "mlab/minimize.hpp"

namespace mlab {

namespace {

void check_width_range(int width) {
  if (width < 1 || width > kMaxWidth) {
    throw Error(ErrorCode::WidthExceeded,
                "width " + std::to_string(width) + " out of range", width);
  }
}

}  // namespace

HypothesisClass HypothesisClass::all_functions(int width) {
  check_width_range(width);
  if (width > 4) {
    throw Error(ErrorCode::ClassTooLarge,
                "the class of all functions is enumerable only up to width 4, "
                "got " + std::to_string(width),
                width);
  }
  HypothesisClass c;
  c.kind_ = Kind::AllFunctions;
  c.width_ = width;
  return c;
}

HypothesisClass HypothesisClass::bounded_dnf(int width, int max_implicants) {
  check_width_range(width);
  if (width > 4) {
    throw Error(ErrorCode::ClassTooLarge,
                "bounded-DNF classes are enumerable only up to width 4, got " +
                    std::to_string(width),
                width);
  }
  if (max_implicants < 1) {
    throw std::invalid_argument("bounded_dnf needs max_implicants >= 1");
  }

  HypothesisClass c;
  c.kind_ = Kind::BoundedDnf;
  c.width_ = width;
  c.max_implicants_ = max_implicants;

  // Table mask of every nonempty product term.
  const uint32_t nbits = uint32_t{1} << width;
  const uint32_t full = nbits - 1;
  std::vector<uint16_t> cube_tables;
  for (uint32_t care = 1; care <= full; ++care) {
    uint32_t value = care;
    while (true) {
      uint16_t mask = 0;
      for (uint32_t k = 0; k < nbits; ++k) {
        if ((k & care) == value) mask |= static_cast<uint16_t>(1u << k);
      }
      cube_tables.push_back(mask);
      if (value == 0) break;
      value = (value - 1) & care;
    }
  }

  // Breadth-first over tables, one disjunct per step: the level of a table is
  // the fewest implicants that build it, so levels 0..k are the extension.
  const uint32_t nstates = uint32_t{1} << nbits;
  std::vector<int> dist(nstates, -1);
  std::deque<uint32_t> queue;
  dist[0] = 0;
  queue.push_back(0);
  while (!queue.empty()) {
    const uint32_t s = queue.front();
    queue.pop_front();
    if (dist[s] >= max_implicants) continue;
    for (const uint16_t mask : cube_tables) {
      const uint32_t t = s | mask;
      if (dist[t] < 0) {
        dist[t] = dist[s] + 1;
        queue.push_back(t);
      }
    }
  }
  for (uint32_t s = 0; s < nstates; ++s) {
    if (dist[s] >= 0 && dist[s] <= max_implicants) {
      c.compact_extension_.push_back(static_cast<uint16_t>(s));
    }
  }
  return c;
}

HypothesisClass HypothesisClass::explicit_list(int width,
                                               std::vector<XForm> members) {
  check_width_range(width);
  if (members.empty()) {
    throw std::invalid_argument("explicit_list needs at least one member");
  }
  for (const XForm& f : members) {
    if (f.max_var() > width) {
      throw Error(ErrorCode::WidthMismatch,
                  "member uses b" + std::to_string(f.max_var()) +
                      " but the class width is " + std::to_string(width),
                  f.max_var());
    }
  }

  HypothesisClass c;
  c.kind_ = Kind::ExplicitList;
  c.width_ = width;
  c.members_ = std::move(members);
  if (width <= 4) {
    std::vector<uint16_t> tables;
    for (const XForm& f : c.members_) {
      tables.push_back(truth_table(f, width).compact());
    }
    std::sort(tables.begin(), tables.end());
    tables.erase(std::unique(tables.begin(), tables.end()), tables.end());
    c.compact_extension_ = std::move(tables);
  } else {
    std::vector<TruthTable> tables;
    for (const XForm& f : c.members_) {
      tables.push_back(truth_table(f, width));
    }
    std::sort(tables.begin(), tables.end(), lexicographic_less);
    tables.erase(std::unique(tables.begin(), tables.end()), tables.end());
    c.wide_extension_ = std::move(tables);
  }
  return c;
}

uint64_t HypothesisClass::member_count() const {
  switch (kind_) {
    case Kind::AllFunctions:
      return uint64_t{1} << (uint32_t{1} << width_);
    case Kind::BoundedDnf:
      return compact_extension_.size();
    case Kind::ExplicitList:
      return width_ <= 4 ? compact_extension_.size() : wide_extension_.size();
  }
  return 0;
}

bool consistent(const XForm& f, const Dataset& d) {
  if (f.max_var() > d.width()) {
    throw Error(ErrorCode::WidthMismatch,
                "expression uses b" + std::to_string(f.max_var()) +
                    " but the dataset width is " + std::to_string(d.width()),
                f.max_var());
  }
  for (const LabeledSample& s : d.samples()) {
    if (evaluate(f, s.pattern) != s.label) return false;
  }
  return true;
}

namespace {

// (care, want) over the first 2^N table bits: bit k constrained iff pattern k
// is labeled.
std::pair<uint16_t, uint16_t> constraints_of(
    const std::vector<LabeledSample>& samples) {
  uint16_t care = 0;
  uint16_t want = 0;
  for (const LabeledSample& s : samples) {
    const uint16_t bit = static_cast<uint16_t>(1u << s.pattern.index());
    care |= bit;
    if (s.label) want |= bit;
  }
  return {care, want};
}

bool wide_table_consistent(const TruthTable& t,
                           const std::vector<LabeledSample>& samples) {
  for (const LabeledSample& s : samples) {
    if (t.get(s.pattern.index()) != s.label) return false;
  }
  return true;
}

// Count without witness work; the subset search calls this in a loop.
uint64_t count_consistent(const HypothesisClass& c,
                          const std::vector<LabeledSample>& samples) {
  const auto& ops = kernels::active();
  if (c.kind() == HypothesisClass::Kind::AllFunctions) {
    const auto [care, want] = constraints_of(samples);
    const uint32_t nstates = uint32_t{1} << (uint32_t{1} << c.width());
    return ops.count_matching_range(0, nstates, care, want);
  }
  if (c.width() <= 4) {
    const auto [care, want] = constraints_of(samples);
    const auto& ext = c.compact_extension();
    return ops.count_matching_array(ext.data(), ext.size(), care, want);
  }
  uint64_t count = 0;
  for (const TruthTable& t : c.wide_extension()) {
    if (wide_table_consistent(t, samples)) ++count;
  }
  return count;
}

std::vector<TruthTable> matching_tables_lex(
    const HypothesisClass& c, const std::vector<LabeledSample>& samples,
    size_t limit) {
  std::vector<TruthTable> matches;
  if (limit == 0) return matches;
  if (c.width() <= 4) {
    const auto& ops = kernels::active();
    const auto [care, want] = constraints_of(samples);
    std::vector<uint16_t> raw;
    if (c.kind() == HypothesisClass::Kind::AllFunctions) {
      const uint32_t nstates = uint32_t{1} << (uint32_t{1} << c.width());
      ops.collect_matching_range(0, nstates, care, want, raw);
    } else {
      const auto& ext = c.compact_extension();
      ops.collect_matching_array(ext.data(), ext.size(), care, want, raw);
    }
    for (const uint16_t v : raw) {
      matches.push_back(TruthTable::from_compact(c.width(), v));
    }
    std::sort(matches.begin(), matches.end(), lexicographic_less);
  } else {
    // The wide extension is already in lexicographic table order.
    for (const TruthTable& t : c.wide_extension()) {
      if (wide_table_consistent(t, samples)) matches.push_back(t);
    }
  }
  if (matches.size() > limit) {
    matches.erase(matches.begin() + static_cast<ptrdiff_t>(limit),
                  matches.end());
  }
  return matches;
}

void check_same_width(const HypothesisClass& c, const Dataset& d) {
  if (c.width() != d.width()) {
    throw Error(ErrorCode::WidthMismatch,
                "class width " + std::to_string(c.width()) +
                    " differs from dataset width " + std::to_string(d.width()),
                c.width());
  }
}

SufficiencyReport build_report(const HypothesisClass& c,
                               const std::vector<LabeledSample>& samples,
                               int witness_limit,
                               std::optional<bool> target_consistent) {
  SufficiencyReport r;
  r.consistent_count = count_consistent(c, samples);
  const size_t limit =
      witness_limit > 0 ? static_cast<size_t>(witness_limit) : 0;
  for (const TruthTable& t : matching_tables_lex(c, samples, limit)) {
    r.witnesses.push_back(canonical_min_dnf(t));
  }
  r.target_consistent = target_consistent;
  r.sufficient = r.consistent_count == 1 && target_consistent.value_or(false);
  return r;
}

}  // namespace

SufficiencyReport consistent_count(const HypothesisClass& c, const Dataset& d,
                                   int witness_limit) {
  check_same_width(c, d);
  return build_report(c, d.samples(), witness_limit, std::nullopt);
}

SufficiencyReport is_sufficient(const HypothesisClass& c, const Dataset& d,
                                const XForm& target, int witness_limit) {
  check_same_width(c, d);
  if (target.max_var() > c.width()) {
    throw Error(ErrorCode::WidthMismatch,
                "target uses b" + std::to_string(target.max_var()) +
                    " but the class width is " + std::to_string(c.width()),
                target.max_var());
  }
  return build_report(c, d.samples(), witness_limit, consistent(target, d));
}

namespace {

// Subsets of one size, visited in lexicographic order of the (already
// lexicographically sorted) sample indices; the first hit is the tie-break
// winner.
bool pick_subset(const HypothesisClass& c,
                 const std::vector<LabeledSample>& samples, size_t start,
                 size_t remaining, std::vector<LabeledSample>& chosen) {
  if (remaining == 0) return count_consistent(c, chosen) == 1;
  for (size_t i = start; i + remaining <= samples.size(); ++i) {
    chosen.push_back(samples[i]);
    if (pick_subset(c, samples, i + 1, remaining - 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

MinimalSubsetResult minimal_sufficient_subset(const HypothesisClass& c,
                                              const Dataset& d,
                                              const XForm& target,
                                              SubsetSearchMode mode) {
  const SufficiencyReport input_report = is_sufficient(c, d, target, 0);
  if (!input_report.sufficient) {
    throw Error(ErrorCode::NotSufficientInput,
                "the input dataset does not determine the target uniquely");
  }

  const std::vector<LabeledSample> samples = d.samples();
  const bool exhaustive_fits = samples.size() <= kExhaustiveSubsetCap;
  if (mode == SubsetSearchMode::Exhaustive && !exhaustive_fits) {
    throw Error(ErrorCode::SubsetSearchTooLarge,
                "exhaustive subset search handles at most " +
                    std::to_string(kExhaustiveSubsetCap) + " samples, got " +
                    std::to_string(samples.size()),
                static_cast<long long>(samples.size()));
  }

  // The target stays consistent with every subset of a dataset it is
  // consistent with, so a subset suffices iff exactly one member survives.
  if (mode != SubsetSearchMode::Greedy && exhaustive_fits) {
    for (size_t size = 0; size <= samples.size(); ++size) {
      std::vector<LabeledSample> chosen;
      chosen.reserve(size);
      if (pick_subset(c, samples, 0, size, chosen)) {
        return MinimalSubsetResult{validate_dataset(chosen, d.width()), true};
      }
    }
    // Unreachable: the full set itself suffices.
  }

  std::vector<LabeledSample> working = samples;
  size_t i = 0;
  while (i < working.size()) {
    std::vector<LabeledSample> without = working;
    without.erase(without.begin() + static_cast<ptrdiff_t>(i));
    if (count_consistent(c, without) == 1) {
      working = std::move(without);
    } else {
      ++i;
    }
  }
  return MinimalSubsetResult{validate_dataset(working, d.width()), false};
}

}  // namespace mlab
