#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mlab/pattern.hpp"
#include "mlab/truth_table.hpp"
#include "mlab/xform.hpp"

namespace mlab {

/// The space of internal representations a machine can hold, counted
/// extensionally (one truth table, one member).
///
/// AllFunctions and BoundedDnf enumerate whole function spaces and are held
/// to width <= 4; their extensions are materialized as compact 16-bit
/// tables. An ExplicitList works at any width.
class HypothesisClass {
 public:
  enum class Kind { AllFunctions, BoundedDnf, ExplicitList };

  static HypothesisClass all_functions(int width);
  /// Functions expressible as a disjunction of at most `max_implicants`
  /// nonempty product terms; zero implicants is the constant-0 function.
  static HypothesisClass bounded_dnf(int width, int max_implicants);
  static HypothesisClass explicit_list(int width, std::vector<XForm> members);

  Kind kind() const { return kind_; }
  int width() const { return width_; }
  int max_implicants() const { return max_implicants_; }
  const std::vector<XForm>& members() const { return members_; }

  /// Number of extensionally distinct members.
  uint64_t member_count() const;

  /// Distinct member tables in ascending compact value, materialized for
  /// BoundedDnf and ExplicitList at width <= 4. AllFunctions is implicit
  /// (every value in [0, 2^2^N)) and has no materialized vector.
  const std::vector<uint16_t>& compact_extension() const { return compact_extension_; }
  /// Distinct member tables for ExplicitList above width 4, in
  /// lexicographic table order.
  const std::vector<TruthTable>& wide_extension() const { return wide_extension_; }

 private:
  HypothesisClass() = default;

  Kind kind_ = Kind::AllFunctions;
  int width_ = 1;
  int max_implicants_ = 0;
  std::vector<XForm> members_;
  std::vector<uint16_t> compact_extension_;
  std::vector<TruthTable> wide_extension_;
};

struct SufficiencyReport {
  uint64_t consistent_count = 0;
  /// Canonical forms of the first consistent members in lexicographic truth
  /// table order, at most the witness limit.
  std::vector<XForm> witnesses;
  bool sufficient = false;
  std::optional<bool> target_consistent;
};

inline constexpr int kDefaultWitnessLimit = 8;

/// True iff f agrees with every sample of d.
bool consistent(const XForm& f, const Dataset& d);

/// Exact count of class members consistent with d; target_consistent left
/// unset.
SufficiencyReport consistent_count(const HypothesisClass& c, const Dataset& d,
                                   int witness_limit = kDefaultWitnessLimit);

/// sufficient iff target is consistent with d and exactly one member is.
SufficiencyReport is_sufficient(const HypothesisClass& c, const Dataset& d,
                                const XForm& target,
                                int witness_limit = kDefaultWitnessLimit);

enum class SubsetSearchMode { Auto, Exhaustive, Greedy };

inline constexpr size_t kExhaustiveSubsetCap = 12;

struct MinimalSubsetResult {
  Dataset subset;
  /// Exhaustive search ran; greedy backward elimination leaves this false.
  bool certified_minimal;
};

/// A minimum-cardinality subset of d that still suffices. Exhaustive search
/// visits subsets in increasing size, ties in lexicographic pattern order,
/// and requires |d| <= 12; Auto falls back to greedy backward elimination
/// above that.
MinimalSubsetResult minimal_sufficient_subset(
    const HypothesisClass& c, const Dataset& d, const XForm& target,
    SubsetSearchMode mode = SubsetSearchMode::Auto);

}  // namespace mlab
