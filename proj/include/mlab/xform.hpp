#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mlab/pattern.hpp"
#include "mlab/truth_table.hpp"

namespace mlab {

/// An algebraic expression over base patterns: leaves b_i, constants 0/1,
/// connectives Not / And / Or. And/Or keep at least two ordered children.
/// Values are immutable after construction.
class XForm {
 public:
  enum class Kind { Const0, Const1, Var, Not, And, Or };

  static XForm constant(bool v);
  static XForm var(int index);  // 1-based
  static XForm negation(XForm f);
  static XForm conjunction(std::vector<XForm> children);
  static XForm disjunction(std::vector<XForm> children);

  Kind kind() const { return kind_; }
  int var_index() const { return var_; }
  const std::vector<XForm>& children() const { return children_; }

  /// Total node count, leaves included.
  int size() const;
  /// Largest BaseVar index in the tree, 0 when none.
  int max_var() const;

  /// Minimal parentheses under precedence ! > & > |.
  std::string to_string() const;

  /// Node-for-node equality without any normalization.
  bool same_structure(const XForm& o) const;

  /// Copy with And/Or children sorted by their printed text, recursively.
  /// "Structurally identical" in tests means equal after this pass.
  XForm normalized() const;

 private:
  XForm() = default;

  Kind kind_ = Kind::Const0;
  int var_ = 0;
  std::vector<XForm> children_;
};

/// Grammar: expr := term ('|' term)* ; term := factor ('&' factor)* ;
/// factor := '!' factor | '(' expr ')' | atom ; atom := 'b' DIGITS | '0' | '1'.
/// Whitespace insignificant. Positions in errors are 1-based.
XForm parse_xform(std::string_view text, int width);

/// Recursive evaluation of `f` on one pattern.
bool evaluate(const XForm& f, const Pattern& p);

/// Extensional form of `f` over the whole pattern space. Internally runs the
/// bitsliced route (whole blocks of the pattern space at once through the
/// kernel layer); agrees with per-pattern `evaluate` everywhere.
TruthTable truth_table(const XForm& f, int width);

bool equivalent(const XForm& f, const XForm& g, int width);

/// Deterministic generator for property tests; depth <= max_depth.
XForm random_xform(int width, int max_depth, uint64_t seed);

}  // namespace mlab
