#include "mlab/xform.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mlab/errors.hpp"
#include "mlab/kernels/kernels.hpp"

namespace mlab {

XForm XForm::constant(bool v) {
  XForm f;
  f.kind_ = v ? Kind::Const1 : Kind::Const0;
  return f;
}

XForm XForm::var(int index) {
  if (index < 1 || index > kMaxWidth) {
    throw Error(ErrorCode::VariableOutOfRange,
                "variable index " + std::to_string(index) + " out of range",
                index);
  }
  XForm f;
  f.kind_ = Kind::Var;
  f.var_ = index;
  return f;
}

XForm XForm::negation(XForm f) {
  XForm r;
  r.kind_ = Kind::Not;
  r.children_.push_back(std::move(f));
  return r;
}

XForm XForm::conjunction(std::vector<XForm> children) {
  if (children.size() < 2) {
    throw std::invalid_argument("conjunction needs at least two children");
  }
  XForm r;
  r.kind_ = Kind::And;
  r.children_ = std::move(children);
  return r;
}

XForm XForm::disjunction(std::vector<XForm> children) {
  if (children.size() < 2) {
    throw std::invalid_argument("disjunction needs at least two children");
  }
  XForm r;
  r.kind_ = Kind::Or;
  r.children_ = std::move(children);
  return r;
}

int XForm::size() const {
  int n = 1;
  for (const XForm& c : children_) n += c.size();
  return n;
}

int XForm::max_var() const {
  if (kind_ == Kind::Var) return var_;
  int m = 0;
  for (const XForm& c : children_) m = std::max(m, c.max_var());
  return m;
}

namespace {

// Parenthesize a child whose connective binds no tighter than its parent, so
// the printed text parses back to the same tree.
bool needs_parens(XForm::Kind parent, XForm::Kind child) {
  switch (parent) {
    case XForm::Kind::Or:
      return child == XForm::Kind::Or;
    case XForm::Kind::And:
    case XForm::Kind::Not:
      return child == XForm::Kind::Or || child == XForm::Kind::And;
    default:
      return false;
  }
}

void print_node(const XForm& f, std::string& out) {
  switch (f.kind()) {
    case XForm::Kind::Const0:
      out += '0';
      return;
    case XForm::Kind::Const1:
      out += '1';
      return;
    case XForm::Kind::Var:
      out += 'b';
      out += std::to_string(f.var_index());
      return;
    case XForm::Kind::Not: {
      out += '!';
      const XForm& c = f.children()[0];
      if (needs_parens(XForm::Kind::Not, c.kind())) {
        out += '(';
        print_node(c, out);
        out += ')';
      } else {
        print_node(c, out);
      }
      return;
    }
    case XForm::Kind::And:
    case XForm::Kind::Or: {
      const char* sep = f.kind() == XForm::Kind::And ? " & " : " | ";
      bool first = true;
      for (const XForm& c : f.children()) {
        if (!first) out += sep;
        first = false;
        if (needs_parens(f.kind(), c.kind())) {
          out += '(';
          print_node(c, out);
          out += ')';
        } else {
          print_node(c, out);
        }
      }
      return;
    }
  }
}

}  // namespace

std::string XForm::to_string() const {
  std::string out;
  print_node(*this, out);
  return out;
}

bool XForm::same_structure(const XForm& o) const {
  if (kind_ != o.kind_ || var_ != o.var_) return false;
  if (children_.size() != o.children_.size()) return false;
  for (size_t i = 0; i < children_.size(); ++i) {
    if (!children_[i].same_structure(o.children_[i])) return false;
  }
  return true;
}

XForm XForm::normalized() const {
  XForm r;
  r.kind_ = kind_;
  r.var_ = var_;
  r.children_.reserve(children_.size());
  for (const XForm& c : children_) r.children_.push_back(c.normalized());
  if (kind_ == Kind::And || kind_ == Kind::Or) {
    std::stable_sort(r.children_.begin(), r.children_.end(),
                     [](const XForm& a, const XForm& b) {
                       return a.to_string() < b.to_string();
                     });
  }
  return r;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, int width) : text_(text), width_(width) {}

  XForm parse() {
    XForm f = parse_expr();
    skip_ws();
    if (pos_ < text_.size()) {
      fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    }
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    const long long col = static_cast<long long>(pos_) + 1;
    throw Error(ErrorCode::SyntaxError,
                what + " at position " + std::to_string(col), col);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
            text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  XForm parse_expr() {
    std::vector<XForm> terms;
    terms.push_back(parse_term());
    while (eat('|')) terms.push_back(parse_term());
    if (terms.size() == 1) return std::move(terms[0]);
    return XForm::disjunction(std::move(terms));
  }

  XForm parse_term() {
    std::vector<XForm> factors;
    factors.push_back(parse_factor());
    while (eat('&')) factors.push_back(parse_factor());
    if (factors.size() == 1) return std::move(factors[0]);
    return XForm::conjunction(std::move(factors));
  }

  XForm parse_factor() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '!') {
      ++pos_;
      return XForm::negation(parse_factor());
    }
    if (c == '(') {
      ++pos_;
      XForm inner = parse_expr();
      skip_ws();
      if (pos_ >= text_.size()) fail("missing ')'");
      if (text_[pos_] != ')') {
        fail("expected ')', found '" + std::string(1, text_[pos_]) + "'");
      }
      ++pos_;
      return inner;
    }
    if (c == '0') {
      ++pos_;
      return XForm::constant(false);
    }
    if (c == '1') {
      ++pos_;
      return XForm::constant(true);
    }
    if (c == 'b') {
      const size_t start = pos_;
      ++pos_;
      if (pos_ >= text_.size() || text_[pos_] < '0' || text_[pos_] > '9') {
        pos_ = start;
        fail("'b' must be followed by a variable index");
      }
      long long index = 0;
      while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
        index = index * 10 + (text_[pos_] - '0');
        if (index > 1000000) index = 1000000;
        ++pos_;
      }
      if (index < 1 || index > width_) {
        throw Error(ErrorCode::VariableOutOfRange,
                    "variable index " + std::to_string(index) +
                        " out of range for width " + std::to_string(width_),
                    index);
      }
      return XForm::var(static_cast<int>(index));
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  int width_;
  size_t pos_ = 0;
};

}  // namespace

XForm parse_xform(std::string_view text, int width) {
  if (width < 1 || width > kMaxWidth) {
    throw Error(ErrorCode::WidthExceeded,
                "width " + std::to_string(width) + " out of range", width);
  }
  return Parser(text, width).parse();
}

bool evaluate(const XForm& f, const Pattern& p) {
  switch (f.kind()) {
    case XForm::Kind::Const0:
      return false;
    case XForm::Kind::Const1:
      return true;
    case XForm::Kind::Var:
      if (f.var_index() > p.width()) {
        throw Error(ErrorCode::WidthMismatch,
                    "expression uses b" + std::to_string(f.var_index()) +
                        " but the pattern has width " +
                        std::to_string(p.width()),
                    f.var_index());
      }
      return p.bit(f.var_index());
    case XForm::Kind::Not:
      return !evaluate(f.children()[0], p);
    case XForm::Kind::And:
      for (const XForm& c : f.children()) {
        if (!evaluate(c, p)) return false;
      }
      return true;
    case XForm::Kind::Or:
      for (const XForm& c : f.children()) {
        if (evaluate(c, p)) return true;
      }
      return false;
  }
  return false;
}

namespace {

// Table of variable i over the whole pattern space: bit k of the words is set
// iff bit (width - i) of k is set. Low positions repeat a fixed 64-bit mask;
// higher ones alternate whole words.
TruthTable var_table(int width, int index) {
  static constexpr uint64_t kLowMasks[6] = {
      0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
      0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
  };
  TruthTable t(width);
  const int j = width - index;
  std::span<uint64_t> w = t.words();
  if (j < 6) {
    for (size_t i = 0; i < w.size(); ++i) w[i] = kLowMasks[j];
    w.back() &= t.tail_mask();
  } else {
    for (size_t i = 0; i < w.size(); ++i) {
      w[i] = ((i >> (j - 6)) & 1) ? ~0ull : 0ull;
    }
  }
  return t;
}

TruthTable build_table(const XForm& f, int width) {
  switch (f.kind()) {
    case XForm::Kind::Const0:
      return TruthTable(width);
    case XForm::Kind::Const1:
      return TruthTable::all_ones(width);
    case XForm::Kind::Var:
      return var_table(width, f.var_index());
    case XForm::Kind::Not:
      return ~build_table(f.children()[0], width);
    case XForm::Kind::And: {
      TruthTable acc = build_table(f.children()[0], width);
      for (size_t i = 1; i < f.children().size(); ++i) {
        acc = acc & build_table(f.children()[i], width);
      }
      return acc;
    }
    case XForm::Kind::Or: {
      TruthTable acc = build_table(f.children()[0], width);
      for (size_t i = 1; i < f.children().size(); ++i) {
        acc = acc | build_table(f.children()[i], width);
      }
      return acc;
    }
  }
  return TruthTable(width);
}

}  // namespace

TruthTable truth_table(const XForm& f, int width) {
  if (width < 1 || width > kMaxWidth) {
    throw Error(ErrorCode::WidthExceeded,
                "width " + std::to_string(width) + " out of range", width);
  }
  if (f.max_var() > width) {
    throw Error(ErrorCode::WidthMismatch,
                "expression uses b" + std::to_string(f.max_var()) +
                    " but the table width is " + std::to_string(width),
                f.max_var());
  }
  return build_table(f, width);
}

bool equivalent(const XForm& f, const XForm& g, int width) {
  return truth_table(f, width) == truth_table(g, width);
}

namespace {

XForm random_node(std::mt19937_64& rng, int width, int depth_budget) {
  if (depth_budget <= 1 || rng() % 4 == 0) {
    const uint64_t r = rng() % static_cast<uint64_t>(width + 2);
    if (r < static_cast<uint64_t>(width)) {
      return XForm::var(static_cast<int>(r) + 1);
    }
    return XForm::constant(r == static_cast<uint64_t>(width + 1));
  }
  switch (rng() % 3) {
    case 0:
      return XForm::negation(random_node(rng, width, depth_budget - 1));
    case 1: {
      std::vector<XForm> cs;
      const size_t arity = 2 + rng() % 2;
      for (size_t i = 0; i < arity; ++i) {
        cs.push_back(random_node(rng, width, depth_budget - 1));
      }
      return XForm::conjunction(std::move(cs));
    }
    default: {
      std::vector<XForm> cs;
      const size_t arity = 2 + rng() % 2;
      for (size_t i = 0; i < arity; ++i) {
        cs.push_back(random_node(rng, width, depth_budget - 1));
      }
      return XForm::disjunction(std::move(cs));
    }
  }
}

}  // namespace

XForm random_xform(int width, int max_depth, uint64_t seed) {
  if (width < 1 || width > kMaxWidth) {
    throw Error(ErrorCode::WidthExceeded,
                "width " + std::to_string(width) + " out of range", width);
  }
  if (max_depth < 1) max_depth = 1;
  std::mt19937_64 rng(seed);
  return random_node(rng, width, max_depth);
}

}  // namespace mlab
