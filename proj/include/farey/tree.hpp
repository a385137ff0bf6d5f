#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "farey/cf.hpp"
#include "farey/rational.hpp"

namespace farey {

// A Farey interval [p/q, r/s] with qr - ps = 1. Its median is the mediant
// (p+r)/(q+s) and its length is 1/(qs).
class FareyInterval {
 public:
  FareyInterval(Rational left, Rational right);  // invalid_argument unless adjacent

  const Rational& left() const { return left_; }
  const Rational& right() const { return right_; }
  Rational length() const { return right_ - left_; }
  Rational median() const { return mediant(left_, right_); }
  bool contains_open(const Rational& v) const { return left_ < v && v < right_; }
  bool contains_closed(const Rational& v) const { return left_ <= v && v <= right_; }
  std::string str() const;  // "[p/q, r/s]"

 private:
  Rational left_, right_;
};

// The Farey interval whose median is theta(x).
FareyInterval interval_of(const CFTuple& x);

// The two children of x in generator order: last entry incremented, then 1
// appended. children_drawn gives the same pair in planar (left-to-right as
// drawn) order, which swaps the two exactly when the tuple length is even.
std::pair<CFTuple, CFTuple> children(const CFTuple& x);
std::pair<CFTuple, CFTuple> children_drawn(const CFTuple& x);

// The other child of x's parent. Domain error at the root.
CFTuple sibling(const CFTuple& x);

// x, parent(x), ..., root.
std::vector<CFTuple> lineage(const CFTuple& x);

// The vertex of norm `n` selected by the low `n` bits of `index` read from
// most significant to least, 0 = left generator, 1 = right. Requires n <= 62;
// valid indices are 0 <= index < 2^n. Enumerating all indices enumerates the
// 2^n vertices of norm n.
CFTuple tuple_at(unsigned n, std::uint64_t index);

enum class TreeVariant { farey, monoid, flipped, jimm, lebesgue, jimm_lebesgue };
enum class TreeFormat { text, dot };

struct TreeRenderSpec {
  TreeVariant variant = TreeVariant::farey;
  unsigned depth = 5;      // number of levels; depth 1 is the root alone
  TreeFormat format = TreeFormat::text;
  unsigned max_depth = 12;  // render_tree rejects depth above this
};

// Renders the first `depth` levels. Text format: one vertex per line,
// depth-first in drawn order, two-space indent per level, the label followed
// by the tuple in brackets. Dot format: a digraph keyed by tuple strings.
// Throws invalid_argument when depth is zero or exceeds max_depth.
std::string render_tree(const TreeRenderSpec& spec);

}  // namespace farey
