#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "farey/rational.hpp"

namespace farey {

// Vertex address in the binary tree of rationals in (0,1): a nonempty tuple
// (n_1,...,n_k) of positive integers. The tuple (1) is the root. Construction
// rejects anything else, so a CFTuple is normalized by type.
class CFTuple {
 public:
  explicit CFTuple(std::vector<Int> entries);
  static CFTuple root() { return CFTuple({Int(1)}); }

  const std::vector<Int>& entries() const { return entries_; }
  std::size_t length() const { return entries_.size(); }
  bool is_root() const { return entries_.size() == 1 && entries_[0] == 1; }

  // Depth in the tree: sum of entries minus one.
  Int norm() const;

  // A vertex is a right child exactly when its tuple length is even;
  // the root (1) counts as a left child.
  bool is_right_child() const { return entries_.size() % 2 == 0; }

  std::string str() const;                       // "(n1,n2,...,nk)"
  static CFTuple parse(std::string_view text);

  friend bool operator==(const CFTuple& a, const CFTuple& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::vector<Int> entries_;
};

// Continuant <n_1,...,n_k>: K() = 1, K(n) = n,
// K(n_1..n_k) = n_k * K(n_1..n_{k-1}) + K(n_1..n_{k-2}).
Int continuant(const std::vector<Int>& seq);

// Value of the continued fraction [0; m_1, ..., m_j] (all m_i >= 1).
Rational cf_value(const std::vector<Int>& digits);

// Canonical continued-fraction digits of r in (0,1): the unique expansion
// [0; n_1, ..., n_m] whose last digit is >= 2.
std::vector<Int> cf_expand(const Rational& r);

// theta(n_1,...,n_k) = [0; n_1, ..., n_k + 1], a bijection onto Q ∩ (0,1).
Rational theta(const CFTuple& x);

// Inverse of theta: canonical digits with the last digit decremented.
CFTuple theta_inverse(const Rational& r);

// Concatenation product of the tree monoid: descend from theta(x) along the
// root-to-theta(y) path. Associative, neutral element (1).
CFTuple star(const CFTuple& x, const CFTuple& y);
Rational star_rational(const Rational& a, const Rational& b);

// Word of x over the generators L = (2) and R = (1,1):
// (n_1, n_2, n_3, ...) = L^{n_1 - 1} R^{n_2} L^{n_3} ...
// The word spells the root-to-x path; its length equals norm(x).
std::string lr_word(const CFTuple& x);
CFTuple word_to_tuple(std::string_view word);

}  // namespace farey
