#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "farey/cf.hpp"
#include "farey/rational.hpp"

namespace farey {

// --- K: the generator-exchange (reflection) automorphism -------------------

// K(2) = (1,1), K(1,1) = (2); in general prepend 1 and decrement the first
// entry, normalizing away a zero. Involution; theta(k_tuple(x)) = 1 - theta(x).
CFTuple k_tuple(const CFTuple& x);
Rational k_rational(const Rational& r);  // 1 - r on (0,1)

// --- flip: tuple reversal ---------------------------------------------------

CFTuple flip_tuple(const CFTuple& x);
Rational flip_rational(const Rational& r);  // theta . flip . theta^-1 on (0,1)

// --- Jimm -------------------------------------------------------------------

// One elimination step applied during Jimm normalization. Raw entries are
// plain integers where the symbolic run 1_m contributes m literal ones for
// m >= 1; the placeholders 1_0 and 1_{-1} are kept as tagged entries 0 and -1
// until eliminated.
struct RewriteStep {
  std::string rule;   // "1_{-1} merge" or "1_0 drop"
  std::size_t index;  // position the rule fired at
  std::string state;  // raw tuple after the step, placeholders shown symbolically
};

struct RewriteTrace {
  std::string initial;             // raw tuple before normalization
  std::vector<RewriteStep> steps;  // applied left to right, one at a time
  std::string str() const;         // printable derivation
};

// Jimm on tuples: (n_1,...,n_k) -> (1_{n_1-1}, 2, 1_{n_2-2}, 2, ..., 2, 1_{n_k-1})
// for k > 1 and (n_1) -> (1_{n_1}) for k = 1, normalized by the elimination
// rules [m,1_{-1},n] -> [m+n-1], [m,1_0,n] -> [m,n] and dropping a leading or
// trailing 1_0, applying the leftmost applicable rule first. Depth-preserving
// involution.
CFTuple jimm_tuple(const CFTuple& x);
CFTuple jimm_tuple(const CFTuple& x, RewriteTrace& trace);

// theta . jimm . theta^-1 on (0,1).
Rational jimm_rational(const Rational& r);

// Independent 2x2-matrix evaluation of Jimm for any positive rational:
// fold M <- M * T^digit * U over the canonical continued-fraction digits
// (T = [[1,1],[1,0]], U = [[0,1],[1,0]]), skipping the leading integer-part
// digit 0 when r < 1; the result is read off the second matrix column.
Rational jimm_matrix(const Rational& r);

// Extension of Jimm to all nonzero rationals: identity at 1,
// J(1/x) = 1/J(x) above 1 and J(-x) = -1/J(x) below 0. Involution.
Rational jimm_extended(const Rational& r);

// First `count` terms of the Calkin-Wilf sequence (1/1 then breadth-first
// a/b -> a/(a+b), (a+b)/b) mapped through jimm_extended.
std::vector<Rational> twisted_calkin_wilf(std::size_t count);

// --- Farey map and parent map ------------------------------------------------

// T_F: decrement the first entry, dropping a leading zero. The root (1) is
// absorbed (its image would be the empty tuple): domain error.
CFTuple farey_map_tuple(const CFTuple& x);

// x/(1-x) below 1/2 and (1-x)/x from 1/2 up; maps (0,1) onto (0,1], with the
// value 1 attained only at 1/2.
Rational farey_map_rational(const Rational& r);

// T_phiF: decrement the last entry, dropping a trailing zero; the tree parent.
// Equals flip . farey_map . flip. Domain error at the root.
CFTuple parent_map(const CFTuple& x);

struct Mat2 {
  Int a, b, c, d;  // row-major [[a,b],[c,d]]
  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
};
Mat2 mat2_pow(Mat2 base, Int exp);

}  // namespace farey
