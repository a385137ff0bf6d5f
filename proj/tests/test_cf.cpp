#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "farey/cf.hpp"
#include "farey/rational.hpp"

using farey::CFTuple;
using farey::Int;
using farey::Rational;

namespace {
CFTuple tup(std::initializer_list<long long> entries) {
  std::vector<Int> v;
  for (long long e : entries) v.emplace_back(e);
  return CFTuple(std::move(v));
}
}  // namespace

TEST_CASE("rational reduces and normalizes sign") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(6, 3).str() == "2/1");
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational arithmetic and comparison") {
  Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(-a == Rational(-1, 3));
  CHECK(b < a);
  CHECK(a <= a);
  CHECK(Rational(2, 3).reciprocal() == Rational(3, 2));
  CHECK_THROWS_AS(Rational(0).reciprocal(), std::domain_error);
}

TEST_CASE("rational parse and print") {
  CHECK(Rational::parse("2/3") == Rational(2, 3));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("-4/6") == Rational(-2, 3));
  CHECK_THROWS_AS(Rational::parse("2/"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
  CHECK(Rational(5, 8).str() == "5/8");
  CHECK(Rational(3).str() == "3/1");
}

TEST_CASE("rational decimal expansion rounds half to even") {
  CHECK(Rational(1, 2).decimal(3) == "0.500");
  CHECK(Rational(1, 3).decimal(6) == "0.333333");
  CHECK(Rational(2, 3).decimal(6) == "0.666667");
  CHECK(Rational(1, 8).decimal(2) == "0.12");   // 0.125 -> even
  CHECK(Rational(3, 8).decimal(2) == "0.38");   // 0.375 -> even
  CHECK(Rational(-1, 3).decimal(3) == "-0.333");
}

TEST_CASE("mediant") {
  CHECK(farey::mediant(Rational(0), Rational(1)) == Rational(1, 2));
  CHECK(farey::mediant(Rational(1, 3), Rational(1, 2)) == Rational(2, 5));
}

TEST_CASE("tuple validation and printing") {
  CHECK_THROWS_AS(CFTuple(std::vector<Int>{}), std::invalid_argument);
  CHECK_THROWS_AS(tup({2, 0, 1}), std::invalid_argument);
  CHECK(CFTuple::root() == tup({1}));
  CHECK(tup({1}).is_root());
  CHECK(!tup({2}).is_root());
  CHECK(tup({2, 1}).str() == "(2,1)");
  CHECK(CFTuple::parse("(2,1)") == tup({2, 1}));
  CHECK(CFTuple::parse("(1)") == CFTuple::root());
  CHECK_THROWS_AS(CFTuple::parse("2,1"), std::invalid_argument);
}

TEST_CASE("norm and child side") {
  CHECK(tup({1}).norm() == Int(0));
  CHECK(tup({2}).norm() == Int(1));
  CHECK(tup({2, 1}).norm() == Int(2));
  CHECK(tup({3, 2}).norm() == Int(4));
  // Right children are exactly the tuples of even length.
  CHECK(!tup({2}).is_right_child());
  CHECK(tup({1, 1}).is_right_child());
  CHECK(!tup({1, 1, 1}).is_right_child());
}

TEST_CASE("continuant") {
  CHECK(farey::continuant({}) == Int(1));
  CHECK(farey::continuant({Int(2)}) == Int(2));
  CHECK(farey::continuant({Int(2), Int(2)}) == Int(5));
  CHECK(farey::continuant({Int(1), Int(1), Int(1), Int(1), Int(1)}) == Int(8));
}

TEST_CASE("continued fraction expansion is canonical") {
  CHECK(farey::cf_expand(Rational(1, 3)) == std::vector<Int>{Int(3)});
  CHECK(farey::cf_expand(Rational(2, 3)) == (std::vector<Int>{Int(1), Int(2)}));
  CHECK(farey::cf_expand(Rational(5, 8)) ==
        (std::vector<Int>{Int(1), Int(1), Int(1), Int(2)}));
  CHECK_THROWS_AS(farey::cf_expand(Rational(0)), std::domain_error);
  CHECK_THROWS_AS(farey::cf_expand(Rational(1)), std::domain_error);
  CHECK_THROWS_AS(farey::cf_expand(Rational(3, 2)), std::domain_error);
}

TEST_CASE("cf_value inverts cf_expand") {
  CHECK(farey::cf_value({Int(3)}) == Rational(1, 3));
  CHECK(farey::cf_value({Int(1), Int(2)}) == Rational(2, 3));
  CHECK(farey::cf_value({Int(1), Int(1), Int(1), Int(2)}) == Rational(5, 8));
  for (long long q = 2; q <= 60; ++q) {
    for (long long p = 1; p < q; ++p) {
      Rational r(p, q);
      if (r.num() != p) continue;  // skip unreduced duplicates
      CHECK(farey::cf_value(farey::cf_expand(r)) == r);
    }
  }
}

TEST_CASE("theta on known vertices") {
  CHECK(farey::theta(tup({1})) == Rational(1, 2));
  CHECK(farey::theta(tup({2})) == Rational(1, 3));
  CHECK(farey::theta(tup({1, 1})) == Rational(2, 3));
  CHECK(farey::theta(tup({1, 1, 1})) == Rational(3, 5));
}

TEST_CASE("theta_inverse on known values") {
  CHECK(farey::theta_inverse(Rational(1, 2)) == tup({1}));
  CHECK(farey::theta_inverse(Rational(3, 4)) == tup({1, 2}));
  CHECK(farey::theta_inverse(Rational(2, 5)) == tup({2, 1}));
  CHECK_THROWS_AS(farey::theta_inverse(Rational(0)), std::domain_error);
  CHECK_THROWS_AS(farey::theta_inverse(Rational(1)), std::domain_error);
}

TEST_CASE("star product") {
  CHECK(farey::star(tup({1, 1}), tup({2})) == tup({1, 1, 1}));
  CHECK(farey::star(tup({1}), tup({2})) == tup({2}));
  CHECK(farey::star(tup({2}), tup({1})) == tup({2}));
  CHECK(farey::star(tup({2}), tup({2})) == tup({3}));
  CHECK(farey::star(tup({1, 1}), tup({1, 1})) == tup({1, 2}));
  CHECK(farey::star_rational(Rational(2, 3), Rational(1, 3)) == Rational(3, 5));
  CHECK(farey::star_rational(Rational(1, 2), Rational(2, 5)) == Rational(2, 5));
}

TEST_CASE("generator words") {
  CHECK(farey::lr_word(tup({1})) == "");
  CHECK(farey::lr_word(tup({3, 2})) == "LLRR");
  CHECK(farey::lr_word(tup({2})) == "L");
  CHECK(farey::lr_word(tup({1, 1})) == "R");
  CHECK(farey::word_to_tuple("RL") == tup({1, 1, 1}));
  CHECK(farey::word_to_tuple("") == tup({1}));
  CHECK(farey::word_to_tuple("LLRR") == tup({3, 2}));
  CHECK_THROWS_AS(farey::word_to_tuple("LX"), std::invalid_argument);
}
