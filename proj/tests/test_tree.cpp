#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "farey/cf.hpp"
#include "farey/rational.hpp"
#include "farey/tree.hpp"

using farey::CFTuple;
using farey::FareyInterval;
using farey::Int;
using farey::Rational;

namespace {

CFTuple tup(std::initializer_list<long long> entries) {
  std::vector<Int> v;
  for (long long e : entries) v.emplace_back(e);
  return CFTuple(std::move(v));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE_MESSAGE(in.good(), "missing golden file ", path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("interval construction demands adjacency") {
  CHECK_NOTHROW(FareyInterval(Rational(1, 3), Rational(1, 2)));
  CHECK_NOTHROW(FareyInterval(Rational(0), Rational(1)));
  CHECK_THROWS_AS(FareyInterval(Rational(1, 3), Rational(2, 3)), std::invalid_argument);
  CHECK_THROWS_AS(FareyInterval(Rational(1, 2), Rational(1, 3)), std::invalid_argument);
}

TEST_CASE("interval of a vertex") {
  FareyInterval root = farey::interval_of(tup({1}));
  CHECK(root.left() == Rational(0));
  CHECK(root.right() == Rational(1));
  CHECK(root.length() == Rational(1));

  FareyInterval deep = farey::interval_of(tup({3}));
  CHECK(deep.left() == Rational(0));
  CHECK(deep.right() == Rational(1, 3));
  CHECK(deep.median() == Rational(1, 4));

  FareyInterval mid = farey::interval_of(tup({2, 1}));
  CHECK(mid.left() == Rational(1, 3));
  CHECK(mid.right() == Rational(1, 2));
  CHECK(mid.length() == Rational(1, 6));
  CHECK(mid.str() == "[1/3, 1/2]");
  CHECK(mid.contains_open(Rational(2, 5)));
  CHECK(!mid.contains_open(Rational(1, 3)));
  CHECK(mid.contains_closed(Rational(1, 3)));
}

TEST_CASE("children in generator order") {
  CHECK(farey::children(tup({1})) == std::make_pair(tup({2}), tup({1, 1})));
  CHECK(farey::children(tup({2})) == std::make_pair(tup({3}), tup({2, 1})));
  CHECK(farey::children(tup({1, 1})) == std::make_pair(tup({1, 2}), tup({1, 1, 1})));
}

TEST_CASE("children in drawn order") {
  // Odd length: generator order already reads left to right.
  CHECK(farey::children_drawn(tup({1})) == std::make_pair(tup({2}), tup({1, 1})));
  // Even length: the appended-1 child is drawn on the left.
  CHECK(farey::children_drawn(tup({1, 1})) ==
        std::make_pair(tup({1, 1, 1}), tup({1, 2})));
  auto kids = farey::children_drawn(tup({2, 1}));
  CHECK(farey::theta(kids.first) < farey::theta(kids.second));
}

TEST_CASE("sibling") {
  CHECK(farey::sibling(tup({2})) == tup({1, 1}));
  CHECK(farey::sibling(tup({1, 1})) == tup({2}));
  CHECK(farey::sibling(tup({1, 2})) == tup({1, 1, 1}));
  CHECK(farey::sibling(tup({3})) == tup({2, 1}));
  CHECK_THROWS_AS(farey::sibling(tup({1})), std::domain_error);
}

TEST_CASE("lineage") {
  auto path = farey::lineage(tup({2, 1}));
  REQUIRE(path.size() == 3);
  CHECK(path[0] == tup({2, 1}));
  CHECK(path[1] == tup({2}));
  CHECK(path[2] == tup({1}));
  CHECK(farey::lineage(tup({1})) == std::vector<CFTuple>{tup({1})});
}

TEST_CASE("tuple_at indexes binary words") {
  CHECK(farey::tuple_at(0, 0) == tup({1}));
  CHECK(farey::tuple_at(1, 0) == tup({2}));
  CHECK(farey::tuple_at(1, 1) == tup({1, 1}));
  CHECK(farey::tuple_at(2, 0b00) == tup({3}));
  CHECK(farey::tuple_at(2, 0b01) == tup({2, 1}));
  CHECK(farey::tuple_at(2, 0b10) == tup({1, 1, 1}));
  CHECK(farey::tuple_at(2, 0b11) == tup({1, 2}));
  CHECK_THROWS_AS(farey::tuple_at(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(farey::tuple_at(63, 0), std::invalid_argument);
}

TEST_CASE("text rendering") {
  farey::TreeRenderSpec spec;
  spec.depth = 1;
  CHECK(farey::render_tree(spec) == "1/2  [(1)]\n");

  spec.depth = 2;
  CHECK(farey::render_tree(spec) ==
        "1/2  [(1)]\n"
        "  1/3  [(2)]\n"
        "  2/3  [(1,1)]\n");

  spec.variant = farey::TreeVariant::monoid;
  CHECK(farey::render_tree(spec) ==
        "(1)  [(1)]\n"
        "  (2)  [(2)]\n"
        "  (1,1)  [(1,1)]\n");

  spec.variant = farey::TreeVariant::flipped;
  CHECK(farey::render_tree(spec) ==
        "1/2  [(1)]\n"
        "  1/3  [(2)]\n"
        "  2/3  [(1,1)]\n");

  spec.variant = farey::TreeVariant::lebesgue;
  spec.depth = 3;
  std::string leb = farey::render_tree(spec);
  // Left spine reads 1, 1/2, 2/3.
  CHECK(leb.substr(0, leb.find('\n')) == "1  [(1)]");
  CHECK(leb.find("  1/2  [(2)]\n    2/3  [(3)]") != std::string::npos);
}

TEST_CASE("dot rendering") {
  farey::TreeRenderSpec spec;
  spec.depth = 2;
  spec.format = farey::TreeFormat::dot;
  std::string dot = farey::render_tree(spec);
  CHECK(dot.find("digraph tree {") == 0);
  CHECK(dot.find("\"(1)\" [label=\"1/2\" tooltip=\"(1)\"];") != std::string::npos);
  CHECK(dot.find("\"(1)\" -> \"(2)\";") != std::string::npos);
  CHECK(dot.find("\"(1)\" -> \"(1,1)\";") != std::string::npos);
  CHECK(dot.back() == '\n');
}

TEST_CASE("depth limits") {
  farey::TreeRenderSpec spec;
  spec.depth = 0;
  CHECK_THROWS_AS(farey::render_tree(spec), std::invalid_argument);
  spec.depth = 13;
  CHECK_THROWS_AS(farey::render_tree(spec), std::invalid_argument);
  spec.depth = 13;
  spec.max_depth = 13;
  CHECK_NOTHROW(farey::render_tree(spec));
}

TEST_CASE("depth-5 renderings match the golden files") {
  const std::pair<farey::TreeVariant, std::string> cases[] = {
      {farey::TreeVariant::farey, "farey"},
      {farey::TreeVariant::monoid, "monoid"},
      {farey::TreeVariant::flipped, "flipped"},
      {farey::TreeVariant::jimm, "jimm"},
      {farey::TreeVariant::lebesgue, "lebesgue"},
  };
  for (const auto& [variant, name] : cases) {
    CAPTURE(name);
    farey::TreeRenderSpec spec;
    spec.variant = variant;
    spec.depth = 5;
    CHECK(farey::render_tree(spec) == read_file(std::string(GOLDEN_DIR) + "/" + name + ".txt"));
  }
}
