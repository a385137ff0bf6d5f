#include "farey/tree.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "farey/measures.hpp"
#include "farey/transforms.hpp"

namespace farey {

FareyInterval::FareyInterval(Rational left, Rational right)
    : left_(std::move(left)), right_(std::move(right)) {
  if (left_.num() < 0 || right_.num() > right_.den()) {
    throw std::invalid_argument("FareyInterval: endpoints must lie in [0, 1]");
  }
  if (left_.den() * right_.num() - left_.num() * right_.den() != 1) {
    throw std::invalid_argument("FareyInterval: endpoints " + left_.str() + ", " +
                                right_.str() + " are not Farey neighbours");
  }
}

std::string FareyInterval::str() const { return "[" + left_.str() + ", " + right_.str() + "]"; }

FareyInterval interval_of(const CFTuple& x) {
  std::vector<Int> digits = x.entries();
  digits.back() += 1;
  // Convergents of [0; digits]: the last is theta(x), and the two interval
  // endpoints are the previous convergent and their difference.
  Int p_prev = 1, q_prev = 0, p = 0, q = 1;
  for (const Int& m : digits) {
    Int pn = m * p + p_prev;
    Int qn = m * q + q_prev;
    p_prev = std::move(p);
    q_prev = std::move(q);
    p = std::move(pn);
    q = std::move(qn);
  }
  Rational a(p_prev, q_prev);
  Rational b(p - p_prev, q - q_prev);
  if (b < a) std::swap(a, b);
  return FareyInterval(std::move(a), std::move(b));
}

namespace {

CFTuple increment_last(const CFTuple& x) {
  std::vector<Int> out = x.entries();
  out.back() += 1;
  return CFTuple(std::move(out));
}

CFTuple append_one(const CFTuple& x) {
  std::vector<Int> out = x.entries();
  out.emplace_back(1);
  return CFTuple(std::move(out));
}

}  // namespace

std::pair<CFTuple, CFTuple> children(const CFTuple& x) {
  return {increment_last(x), append_one(x)};
}

std::pair<CFTuple, CFTuple> children_drawn(const CFTuple& x) {
  // Odd tuple length: the incremented child sits to the left as drawn;
  // even length: the appended child does. Drawn-left children always have
  // odd length.
  auto pair = children(x);
  if (x.length() % 2 == 0) std::swap(pair.first, pair.second);
  return pair;
}

CFTuple sibling(const CFTuple& x) {
  if (x.is_root()) throw std::domain_error("sibling: the root has no sibling");
  std::vector<Int> out = x.entries();
  if (out.back() == 1) {
    out.pop_back();
    out.back() += 1;
  } else {
    out.back() -= 1;
    out.emplace_back(1);
  }
  return CFTuple(std::move(out));
}

std::vector<CFTuple> lineage(const CFTuple& x) {
  std::vector<CFTuple> out;
  out.push_back(x);
  while (!out.back().is_root()) out.push_back(parent_map(out.back()));
  return out;
}

CFTuple tuple_at(unsigned n, std::uint64_t index) {
  if (n > 62) throw std::invalid_argument("tuple_at: norm too large to index");
  if (n > 0 && (index >> n) != 0) throw std::invalid_argument("tuple_at: index out of range");
  std::string word;
  word.reserve(n);
  for (unsigned bit = n; bit-- > 0;) {
    word.push_back((index >> bit) & 1 ? 'R' : 'L');
  }
  return word_to_tuple(word);
}

namespace {

std::string vertex_label(TreeVariant variant, const CFTuple& x) {
  auto pretty = [](const Rational& v) { return v.is_one() ? std::string("1") : v.str(); };
  switch (variant) {
    case TreeVariant::farey:
      return theta(x).str();
    case TreeVariant::monoid:
      return x.str();
    case TreeVariant::flipped:
      return theta(flip_tuple(x)).str();
    case TreeVariant::jimm:
      return theta(jimm_tuple(x)).str();
    case TreeVariant::lebesgue:
      return pretty(pi_lambda(x));
    case TreeVariant::jimm_lebesgue:
      return x.is_root() ? std::string("1") : pretty(jimm_rational(pi_lambda(x)));
  }
  throw std::logic_error("render_tree: unknown variant");
}

void render_text(TreeVariant variant, const CFTuple& x, unsigned level, unsigned depth,
                 std::string& out) {
  out.append(2 * level, ' ');
  out += vertex_label(variant, x);
  out += "  [";
  out += x.str();
  out += "]\n";
  if (level + 1 >= depth) return;
  auto kids = children_drawn(x);
  render_text(variant, kids.first, level + 1, depth, out);
  render_text(variant, kids.second, level + 1, depth, out);
}

void render_dot(TreeVariant variant, const CFTuple& x, unsigned level, unsigned depth,
                std::string& out) {
  std::string key = x.str();
  out += "  \"" + key + "\" [label=\"" + vertex_label(variant, x) + "\" tooltip=\"" + key +
         "\"];\n";
  if (level + 1 >= depth) return;
  auto kids = children_drawn(x);
  out += "  \"" + key + "\" -> \"" + kids.first.str() + "\";\n";
  out += "  \"" + key + "\" -> \"" + kids.second.str() + "\";\n";
  render_dot(variant, kids.first, level + 1, depth, out);
  render_dot(variant, kids.second, level + 1, depth, out);
}

}  // namespace

std::string render_tree(const TreeRenderSpec& spec) {
  if (spec.depth == 0) throw std::invalid_argument("render_tree: depth must be at least 1");
  if (spec.depth > spec.max_depth) {
    throw std::invalid_argument("render_tree: depth " + std::to_string(spec.depth) +
                                " exceeds the limit of " + std::to_string(spec.max_depth));
  }
  std::string out;
  if (spec.format == TreeFormat::text) {
    render_text(spec.variant, CFTuple::root(), 0, spec.depth, out);
  } else {
    out += "digraph tree {\n  node [shape=box];\n";
    render_dot(spec.variant, CFTuple::root(), 0, spec.depth, out);
    out += "}\n";
  }
  return out;
}

}  // namespace farey
