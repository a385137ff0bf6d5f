#include "farey/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "farey/cf.hpp"
#include "farey/measures.hpp"
#include "farey/rational.hpp"
#include "farey/transforms.hpp"
#include "farey/tree.hpp"

namespace farey {
namespace {

std::string str_of(const Rational& r) { return r.str(); }
std::string str_of(const CFTuple& x) { return x.str(); }
std::string str_of(const Int& i) { return i.str(); }

class Checker {
 public:
  explicit Checker(std::string name) { result_.name = std::move(name); }

  template <typename MsgFn>
  void require(bool ok, MsgFn&& msg) {
    ++result_.checked;
    if (ok || !result_.passed) return;
    result_.passed = false;
    result_.detail = msg();
  }

  template <typename A, typename B, typename MsgFn>
  void equal(const A& a, const B& b, MsgFn&& msg) {
    require(a == b,
            [&] { return msg() + ": got " + str_of(a) + ", expected " + str_of(b); });
  }

  PropertyResult finish() { return std::move(result_); }

 private:
  PropertyResult result_;
};

void for_each_tuple(unsigned max_norm, const std::function<void(const CFTuple&)>& f) {
  for (unsigned n = 0; n <= max_norm; ++n) {
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) f(tuple_at(n, i));
  }
}

// Reduced fractions p/q with 0 < p < q <= max_den.
void for_each_fraction(long long max_den, const std::function<void(const Rational&)>& f) {
  for (long long q = 2; q <= max_den; ++q) {
    for (long long p = 1; p < q; ++p) {
      if (std::gcd(p, q) == 1) f(Rational(p, q));
    }
  }
}

std::vector<std::pair<std::string, TransitionFunction>> all_kinds() {
  return {{"minkowski", TransitionFunction::minkowski()},
          {"denjoy(1/3)", TransitionFunction::denjoy(Rational(1, 3))},
          {"lebesgue", TransitionFunction::lebesgue()},
          {"k-lebesgue", TransitionFunction::k_lebesgue()},
          {"j-lebesgue", TransitionFunction::j_lebesgue()},
          {"kj-lebesgue", TransitionFunction::kj_lebesgue()}};
}

const std::vector<std::pair<std::string, Automorphism>>& nontrivial_automorphisms() {
  static const std::vector<std::pair<std::string, Automorphism>> auts = {
      {"K", Automorphism::K}, {"J", Automorphism::J}, {"KJ", Automorphism::KJ}};
  return auts;
}

// --- cf-core ---------------------------------------------------------------

PropertyResult theta_roundtrip(unsigned d) {
  Checker chk("theta-roundtrip");
  for_each_tuple(d + 6, [&](const CFTuple& x) {
    chk.equal(theta_inverse(theta(x)), x,
              [&] { return "theta_inverse(theta(x)) at " + x.str(); });
    std::string word = lr_word(x);
    chk.equal(word_to_tuple(word), x, [&] { return "word roundtrip at " + x.str(); });
    chk.require(Int(word.size()) == x.norm(),
                [&] { return "word length differs from norm at " + x.str(); });
  });
  return chk.finish();
}

PropertyResult continuant_convergents(unsigned d) {
  Checker chk("continuant-convergents");
  for_each_tuple(d + 6, [&](const CFTuple& x) {
    std::vector<Int> digits = x.entries();
    digits.back() += 1;
    std::vector<Int> tail(digits.begin() + 1, digits.end());
    chk.equal(theta(x), Rational(continuant(tail), continuant(digits)),
              [&] { return "continuant ratio vs theta at " + x.str(); });
    chk.equal(theta(x).den(), continuant(digits),
              [&] { return "denominator vs continuant at " + x.str(); });
    std::vector<Int> rev(digits.rbegin(), digits.rend());
    chk.equal(continuant(digits), continuant(rev),
              [&] { return "continuant reversal invariance at " + x.str(); });
  });
  return chk.finish();
}

PropertyResult theta_rational_roundtrip(unsigned d) {
  Checker chk("theta-rational-roundtrip");
  for_each_fraction(50LL * d, [&](const Rational& r) {
    chk.equal(theta(theta_inverse(r)), r, [&] { return "theta(theta_inverse(r)) at " + r.str(); });
    chk.require(cf_expand(r).back() >= 2,
                [&] { return "canonical expansion of " + r.str() + " ends in a digit < 2"; });
  });
  return chk.finish();
}

PropertyResult monoid_norm_additivity(unsigned d) {
  Checker chk("monoid-norm-additivity");
  for (unsigned a = 0; a <= d; ++a) {
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << a); ++i) {
      CFTuple x = tuple_at(a, i);
      for (unsigned b = 0; b <= d; ++b) {
        for (std::uint64_t j = 0; j < (std::uint64_t{1} << b); ++j) {
          CFTuple y = tuple_at(b, j);
          chk.require(star(x, y).norm() == x.norm() + y.norm(),
                      [&] { return "norm additivity at " + x.str() + " * " + y.str(); });
        }
      }
    }
  }
  return chk.finish();
}

PropertyResult monoid_words(unsigned d) {
  Checker chk("monoid-words");
  unsigned bound = d > 2 ? d - 2 : 0;
  for (unsigned a = 0; a <= bound; ++a) {
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << a); ++i) {
      CFTuple x = tuple_at(a, i);
      for (unsigned b = 0; b <= bound; ++b) {
        for (std::uint64_t j = 0; j < (std::uint64_t{1} << b); ++j) {
          CFTuple y = tuple_at(b, j);
          CFTuple s = star(x, y);
          chk.equal(s, word_to_tuple(lr_word(x) + lr_word(y)),
                    [&] { return "star vs word concatenation at " + x.str() + " * " + y.str(); });
          chk.equal(theta(s), star_rational(theta(x), theta(y)),
                    [&] { return "theta of star at " + x.str() + " * " + y.str(); });
        }
      }
    }
  }
  return chk.finish();
}

PropertyResult star_associativity(unsigned d) {
  Checker chk("star-associativity");
  unsigned bound = d > 4 ? d - 4 : 0;
  for (unsigned a = 0; a <= bound; ++a) {
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << a); ++i) {
      CFTuple x = tuple_at(a, i);
      for (unsigned b = 0; b <= bound; ++b) {
        for (std::uint64_t j = 0; j < (std::uint64_t{1} << b); ++j) {
          CFTuple y = tuple_at(b, j);
          CFTuple xy = star(x, y);
          for (unsigned c = 0; c <= bound; ++c) {
            for (std::uint64_t k = 0; k < (std::uint64_t{1} << c); ++k) {
              CFTuple z = tuple_at(c, k);
              chk.equal(star(xy, z), star(x, star(y, z)), [&] {
                return "associativity at " + x.str() + " * " + y.str() + " * " + z.str();
              });
            }
          }
        }
      }
    }
  }
  return chk.finish();
}

PropertyResult generator_families(unsigned d) {
  Checker chk("generator-families");
  const CFTuple gen_l(std::vector<Int>{2});
  const CFTuple gen_r(std::vector<Int>{1, 1});
  CFTuple lpow = CFTuple::root();
  CFTuple rpow = CFTuple::root();
  Rational lval = theta(CFTuple::root());
  Rational rval = lval;
  for (long long n = 1; n <= 2LL * d; ++n) {
    lpow = star(lpow, gen_l);
    rpow = star(rpow, gen_r);
    lval = star_rational(lval, Rational(1, 3));
    rval = star_rational(rval, Rational(2, 3));
    chk.equal(lpow, CFTuple(std::vector<Int>{Int(n + 1)}),
              [&] { return "L^" + std::to_string(n); });
    chk.equal(rpow, CFTuple(std::vector<Int>{1, Int(n)}),
              [&] { return "R^" + std::to_string(n); });
    chk.equal(lval, Rational(1, n + 2), [&] { return "(1/3)^*" + std::to_string(n); });
    chk.equal(rval, Rational(n + 1, n + 2), [&] { return "(2/3)^*" + std::to_string(n); });
    chk.equal(theta(lpow), lval, [&] { return "theta of L^" + std::to_string(n); });
    chk.equal(theta(rpow), rval, [&] { return "theta of R^" + std::to_string(n); });
  }
  return chk.finish();
}

// --- transforms --------------------------------------------------------------

PropertyResult involutions(unsigned d) {
  Checker chk("involutions");
  for_each_tuple(d + 4, [&](const CFTuple& x) {
    chk.equal(k_tuple(k_tuple(x)), x, [&] { return "K twice at " + x.str(); });
    chk.equal(flip_tuple(flip_tuple(x)), x, [&] { return "flip twice at " + x.str(); });
    chk.equal(jimm_tuple(jimm_tuple(x)), x, [&] { return "jimm twice at " + x.str(); });
  });
  return chk.finish();
}

PropertyResult norm_preservation(unsigned d) {
  Checker chk("norm-preservation");
  for_each_tuple(d + 4, [&](const CFTuple& x) {
    chk.equal(k_tuple(x).norm(), x.norm(), [&] { return "K norm at " + x.str(); });
    chk.equal(flip_tuple(x).norm(), x.norm(), [&] { return "flip norm at " + x.str(); });
    chk.equal(jimm_tuple(x).norm(), x.norm(), [&] { return "jimm norm at " + x.str(); });
  });
  return chk.finish();
}

PropertyResult k_reflection(unsigned d) {
  Checker chk("k-reflection");
  for_each_tuple(d + 4, [&](const CFTuple& x) {
    chk.equal(theta(k_tuple(x)), Rational(1) - theta(x),
              [&] { return "theta of Kx at " + x.str(); });
    std::string swapped = lr_word(x);
    for (char& c : swapped) c = (c == 'L') ? 'R' : 'L';
    chk.equal(k_tuple(x), word_to_tuple(swapped),
              [&] { return "K as word swap at " + x.str(); });
  });
  return chk.finish();
}

PropertyResult commutations(unsigned d) {
  Checker chk("commutations");
  for_each_tuple(d + 2, [&](const CFTuple& x) {
    chk.equal(jimm_tuple(k_tuple(x)), k_tuple(jimm_tuple(x)),
              [&] { return "JK = KJ at " + x.str(); });
    chk.equal(jimm_tuple(flip_tuple(x)), flip_tuple(jimm_tuple(x)),
              [&] { return "J flip = flip J at " + x.str(); });
    if (x.is_root()) return;
    chk.equal(jimm_tuple(farey_map_tuple(x)), farey_map_tuple(jimm_tuple(x)),
              [&] { return "J T_F = T_F J at " + x.str(); });
    chk.equal(k_tuple(parent_map(x)), parent_map(k_tuple(x)),
              [&] { return "K parent = parent K at " + x.str(); });
    chk.equal(jimm_tuple(parent_map(x)), parent_map(jimm_tuple(x)),
              [&] { return "J parent = parent J at " + x.str(); });
    chk.equal(k_tuple(jimm_tuple(parent_map(x))), parent_map(k_tuple(jimm_tuple(x))),
              [&] { return "KJ parent = parent KJ at " + x.str(); });
    chk.equal(flip_tuple(farey_map_tuple(flip_tuple(x))), parent_map(x),
              [&] { return "flip T_F flip = parent at " + x.str(); });
  });
  return chk.finish();
}

PropertyResult jimm_sibling_preservation(unsigned d) {
  Checker chk("jimm-sibling-preservation");
  for_each_tuple(d + 2, [&](const CFTuple& x) {
    auto kids = children(x);
    auto image_kids = children(jimm_tuple(x));
    CFTuple ja = jimm_tuple(kids.first);
    CFTuple jb = jimm_tuple(kids.second);
    bool match = (ja == image_kids.first && jb == image_kids.second) ||
                 (ja == image_kids.second && jb == image_kids.first);
    chk.require(match, [&] {
      return "J images of the children of " + x.str() + " are not the children of " +
             jimm_tuple(x).str();
    });
  });
  return chk.finish();
}

PropertyResult jimm_functional_equations(unsigned d) {
  Checker chk("jimm-functional-equations");
  for_each_fraction(20LL * d, [&](const Rational& r) {
    Rational jr = jimm_extended(r);
    Rational one(1);
    chk.equal(jimm_extended(one / (one + r)), jr / (one + jr),
              [&] { return "J(1/(1+x)) law at " + r.str(); });
    chk.equal(jimm_extended(r / (one + r)), one / (one + jr),
              [&] { return "J(x/(1+x)) law at " + r.str(); });
  });
  return chk.finish();
}

PropertyResult jimm_matrix_oracle(unsigned d) {
  Checker chk("jimm-matrix-oracle");
  for_each_fraction(50LL * d, [&](const Rational& r) {
    chk.equal(jimm_rational(r), jimm_matrix(r), [&] { return "jimm at " + r.str(); });
  });
  return chk.finish();
}

PropertyResult extended_jimm(unsigned d) {
  Checker chk("extended-jimm");
  for_each_fraction(50LL * d, [&](const Rational& r) {
    chk.equal(jimm_rational(jimm_rational(r)), r,
              [&] { return "involution at " + r.str(); });
  });
  for_each_fraction(20LL * d, [&](const Rational& r) {
    Rational jr = jimm_rational(r);
    chk.equal(jimm_extended(r.reciprocal()), jr.reciprocal(),
              [&] { return "reciprocal law at " + r.str(); });
    chk.equal(jimm_extended(-r), -jr.reciprocal(),
              [&] { return "negation law at " + r.str(); });
    chk.equal(jimm_extended(jimm_extended(-r)), -r,
              [&] { return "extended involution at -" + r.str(); });
  });
  for (long long m = 1; m <= 2LL * d; ++m) {
    Rational rm(m);
    chk.equal(jimm_extended(rm), jimm_matrix(rm),
              [&] { return "integer " + std::to_string(m) + " vs matrix form"; });
    chk.equal(jimm_extended(jimm_extended(rm)), rm,
              [&] { return "integer involution at " + std::to_string(m); });
  }
  return chk.finish();
}

PropertyResult value_central_symmetry(unsigned d) {
  Checker chk("value-central-symmetry");
  for_each_tuple(d + 4, [&](const CFTuple& x) {
    Rational v = theta(x);
    chk.equal(jimm_rational(Rational(1) - v), Rational(1) - jimm_rational(v),
              [&] { return "J(1-v) = 1-J(v) at v = " + v.str(); });
    if (x.is_root()) return;
    Rational w = pi_lambda(x);
    chk.equal(Rational(1) - jimm_rational(w), jimm_rational(Rational(1) - w),
              [&] { return "K/J order swap at pi value of " + x.str(); });
  });
  return chk.finish();
}

PropertyResult twisted_cw_sequence(unsigned) {
  Checker chk("twisted-calkin-wilf");
  static const long long expected[30][2] = {
      {1, 1}, {1, 2}, {2, 1}, {2, 3}, {3, 1}, {1, 3}, {3, 2}, {3, 5}, {5, 2}, {1, 4},
      {4, 3}, {3, 4}, {4, 1}, {2, 5}, {5, 3}, {5, 8}, {8, 3}, {2, 7}, {7, 5}, {4, 5},
      {5, 1}, {3, 7}, {7, 4}, {4, 7}, {7, 3}, {1, 5}, {5, 4}, {5, 7}, {7, 2}, {3, 8}};
  std::vector<Rational> terms = twisted_calkin_wilf(30);
  for (std::size_t i = 0; i < 30; ++i) {
    chk.equal(terms[i], Rational(expected[i][0], expected[i][1]),
              [&] { return "term " + std::to_string(i + 1); });
  }
  return chk.finish();
}

// --- farey-tree --------------------------------------------------------------

PropertyResult interval_median(unsigned d) {
  Checker chk("interval-median");
  for_each_tuple(d + 4, [&](const CFTuple& x) {
    FareyInterval iv = interval_of(x);
    chk.equal(iv.median(), theta(x), [&] { return "median at " + x.str(); });
    std::vector<Int> pre(x.entries().begin(), x.entries().end() - 1);
    chk.equal(iv.length(), Rational(1, continuant(pre) * continuant(x.entries())),
              [&] { return "length vs continuants at " + x.str(); });
    chk.equal(iv.left().den() * iv.right().num() - iv.left().num() * iv.right().den(),
              Int(1), [&] { return "adjacency qr - ps at " + x.str(); });
    chk.equal(iv.length(), Rational(1, iv.left().den() * iv.right().den()),
              [&] { return "length vs 1/(qs) at " + x.str(); });
  });
  return chk.finish();
}

PropertyResult child_split(unsigned d) {
  Checker chk("child-split");
  for_each_tuple(d + 2, [&](const CFTuple& x) {
    FareyInterval iv = interval_of(x);
    auto kids = children_drawn(x);
    FareyInterval lk = interval_of(kids.first);
    FareyInterval rk = interval_of(kids.second);
    chk.equal(lk.left(), iv.left(), [&] { return "left child left end at " + x.str(); });
    chk.equal(lk.right(), iv.median(), [&] { return "left child right end at " + x.str(); });
    chk.equal(rk.left(), iv.median(), [&] { return "right child left end at " + x.str(); });
    chk.equal(rk.right(), iv.right(), [&] { return "right child right end at " + x.str(); });
  });
  return chk.finish();
}

PropertyResult level_tiling(unsigned d) {
  Checker chk("level-tiling");
  for (unsigned n = 0; n <= d; ++n) {
    std::vector<std::pair<Rational, Rational>> spans;
    spans.reserve(std::size_t{1} << n);
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
      FareyInterval iv = interval_of(tuple_at(n, i));
      spans.emplace_back(iv.left(), iv.right());
    }
    std::sort(spans.begin(), spans.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    chk.equal(spans.front().first, Rational(0),
              [&] { return "tiling starts at 0 on level " + std::to_string(n); });
    chk.equal(spans.back().second, Rational(1),
              [&] { return "tiling ends at 1 on level " + std::to_string(n); });
    for (std::size_t i = 0; i + 1 < spans.size(); ++i) {
      chk.equal(spans[i].second, spans[i + 1].first, [&] {
        return "gap or overlap between intervals on level " + std::to_string(n);
      });
    }
  }
  return chk.finish();
}

PropertyResult lineage_membership(unsigned d) {
  Checker chk("lineage-membership");
  for_each_tuple(d, [&](const CFTuple& x) {
    Rational v = theta(x);
    for (const CFTuple& y : lineage(x)) {
      chk.require(interval_of(y).contains_open(v), [&] {
        return "theta(" + x.str() + ") outside the open interval of ancestor " + y.str();
      });
      if (!(y == x) && !y.is_root()) {
        chk.require(!interval_of(sibling(y)).contains_open(v), [&] {
          return "theta(" + x.str() + ") inside the interval of " + sibling(y).str();
        });
      }
    }
  });
  return chk.finish();
}

// theta(y) lies in the open interval of x exactly when x's address word is a
// prefix of y's; checked over every ordered pair of vertices up to the bound.
PropertyResult membership_iff(unsigned d) {
  Checker chk("membership-iff");
  struct Node {
    std::string word;
    Rational value;
    FareyInterval interval;
  };
  std::vector<Node> nodes;
  for_each_tuple(d, [&](const CFTuple& x) {
    nodes.push_back({lr_word(x), theta(x), interval_of(x)});
  });
  for (const Node& x : nodes) {
    for (const Node& y : nodes) {
      const bool prefix = y.word.size() >= x.word.size() &&
                          y.word.compare(0, x.word.size(), x.word) == 0;
      chk.require(x.interval.contains_open(y.value) == prefix, [&] {
        return "membership mismatch between words '" + x.word + "' and '" + y.word + "'";
      });
    }
  }
  return chk.finish();
}

// In the flipped tree the drawn children of the vertex labelled p/q carry the
// labels p/(p+q) and q/(p+q).
PropertyResult flipped_caption_rule(unsigned d) {
  Checker chk("flipped-caption-rule");
  for_each_tuple(d + 2, [&](const CFTuple& x) {
    Rational v = theta(flip_tuple(x));
    auto drawn = children_drawn(x);
    Rational a = theta(flip_tuple(drawn.first));
    Rational b = theta(flip_tuple(drawn.second));
    Rational lo(v.num(), v.num() + v.den());
    Rational hi(v.den(), v.num() + v.den());
    bool match = (a == lo && b == hi) || (a == hi && b == lo);
    chk.require(match, [&] {
      return "children of " + str_of(v) + " are " + str_of(a) + ", " + str_of(b);
    });
  });
  return chk.finish();
}

PropertyResult planar_order(unsigned d) {
  Checker chk("planar-order");
  for_each_tuple(d + 2, [&](const CFTuple& x) {
    auto formula = children(x);
    auto drawn = children_drawn(x);
    bool same_set = (formula.first == drawn.first && formula.second == drawn.second) ||
                    (formula.first == drawn.second && formula.second == drawn.first);
    chk.require(same_set, [&] { return "drawn children differ as a set at " + x.str(); });
    chk.require(drawn.first.length() % 2 == 1,
                [&] { return "drawn-left child has even length at " + x.str(); });
    chk.require(theta(drawn.first) < theta(drawn.second),
                [&] { return "drawn children out of order at " + x.str(); });
    chk.equal(parent_map(drawn.first), x, [&] { return "parent of left child of " + x.str(); });
    chk.equal(parent_map(drawn.second), x,
              [&] { return "parent of right child of " + x.str(); });
    chk.equal(sibling(drawn.first), drawn.second,
              [&] { return "sibling of left child of " + x.str(); });
    chk.equal(sibling(drawn.second), drawn.first,
              [&] { return "sibling of right child of " + x.str(); });
  });
  return chk.finish();
}

// --- measures ----------------------------------------------------------------

PropertyResult pi_lambda_forms_agree(unsigned d) {
  Checker chk("pi-lambda-forms");
  for_each_tuple(d + 2, [&](const CFTuple& x) {
    if (x.is_root()) return;
    Rational p = pi_lambda(x);
    PiLambdaForms forms = pi_lambda_forms(x);
    chk.equal(forms.digit_form, p, [&] { return "digit form at " + x.str(); });
    chk.equal(forms.conjugation_form, p, [&] { return "conjugation form at " + x.str(); });
    chk.equal(forms.tuple_form, p, [&] { return "tuple form at " + x.str(); });
  });
  return chk.finish();
}

PropertyResult k_invariance(unsigned d) {
  Checker chk("k-invariance");
  for_each_tuple(d + 4, [&](const CFTuple& x) {
    chk.equal(pi_lambda(k_tuple(x)), pi_lambda(x),
              [&] { return "pi_lambda of Kx at " + x.str(); });
  });
  return chk.finish();
}

PropertyResult central_symmetry(unsigned d) {
  Checker chk("central-symmetry");
  TransitionFunction leb = TransitionFunction::lebesgue();
  for_each_tuple(d + 4, [&](const CFTuple& x) {
    chk.equal(pi_eval(leb, jimm_tuple(x)), jimm_extended(pi_eval(leb, x)),
              [&] { return "pi_lambda(Jx) vs J(pi_lambda(x)) at " + x.str(); });
  });
  return chk.finish();
}

PropertyResult sibling_sum(unsigned d) {
  Checker chk("sibling-sum");
  auto kinds = all_kinds();
  for_each_tuple(d + 1, [&](const CFTuple& parent) {
    auto kids = children(parent);
    for (const auto& [name, pi] : kinds) {
      chk.equal(pi(kids.first) + pi(kids.second), Rational(1),
                [&, &name = name] { return name + " sibling sum under " + parent.str(); });
    }
  });
  return chk.finish();
}

PropertyResult lebesgue_exactness(unsigned d) {
  Checker chk("lebesgue-exactness");
  TransitionFunction leb = TransitionFunction::lebesgue();
  for_each_tuple(d + 4, [&](const CFTuple& x) {
    chk.equal(interval_measure(leb, x), interval_of(x).length(),
              [&] { return "measure vs length at " + x.str(); });
  });
  for_each_fraction(20LL * d, [&](const Rational& r) {
    chk.equal(cdf(leb, r), r, [&] { return "cdf identity at " + r.str(); });
  });
  return chk.finish();
}

PropertyResult minkowski_closed_form(unsigned d) {
  Checker chk("minkowski-closed-form");
  TransitionFunction mink = TransitionFunction::minkowski();
  for_each_tuple(d + 4, [&](const CFTuple& x) {
    unsigned n = x.norm().convert_to<unsigned>();
    chk.equal(interval_measure(mink, x), Rational(1, Int(1) << n),
              [&] { return "2^-norm at " + x.str(); });
  });
  chk.equal(cdf(mink, Rational(1, 3)), Rational(1, 4), [] { return std::string("?(1/3)"); });
  for_each_fraction(20LL * d, [&](const Rational& r) {
    if (2 * r.num() > r.den()) return;
    chk.equal(cdf(mink, Rational(1) - r) + cdf(mink, r), Rational(1),
              [&] { return "?-symmetry at " + r.str(); });
  });
  return chk.finish();
}

PropertyResult reciprocal_integer(unsigned d) {
  Checker chk("reciprocal-integer");
  TransitionFunction leb = TransitionFunction::lebesgue();
  TransitionFunction jleb = TransitionFunction::j_lebesgue();
  for_each_tuple(d + 4, [&](const CFTuple& x) {
    chk.equal(interval_measure(leb, x).num(), Int(1),
              [&] { return "lebesgue lineage product at " + x.str(); });
    chk.equal(interval_measure(jleb, x).num(), Int(1),
              [&] { return "j-lebesgue lineage product at " + x.str(); });
  });
  return chk.finish();
}

PropertyResult minkowski_aut_invariance(unsigned d) {
  Checker chk("minkowski-aut-invariance");
  TransitionFunction mink = TransitionFunction::minkowski();
  for_each_tuple(d + 2, [&](const CFTuple& x) {
    Rational base = interval_measure(mink, x);
    for (const auto& [name, aut] : nontrivial_automorphisms()) {
      chk.equal(interval_measure(mink, apply_automorphism(aut, x)), base,
                [&, &name = name] { return "invariance under " + name + " at " + x.str(); });
    }
  });
  return chk.finish();
}

PropertyResult precomposition(unsigned d) {
  Checker chk("precomposition");
  auto kinds = all_kinds();
  TransitionFunction leb = TransitionFunction::lebesgue();
  TransitionFunction jleb = TransitionFunction::j_lebesgue();
  TransitionFunction kleb = TransitionFunction::k_lebesgue();
  TransitionFunction kjleb = TransitionFunction::kj_lebesgue();
  for_each_tuple(d, [&](const CFTuple& x) {
    for (const auto& [kname, pi] : kinds) {
      for (const auto& [aname, aut] : nontrivial_automorphisms()) {
        chk.equal(interval_measure(TransitionFunction::precomposed(pi, aut), x),
                  interval_measure(pi, apply_automorphism(aut, x)),
                  [&, &kname = kname, &aname = aname] {
                    return kname + " precomposed with " + aname + " at " + x.str();
                  });
      }
    }
    // Pointwise identities for the lebesgue family: K-invariance makes
    // precomposition with K a no-op, and precomposition with J realizes the
    // J-twisted kinds.
    chk.equal(pi_eval(TransitionFunction::precomposed(leb, Automorphism::K), x),
              pi_eval(leb, x), [&] { return "lebesgue pre-K at " + x.str(); });
    chk.equal(pi_eval(TransitionFunction::precomposed(leb, Automorphism::J), x),
              pi_eval(jleb, x), [&] { return "lebesgue pre-J at " + x.str(); });
    chk.equal(pi_eval(TransitionFunction::precomposed(leb, Automorphism::KJ), x),
              pi_eval(jleb, x), [&] { return "lebesgue pre-KJ at " + x.str(); });
    chk.equal(pi_eval(TransitionFunction::precomposed(kleb, Automorphism::J), x),
              pi_eval(kjleb, x), [&] { return "k-lebesgue pre-J at " + x.str(); });
    chk.equal(pi_eval(TransitionFunction::precomposed(jleb, Automorphism::J), x),
              pi_eval(leb, x), [&] { return "j-lebesgue pre-J at " + x.str(); });
  });
  return chk.finish();
}

PropertyResult additivity(unsigned d) {
  Checker chk("additivity");
  auto kinds = all_kinds();
  for_each_tuple(d + 1, [&](const CFTuple& parent) {
    auto kids = children(parent);
    for (const auto& [name, pi] : kinds) {
      chk.equal(interval_measure(pi, parent),
                interval_measure(pi, kids.first) + interval_measure(pi, kids.second),
                [&, &name = name] { return name + " additivity at " + parent.str(); });
    }
  });
  return chk.finish();
}

PropertyResult cdf_symmetries(unsigned d) {
  Checker chk("cdf-symmetries");
  TransitionFunction kleb = TransitionFunction::k_lebesgue();
  TransitionFunction jleb = TransitionFunction::j_lebesgue();
  TransitionFunction kjleb = TransitionFunction::kj_lebesgue();
  TransitionFunction den_a = TransitionFunction::denjoy(Rational(1, 3));
  TransitionFunction den_b = TransitionFunction::denjoy(Rational(2, 3));
  for_each_fraction(20LL * d, [&](const Rational& r) {
    if (2 * r.num() > r.den()) return;
    Rational mirrored = Rational(1) - r;
    chk.equal(cdf(kleb, r) + cdf(kleb, mirrored), Rational(1),
              [&] { return "k-lebesgue central symmetry at " + r.str(); });
    chk.equal(cdf(jleb, r) + cdf(jleb, mirrored), Rational(1),
              [&] { return "j-lebesgue central symmetry at " + r.str(); });
    chk.equal(cdf(kjleb, r) + cdf(kjleb, mirrored), Rational(1),
              [&] { return "kj-lebesgue central symmetry at " + r.str(); });
    chk.equal(cdf(den_a, r) + cdf(den_b, mirrored), Rational(1),
              [&] { return "denjoy mirror pair at " + r.str(); });
  });
  return chk.finish();
}

PropertyResult interval_cdf_consistency(unsigned d) {
  Checker chk("interval-cdf-consistency");
  std::vector<std::pair<std::string, TransitionFunction>> kinds = {
      {"minkowski", TransitionFunction::minkowski()},
      {"denjoy(1/3)", TransitionFunction::denjoy(Rational(1, 3))},
      {"lebesgue", TransitionFunction::lebesgue()},
      {"j-lebesgue", TransitionFunction::j_lebesgue()}};
  for_each_tuple(d, [&](const CFTuple& x) {
    FareyInterval iv = interval_of(x);
    for (const auto& [name, pi] : kinds) {
      chk.equal(cdf(pi, iv.right()) - cdf(pi, iv.left()), interval_measure(pi, x),
                [&, &name = name] { return name + " cdf jump across I(" + x.str() + ")"; });
    }
  });
  return chk.finish();
}

PropertyResult grid_monotone(unsigned) {
  Checker chk("grid-monotone");
  std::vector<CdfSample> lebesgue_grid;
  std::vector<CdfSample> j_grid;
  for (const auto& [name, pi] : all_kinds()) {
    std::vector<CdfSample> grid = cdf_grid(pi, 256);
    chk.equal(grid.front().F, Rational(0),
              [&, &name = name] { return name + " grid F(0)"; });
    chk.equal(grid.back().F, Rational(1), [&, &name = name] { return name + " grid F(1)"; });
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
      chk.require(grid[i].F <= grid[i + 1].F, [&, &name = name] {
        return name + " grid decreases at " + grid[i + 1].x.str();
      });
    }
    if (name == "lebesgue") lebesgue_grid = grid;
    if (name == "j-lebesgue") j_grid = std::move(grid);
  }
  bool deformed = false;
  for (std::size_t i = 0; i < j_grid.size(); ++i) {
    if (j_grid[i].F != lebesgue_grid[i].F) {
      deformed = true;
      break;
    }
  }
  chk.require(deformed,
              [] { return std::string("j-lebesgue grid coincides with the lebesgue grid"); });
  return chk.finish();
}

PropertyResult transition_validity(unsigned d) {
  Checker chk("transition-validity");
  for (const auto& [name, pi] : all_kinds()) {
    ValidationReport report = validate_transition(pi, d + 2);
    chk.require(report.ok,
                [&, &name = name] { return name + " failed validation: " + report.detail; });
  }
  ValidationReport constant = validate_transition(
      [](const CFTuple&) { return Rational(1, 3); }, 1);
  chk.require(!constant.ok,
              [] { return std::string("constant 1/3 transition accepted"); });
  ValidationReport rooted = validate_transition(
      [](const CFTuple& x) { return x.is_root() ? Rational(1) : Rational(1, 3); }, 1);
  chk.require(!rooted.ok,
              [] { return std::string("non-summing 1/3 transition accepted"); });
  return chk.finish();
}

}  // namespace

std::vector<PropertyResult> run_all(unsigned depth) {
  std::vector<PropertyResult> out;
  out.push_back(theta_roundtrip(depth));
  out.push_back(continuant_convergents(depth));
  out.push_back(theta_rational_roundtrip(depth));
  out.push_back(monoid_norm_additivity(depth));
  out.push_back(monoid_words(depth));
  out.push_back(star_associativity(depth));
  out.push_back(generator_families(depth));
  out.push_back(involutions(depth));
  out.push_back(norm_preservation(depth));
  out.push_back(k_reflection(depth));
  out.push_back(commutations(depth));
  out.push_back(jimm_sibling_preservation(depth));
  out.push_back(jimm_functional_equations(depth));
  out.push_back(jimm_matrix_oracle(depth));
  out.push_back(extended_jimm(depth));
  out.push_back(value_central_symmetry(depth));
  out.push_back(twisted_cw_sequence(depth));
  out.push_back(interval_median(depth));
  out.push_back(child_split(depth));
  out.push_back(level_tiling(depth));
  out.push_back(lineage_membership(depth));
  out.push_back(membership_iff(depth));
  out.push_back(planar_order(depth));
  out.push_back(flipped_caption_rule(depth));
  out.push_back(pi_lambda_forms_agree(depth));
  out.push_back(k_invariance(depth));
  out.push_back(central_symmetry(depth));
  out.push_back(sibling_sum(depth));
  out.push_back(lebesgue_exactness(depth));
  out.push_back(minkowski_closed_form(depth));
  out.push_back(reciprocal_integer(depth));
  out.push_back(minkowski_aut_invariance(depth));
  out.push_back(precomposition(depth));
  out.push_back(additivity(depth));
  out.push_back(cdf_symmetries(depth));
  out.push_back(interval_cdf_consistency(depth));
  out.push_back(grid_monotone(depth));
  out.push_back(transition_validity(depth));
  return out;
}

bool all_passed(const std::vector<PropertyResult>& results) {
  for (const auto& r : results) {
    if (!r.passed) return false;
  }
  return true;
}

std::string format_report(const std::vector<PropertyResult>& results) {
  std::string out;
  for (const auto& r : results) {
    out += r.passed ? "PASS" : "FAIL";
    out += "  ";
    out += r.name;
    out += "  (" + std::to_string(r.checked) + " checks)";
    if (!r.passed) out += "\n      " + r.detail;
    out += "\n";
  }
  return out;
}

}  // namespace farey
