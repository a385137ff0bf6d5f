#include "farey/measures.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "farey/transforms.hpp"
#include "farey/tree.hpp"

namespace farey {

Rational pi_lambda(const CFTuple& x) {
  if (x.is_root()) return Rational(1);
  std::vector<Int> reversed(x.entries().rbegin(), x.entries().rend());
  return Rational(1) - cf_value(reversed);
}

PiLambdaForms pi_lambda_forms(const CFTuple& x) {
  if (x.is_root()) throw std::domain_error("pi_lambda_forms: undefined at the root");
  const auto& e = x.entries();

  // (a) As a continued fraction: [0; 1, n_k - 1, n_{k-1}, ..., n_1], merging
  // out the zero when n_k = 1.
  std::vector<Int> digits;
  digits.reserve(e.size() + 1);
  digits.emplace_back(1);
  digits.push_back(e.back() - 1);
  for (std::size_t i = e.size() - 1; i-- > 0;) digits.push_back(e[i]);
  if (digits[1] == 0) {
    Int merged = digits[0] + digits[2];
    digits.erase(digits.begin(), digits.begin() + 3);
    digits.insert(digits.begin(), std::move(merged));
  }
  Rational digit_form = cf_value(digits);

  // (b) By conjugation: reflect the flip of the Farey image of theta(x).
  Rational conjugation_form = k_rational(flip_rational(farey_map_rational(theta(x))));

  // (c) As a vertex: reverse the tuple, decrement its first and last entries
  // (the same entry twice when k = 1), prepend 1, normalize zeros away.
  std::vector<Int> t;
  t.reserve(e.size() + 1);
  t.emplace_back(1);
  for (auto it = e.rbegin(); it != e.rend(); ++it) t.push_back(*it);
  t[1] -= 1;
  t.back() -= 1;
  while (t.size() > 1 && t.back() == 0) t.pop_back();
  if (t.size() > 2 && t[1] == 0) {
    Int merged = t[0] + t[2];
    t.erase(t.begin(), t.begin() + 3);
    t.insert(t.begin(), std::move(merged));
  }
  Rational tuple_form = theta(CFTuple(std::move(t)));

  return {std::move(digit_form), std::move(conjugation_form), std::move(tuple_form)};
}

CFTuple apply_automorphism(Automorphism aut, const CFTuple& x) {
  switch (aut) {
    case Automorphism::identity:
      return x;
    case Automorphism::K:
      return k_tuple(x);
    case Automorphism::J:
      return jimm_tuple(x);
    case Automorphism::KJ:
      return k_tuple(jimm_tuple(x));
  }
  throw std::logic_error("apply_automorphism: unknown automorphism");
}

namespace {

// Composition in the Klein four-group {identity, K, J, KJ}; `outer` is
// applied after `inner`.
Automorphism compose(Automorphism outer, Automorphism inner) {
  if (outer == Automorphism::identity) return inner;
  if (inner == Automorphism::identity) return outer;
  if (outer == inner) return Automorphism::identity;
  // Two distinct non-identity elements multiply to the third.
  int mask = 0;
  for (Automorphism a : {outer, inner}) {
    mask |= (a == Automorphism::K) ? 1 : (a == Automorphism::J) ? 2 : 3;
  }
  switch (mask ^ 3) {
    case 1:
      return Automorphism::K;
    case 2:
      return Automorphism::J;
    default:
      return Automorphism::KJ;
  }
}

}  // namespace

TransitionFunction TransitionFunction::minkowski() {
  return {PiKind::minkowski, Rational(1, 2), Automorphism::identity};
}

TransitionFunction TransitionFunction::denjoy(const Rational& a) {
  if (a.num() <= 0 || a.num() >= a.den()) {
    throw std::domain_error("denjoy: parameter must lie strictly between 0 and 1");
  }
  return {PiKind::denjoy, a, Automorphism::identity};
}

TransitionFunction TransitionFunction::lebesgue() {
  return {PiKind::lebesgue, Rational(1, 2), Automorphism::identity};
}

TransitionFunction TransitionFunction::k_lebesgue() {
  return {PiKind::k_lebesgue, Rational(1, 2), Automorphism::identity};
}

TransitionFunction TransitionFunction::j_lebesgue() {
  return {PiKind::j_lebesgue, Rational(1, 2), Automorphism::identity};
}

TransitionFunction TransitionFunction::kj_lebesgue() {
  return {PiKind::kj_lebesgue, Rational(1, 2), Automorphism::identity};
}

TransitionFunction TransitionFunction::precomposed(const TransitionFunction& base,
                                                   Automorphism aut) {
  return {base.kind_, base.a_, compose(base.twist_, aut)};
}

Rational TransitionFunction::operator()(const CFTuple& x) const {
  CFTuple y = apply_automorphism(twist_, x);
  if (y.is_root()) return Rational(1);
  switch (kind_) {
    case PiKind::minkowski:
      return Rational(1, 2);
    case PiKind::denjoy:
      return y.length() % 2 == 1 ? a_ : Rational(1) - a_;
    case PiKind::lebesgue:
      return pi_lambda(y);
    case PiKind::k_lebesgue:
      return Rational(1) - pi_lambda(y);
    case PiKind::j_lebesgue:
      return jimm_rational(pi_lambda(y));
    case PiKind::kj_lebesgue:
      return Rational(1) - jimm_rational(pi_lambda(y));
  }
  throw std::logic_error("TransitionFunction: unknown kind");
}

Rational pi_eval(const TransitionFunction& pi, const CFTuple& x) { return pi(x); }

Rational interval_measure(const TransitionFunction& pi, const CFTuple& x) {
  Rational out = pi(CFTuple::root());
  CFTuple cur = x;
  while (!cur.is_root()) {
    out = out * pi(cur);
    cur = parent_map(cur);
  }
  return out;
}

Rational cdf(const TransitionFunction& pi, const Rational& x) {
  if (x.num() < 0 || x.num() > x.den()) {
    throw std::domain_error("cdf: point must lie in [0, 1]");
  }
  if (x.is_zero()) return Rational(0);
  if (x.is_one()) return Rational(1);
  std::vector<Int> digits = cf_expand(x);
  Rational sum(0);
  Rational mass(1);  // measure of the interval at the current digit prefix
  std::vector<Int> prefix;
  prefix.reserve(digits.size());
  bool positive = true;
  for (const Int& d : digits) {
    prefix.emplace_back(0);
    for (Int j = 1; j <= d; ++j) {
      prefix.back() = j;
      mass = mass * pi(CFTuple(prefix));
    }
    sum = positive ? sum + mass : sum - mass;
    positive = !positive;
  }
  return sum;
}

std::vector<CdfSample> cdf_grid(const TransitionFunction& pi, long long denominator,
                                Exec exec) {
  if (denominator < 1) throw std::invalid_argument("cdf_grid: denominator must be positive");
  std::vector<CdfSample> out(static_cast<std::size_t>(denominator) + 1);
  if (exec == Exec::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long i = 0; i <= denominator; ++i) {
      Rational xi(i, denominator);
      out[static_cast<std::size_t>(i)] = {xi, cdf(pi, xi)};
    }
  } else {
    for (long long i = 0; i <= denominator; ++i) {
      Rational xi(i, denominator);
      out[static_cast<std::size_t>(i)] = {xi, cdf(pi, xi)};
    }
  }
  return out;
}

void write_csv(std::ostream& out, const std::vector<CdfSample>& samples, unsigned precision) {
  out << "x_num,x_den,F_num,F_den,x_decimal,F_decimal\n";
  for (const auto& s : samples) {
    out << s.x.num() << ',' << s.x.den() << ',' << s.F.num() << ',' << s.F.den() << ','
        << s.x.decimal(precision) << ',' << s.F.decimal(precision) << '\n';
  }
}

ValidationReport validate_transition(const std::function<Rational(const CFTuple&)>& pi,
                                     unsigned depth) {
  ValidationReport report;
  auto fail = [&report](std::string detail) {
    report.ok = false;
    report.detail = std::move(detail);
  };
  Rational at_root = pi(CFTuple::root());
  ++report.checked;
  if (at_root != Rational(1)) {
    fail("value at the root is " + at_root.str() + ", expected 1");
    return report;
  }
  for (unsigned n = 1; n <= depth; ++n) {
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
      CFTuple x = tuple_at(n, i);
      Rational v = pi(x);
      ++report.checked;
      if (v.num() <= 0 || v.num() >= v.den()) {
        fail("value " + v.str() + " at " + x.str() + " is outside (0, 1)");
        return report;
      }
    }
  }
  for (unsigned n = 0; n < depth; ++n) {
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
      CFTuple parent = tuple_at(n, i);
      auto kids = children(parent);
      Rational total = pi(kids.first) + pi(kids.second);
      ++report.checked;
      if (total != Rational(1)) {
        fail("children of " + parent.str() + " sum to " + total.str() + ", expected 1");
        return report;
      }
    }
  }
  return report;
}

ValidationReport validate_transition(const TransitionFunction& pi, unsigned depth) {
  return validate_transition(
      [&pi](const CFTuple& x) { return pi(x); }, depth);
}

namespace {

// splitmix64 as a counter-based generator: draw `index` of the stream with
// the given seed. Independent of evaluation order, so serial and parallel
// walks see identical randomness.
std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

struct Landing {
  Rational median;
  Rational f_left;   // exact c.d.f. at the landing interval's left endpoint
  Rational f_right;  // and at its right endpoint
};

Rational abs_value(const Rational& r) { return r.num() < 0 ? -r : r; }

}  // namespace

WalkSummary monte_carlo_walk(const TransitionFunction& pi, std::size_t samples,
                             unsigned depth, std::uint64_t seed, Exec exec) {
  if (samples == 0) throw std::invalid_argument("monte_carlo_walk: need at least one walk");
  std::vector<Landing> landings(samples);
  auto walk_one = [&](std::size_t w) {
    CFTuple node = CFTuple::root();
    Rational f_left(0);
    Rational f_right(1);
    Rational mass(1);
    for (unsigned t = 0; t < depth; ++t) {
      auto kids = children_drawn(node);
      Rational p_left = pi(kids.first);
      Rational f_mid = f_left + mass * p_left;
      std::uint64_t u =
          splitmix64_at(seed, static_cast<std::uint64_t>(w) * depth + t);
      bool go_left = Int(u) * p_left.den() < (p_left.num() << 64);
      if (go_left) {
        node = std::move(kids.first);
        f_right = f_mid;
        mass = mass * p_left;
      } else {
        node = std::move(kids.second);
        f_left = std::move(f_mid);
        mass = mass * (Rational(1) - p_left);
      }
    }
    landings[w] = {theta(node), std::move(f_left), std::move(f_right)};
  };
  if (exec == Exec::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64)
#endif
    for (long long w = 0; w < static_cast<long long>(samples); ++w) {
      walk_one(static_cast<std::size_t>(w));
    }
  } else {
    for (std::size_t w = 0; w < samples; ++w) walk_one(w);
  }

  std::sort(landings.begin(), landings.end(),
            [](const Landing& a, const Landing& b) { return a.median < b.median; });

  WalkSummary summary;
  summary.samples = samples;
  summary.depth = depth;
  summary.seed = seed;
  summary.points.reserve(samples);
  for (const auto& l : landings) summary.points.push_back(l.median);

  // The empirical c.d.f. is constant across each landing interval's interior,
  // so |F_n - F| over the tiling's endpoints is maximized at one of them.
  Rational ks(0);
  Int n(samples);
  std::size_t i = 0;
  while (i < landings.size()) {
    std::size_t j = i;
    while (j < landings.size() && landings[j].median == landings[i].median) ++j;
    Rational below(Int(i), n);
    Rational through(Int(j), n);
    ks = std::max(ks, abs_value(below - landings[i].f_left));
    ks = std::max(ks, abs_value(through - landings[i].f_right));
    i = j;
  }
  summary.ks_exact = ks;
  summary.ks = ks.to_double();
  return summary;
}

}  // namespace farey
