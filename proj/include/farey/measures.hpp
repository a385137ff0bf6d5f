#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "farey/cf.hpp"
#include "farey/rational.hpp"

namespace farey {

// Execution policy for the grid and walk kernels. Both policies produce
// bit-identical results; parallel uses OpenMP when it is available.
enum class Exec { serial, parallel };

// pi_lambda(x) = 1 - [0; n_k, ..., n_1]: the boundary transition value whose
// lineage products are exactly the interval lengths. Root -> 1.
Rational pi_lambda(const CFTuple& x);

// Three independent expressions for pi_lambda away from the root, returned
// together so they can be compared: a continued-fraction digit form, a
// conjugation form (reflection of flip of the Farey image), and a tuple form.
struct PiLambdaForms {
  Rational digit_form;
  Rational conjugation_form;
  Rational tuple_form;
};
PiLambdaForms pi_lambda_forms(const CFTuple& x);  // domain error at the root

enum class PiKind { minkowski, denjoy, lebesgue, k_lebesgue, j_lebesgue, kj_lebesgue };

// Tuple automorphism used to precompose a transition function.
enum class Automorphism { identity, K, J, KJ };

CFTuple apply_automorphism(Automorphism aut, const CFTuple& x);

// A transition function assigns a value to every vertex: 1 at the root and,
// for the built-in kinds, a value in (0,1) elsewhere, with the two children
// of any vertex summing to 1. It determines a boundary measure by taking
// products down lineages.
class TransitionFunction {
 public:
  static TransitionFunction minkowski();              // 1/2 everywhere
  static TransitionFunction denjoy(const Rational& a);  // a on left children; a in (0,1)
  static TransitionFunction lebesgue();               // pi_lambda
  static TransitionFunction k_lebesgue();             // 1 - pi_lambda
  static TransitionFunction j_lebesgue();             // J(pi_lambda)
  static TransitionFunction kj_lebesgue();            // 1 - J(pi_lambda)
  // base evaluated after mapping the vertex through the automorphism.
  static TransitionFunction precomposed(const TransitionFunction& base, Automorphism aut);

  Rational operator()(const CFTuple& x) const;

  PiKind kind() const { return kind_; }
  Automorphism twist() const { return twist_; }
  const Rational& denjoy_parameter() const { return a_; }

 private:
  TransitionFunction(PiKind kind, Rational a, Automorphism twist)
      : kind_(kind), a_(std::move(a)), twist_(twist) {}

  PiKind kind_;
  Rational a_;  // denjoy parameter; unused otherwise
  Automorphism twist_;
};

// Value of the transition function at one vertex.
Rational pi_eval(const TransitionFunction& pi, const CFTuple& x);

// Measure of the Farey interval indexed by x: the product of transition
// values along the lineage of x (root included).
Rational interval_measure(const TransitionFunction& pi, const CFTuple& x);

// Distribution function of the boundary measure at a rational point of
// [0,1]: an exact alternating sum of interval measures over the prefixes of
// the continued-fraction digits of x.
Rational cdf(const TransitionFunction& pi, const Rational& x);

struct CdfSample {
  Rational x;
  Rational F;
};

// Exact c.d.f. samples at 0, 1/denominator, ..., 1.
std::vector<CdfSample> cdf_grid(const TransitionFunction& pi, long long denominator,
                                Exec exec = Exec::serial);

// CSV with exact numerators/denominators plus fixed-point decimals
// (round half to even) for plotting.
void write_csv(std::ostream& out, const std::vector<CdfSample>& samples,
               unsigned precision = 18);

struct ValidationReport {
  bool ok = true;
  std::size_t checked = 0;  // number of vertex/pair checks performed
  std::string detail;       // first violation, if any
};

// Checks, over all vertices of norm <= depth: value 1 at the root, values
// strictly inside (0,1) elsewhere, and children of a common parent summing
// to 1.
ValidationReport validate_transition(const TransitionFunction& pi, unsigned depth);
ValidationReport validate_transition(const std::function<Rational(const CFTuple&)>& pi,
                                     unsigned depth);

struct WalkSummary {
  std::size_t samples = 0;
  unsigned depth = 0;
  std::uint64_t seed = 0;
  std::vector<Rational> points;  // landing medians, sorted ascending
  Rational ks_exact;             // sup |F_n - F| over landing-interval endpoints
  double ks = 0.0;               // ks_exact as a double
};

// Random descents of the tree: each walk starts at the root and takes `depth`
// steps, choosing the left child as drawn with probability equal to its
// transition value. The landing vertex's median is the sample point. The
// Kolmogorov-Smirnov statistic compares the empirical distribution with the
// exact c.d.f. at the endpoints of the landing intervals, where both are
// known exactly.
WalkSummary monte_carlo_walk(const TransitionFunction& pi, std::size_t samples,
                             unsigned depth, std::uint64_t seed,
                             Exec exec = Exec::serial);

}  // namespace farey
