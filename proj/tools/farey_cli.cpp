// Command-line front end: evaluate transforms, dump trees, sample c.d.f.s to
// CSV, enumerate the twisted Calkin-Wilf sequence, run Monte-Carlo walks, and
// execute the verification suite.
//
// Exit codes: 0 success, 1 property failure (verify), 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "farey/cf.hpp"
#include "farey/measures.hpp"
#include "farey/rational.hpp"
#include "farey/transforms.hpp"
#include "farey/tree.hpp"
#include "farey/verify.hpp"

namespace {

using farey::CFTuple;
using farey::Rational;

farey::TransitionFunction make_measure(const std::string& name, const Rational& denjoy_a) {
  if (name == "minkowski") return farey::TransitionFunction::minkowski();
  if (name == "denjoy") return farey::TransitionFunction::denjoy(denjoy_a);
  if (name == "lebesgue") return farey::TransitionFunction::lebesgue();
  if (name == "k-lebesgue") return farey::TransitionFunction::k_lebesgue();
  if (name == "j-lebesgue") return farey::TransitionFunction::j_lebesgue();
  if (name == "kj-lebesgue") return farey::TransitionFunction::kj_lebesgue();
  throw std::invalid_argument("unknown measure: " + name);
}

farey::TreeVariant parse_variant(const std::string& name) {
  if (name == "farey") return farey::TreeVariant::farey;
  if (name == "monoid") return farey::TreeVariant::monoid;
  if (name == "flipped") return farey::TreeVariant::flipped;
  if (name == "jimm") return farey::TreeVariant::jimm;
  if (name == "lebesgue") return farey::TreeVariant::lebesgue;
  if (name == "jimm-lebesgue") return farey::TreeVariant::jimm_lebesgue;
  throw std::invalid_argument("unknown tree variant: " + name);
}

// Writes to the file at `path`, or to stdout when `path` is empty.
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << text;
}

int run_eval(const std::string& fn, const std::string& value, bool explain) {
  Rational r = Rational::parse(value);
  if (fn == "theta-inv") {
    std::cout << farey::theta_inverse(r).str() << "\n";
    return 0;
  }
  Rational result;
  if (fn == "k") {
    result = farey::k_rational(r);
  } else if (fn == "flip") {
    result = farey::flip_rational(r);
  } else if (fn == "jimm") {
    if (explain && r.num() > 0 && r < Rational(1)) {
      farey::RewriteTrace trace;
      CFTuple x = farey::theta_inverse(r);
      CFTuple jx = farey::jimm_tuple(x, trace);
      std::cout << "tuple:  " << x.str() << "\n";
      std::cout << trace.str() << "\n";
      std::cout << "jimm tuple: " << jx.str() << "\n";
    }
    result = farey::jimm_extended(r);
  } else if (fn == "farey") {
    result = farey::farey_map_rational(r);
  } else if (fn == "parent") {
    result = farey::theta(farey::parent_map(farey::theta_inverse(r)));
  } else if (fn == "pi-lambda") {
    result = farey::pi_lambda(farey::theta_inverse(r));
  } else {
    throw std::invalid_argument("unknown function: " + fn);
  }
  std::cout << result.str() << "\n";
  return 0;
}

int run_star(const std::string& lhs, const std::string& rhs) {
  bool lhs_tuple = !lhs.empty() && lhs.front() == '(';
  bool rhs_tuple = !rhs.empty() && rhs.front() == '(';
  if (lhs_tuple != rhs_tuple) {
    throw std::invalid_argument("star needs two tuples or two rationals, not a mix");
  }
  if (lhs_tuple) {
    std::cout << farey::star(CFTuple::parse(lhs), CFTuple::parse(rhs)).str() << "\n";
  } else {
    std::cout << farey::star_rational(Rational::parse(lhs), Rational::parse(rhs)).str()
              << "\n";
  }
  return 0;
}

int run_tree(const std::string& variant, unsigned depth, const std::string& format,
             const std::string& out_path) {
  farey::TreeRenderSpec spec;
  spec.variant = parse_variant(variant);
  spec.depth = depth;
  spec.format = (format == "dot") ? farey::TreeFormat::dot : farey::TreeFormat::text;
  emit(out_path, farey::render_tree(spec));
  return 0;
}

int run_cdf(const std::string& measure, const std::string& at, long long grid,
            unsigned precision, const std::string& out_path, const std::string& denjoy_a,
            bool parallel) {
  farey::TransitionFunction tf = make_measure(measure, Rational::parse(denjoy_a));
  if (!at.empty()) {
    std::cout << farey::cdf(tf, Rational::parse(at)).str() << "\n";
    return 0;
  }
  farey::Exec mode = parallel ? farey::Exec::parallel : farey::Exec::serial;
  std::vector<farey::CdfSample> samples = farey::cdf_grid(tf, grid, mode);
  if (out_path.empty()) {
    farey::write_csv(std::cout, samples, precision);
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
    farey::write_csv(out, samples, precision);
  }
  return 0;
}

int run_enumerate(std::size_t count) {
  for (const Rational& term : farey::twisted_calkin_wilf(count)) {
    std::cout << term.str() << "\n";
  }
  return 0;
}

int run_walk(const std::string& measure, std::size_t samples, unsigned depth,
             std::uint64_t seed, const std::string& denjoy_a, bool parallel) {
  farey::TransitionFunction tf = make_measure(measure, Rational::parse(denjoy_a));
  farey::Exec mode = parallel ? farey::Exec::parallel : farey::Exec::serial;
  farey::WalkSummary summary = farey::monte_carlo_walk(tf, samples, depth, seed, mode);
  std::cout << "measure: " << measure << "\n"
            << "samples: " << summary.samples << "\n"
            << "depth: " << summary.depth << "\n"
            << "seed: " << summary.seed << "\n"
            << "ks-exact: " << summary.ks_exact.str() << "\n"
            << "ks: " << summary.ks_exact.decimal(6) << "\n";
  return 0;
}

int run_verify(unsigned depth) {
  std::vector<farey::PropertyResult> results = farey::run_all(depth);
  std::cout << farey::format_report(results);
  return farey::all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Farey-tree toolkit: continued-fraction arithmetic, tree involutions, "
               "and boundary measures"};
  app.require_subcommand(1);

  // eval
  std::string eval_fn;
  std::string eval_value;
  bool eval_explain = false;
  CLI::App* eval = app.add_subcommand("eval", "Apply a transform to a rational");
  eval->add_option("fn", eval_fn, "k | flip | jimm | farey | parent | pi-lambda | theta-inv")
      ->required()
      ->check(CLI::IsMember(
          {"k", "flip", "jimm", "farey", "parent", "pi-lambda", "theta-inv"}));
  eval->add_option("value", eval_value, "Rational as p/q or integer")->required();
  eval->add_flag("--explain", eval_explain,
                 "With jimm on a rational in (0,1): print the rewrite trace");

  // star
  std::string star_lhs;
  std::string star_rhs;
  CLI::App* star = app.add_subcommand(
      "star", "Monoid product of two tuples \"(n1,n2,...)\" or two rationals");
  star->add_option("lhs", star_lhs, "Left factor")->required();
  star->add_option("rhs", star_rhs, "Right factor")->required();

  // tree
  std::string tree_variant = "farey";
  unsigned tree_depth = 5;
  std::string tree_format = "text";
  std::string tree_out;
  CLI::App* tree = app.add_subcommand("tree", "Render the labeled binary tree");
  tree->add_option("variant", tree_variant,
                   "farey | monoid | flipped | jimm | lebesgue | jimm-lebesgue")
      ->check(CLI::IsMember(
          {"farey", "monoid", "flipped", "jimm", "lebesgue", "jimm-lebesgue"}));
  tree->add_option("--depth", tree_depth, "Levels to render, at most 12")
      ->capture_default_str();
  tree->add_option("--format", tree_format, "text | dot")
      ->check(CLI::IsMember({"text", "dot"}))
      ->capture_default_str();
  tree->add_option("--out", tree_out, "Write to a file instead of stdout");

  // cdf
  std::string cdf_measure;
  std::string cdf_at;
  long long cdf_grid = 256;
  unsigned cdf_precision = 18;
  std::string cdf_out;
  std::string cdf_denjoy_a = "1/3";
  bool cdf_parallel = false;
  CLI::App* cdf = app.add_subcommand(
      "cdf", "Evaluate a boundary-measure c.d.f. exactly or sample it to CSV");
  cdf->add_option("measure", cdf_measure,
                  "minkowski | denjoy | lebesgue | k-lebesgue | j-lebesgue | kj-lebesgue")
      ->required()
      ->check(CLI::IsMember({"minkowski", "denjoy", "lebesgue", "k-lebesgue",
                             "j-lebesgue", "kj-lebesgue"}));
  CLI::Option* grid_opt =
      cdf->add_option("--grid", cdf_grid, "Sample F(i/N) for i = 0..N")
          ->capture_default_str();
  cdf->add_option("--at", cdf_at, "Print the exact value F(p/q) instead of a grid")
      ->excludes(grid_opt);
  cdf->add_option("--precision", cdf_precision, "Decimal digits in the CSV columns")
      ->capture_default_str();
  cdf->add_option("--out", cdf_out, "Write CSV to a file instead of stdout");
  cdf->add_option("--denjoy-a", cdf_denjoy_a, "Parameter in (0,1) for the denjoy measure")
      ->capture_default_str();
  cdf->add_flag("--parallel", cdf_parallel, "Compute grid rows in parallel");

  // enumerate
  std::size_t enum_count = 30;
  CLI::App* enumerate =
      app.add_subcommand("enumerate", "Print the twisted Calkin-Wilf sequence");
  enumerate->add_option("--count", enum_count, "Number of terms")->capture_default_str();

  // walk
  std::string walk_measure;
  std::size_t walk_samples = 100000;
  unsigned walk_depth = 30;
  std::uint64_t walk_seed = 42;
  std::string walk_denjoy_a = "1/3";
  bool walk_parallel = false;
  CLI::App* walk = app.add_subcommand(
      "walk", "Monte-Carlo walks down the tree; reports the KS distance to the c.d.f.");
  walk->add_option("measure", walk_measure,
                   "minkowski | denjoy | lebesgue | k-lebesgue | j-lebesgue | kj-lebesgue")
      ->required()
      ->check(CLI::IsMember({"minkowski", "denjoy", "lebesgue", "k-lebesgue",
                             "j-lebesgue", "kj-lebesgue"}));
  walk->add_option("--samples", walk_samples, "Number of walks")->capture_default_str();
  walk->add_option("--depth", walk_depth, "Steps per walk")->capture_default_str();
  walk->add_option("--seed", walk_seed, "Deterministic seed")->capture_default_str();
  walk->add_option("--denjoy-a", walk_denjoy_a, "Parameter in (0,1) for the denjoy measure")
      ->capture_default_str();
  walk->add_flag("--parallel", walk_parallel, "Run walks in parallel");

  // verify
  unsigned verify_depth = 10;
  CLI::App* verify =
      app.add_subcommand("verify", "Run every property suite; exit 1 on any failure");
  verify->add_option("--depth", verify_depth, "Exhaustiveness bound")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (eval->parsed()) return run_eval(eval_fn, eval_value, eval_explain);
    if (star->parsed()) return run_star(star_lhs, star_rhs);
    if (tree->parsed()) return run_tree(tree_variant, tree_depth, tree_format, tree_out);
    if (cdf->parsed()) {
      return run_cdf(cdf_measure, cdf_at, cdf_grid, cdf_precision, cdf_out, cdf_denjoy_a,
                     cdf_parallel);
    }
    if (enumerate->parsed()) return run_enumerate(enum_count);
    if (walk->parsed()) {
      return run_walk(walk_measure, walk_samples, walk_depth, walk_seed, walk_denjoy_a,
                      walk_parallel);
    }
    if (verify->parsed()) return run_verify(verify_depth);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
