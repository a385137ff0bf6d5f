// Benchmark comparing the serial reference kernels against the OpenMP-parallel
// ones. Both paths must produce identical output; the benchmark checks that
// while timing them.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "farey/measures.hpp"
#include "farey/rational.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Timing {
  double serial_ms = 0.0;
  double parallel_ms = 0.0;
  bool identical = false;
};

void report(const std::string& name, const Timing& t) {
  std::cout << name << ": serial " << t.serial_ms << " ms, parallel " << t.parallel_ms
            << " ms, speedup " << (t.parallel_ms > 0 ? t.serial_ms / t.parallel_ms : 0.0)
            << "x, outputs " << (t.identical ? "identical" : "DIFFER") << "\n";
}

Timing bench_grid(const farey::TransitionFunction& tf, long long denominator) {
  Timing t;
  auto start = Clock::now();
  std::vector<farey::CdfSample> serial = farey::cdf_grid(tf, denominator, farey::Exec::serial);
  t.serial_ms = ms_since(start);

  start = Clock::now();
  std::vector<farey::CdfSample> parallel =
      farey::cdf_grid(tf, denominator, farey::Exec::parallel);
  t.parallel_ms = ms_since(start);

  t.identical = serial.size() == parallel.size();
  for (std::size_t i = 0; t.identical && i < serial.size(); ++i) {
    t.identical = serial[i].x == parallel[i].x && serial[i].F == parallel[i].F;
  }
  return t;
}

Timing bench_walk(const farey::TransitionFunction& tf, std::size_t samples, unsigned depth,
                  std::uint64_t seed) {
  Timing t;
  auto start = Clock::now();
  farey::WalkSummary serial =
      farey::monte_carlo_walk(tf, samples, depth, seed, farey::Exec::serial);
  t.serial_ms = ms_since(start);

  start = Clock::now();
  farey::WalkSummary parallel =
      farey::monte_carlo_walk(tf, samples, depth, seed, farey::Exec::parallel);
  t.parallel_ms = ms_since(start);

  t.identical = serial.ks_exact == parallel.ks_exact &&
                serial.points.size() == parallel.points.size();
  for (std::size_t i = 0; t.identical && i < serial.points.size(); ++i) {
    t.identical = serial.points[i] == parallel.points[i];
  }
  return t;
}

}  // namespace

int main(int argc, char** argv) {
  long long grid = 512;
  std::size_t samples = 20000;
  unsigned depth = 30;
  for (int i = 1; i + 1 < argc; i += 2) {
    std::string flag = argv[i];
    long long value = std::atoll(argv[i + 1]);
    if (flag == "--grid" && value > 0) grid = value;
    if (flag == "--samples" && value > 0) samples = static_cast<std::size_t>(value);
    if (flag == "--depth" && value > 0) depth = static_cast<unsigned>(value);
  }

#ifdef _OPENMP
  std::cout << "openmp threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "openmp: not enabled (parallel path falls back to serial)\n";
#endif
  std::cout << "grid denominator: " << grid << ", walk samples: " << samples
            << ", walk depth: " << depth << "\n\n";

  bool ok = true;
  for (const auto& [name, tf] :
       {std::pair<std::string, farey::TransitionFunction>{"lebesgue",
                                                          farey::TransitionFunction::lebesgue()},
        std::pair<std::string, farey::TransitionFunction>{
            "j-lebesgue", farey::TransitionFunction::j_lebesgue()}}) {
    Timing t = bench_grid(tf, grid);
    report("cdf_grid/" + name, t);
    ok = ok && t.identical;
  }
  for (const auto& [name, tf] :
       {std::pair<std::string, farey::TransitionFunction>{"lebesgue",
                                                          farey::TransitionFunction::lebesgue()},
        std::pair<std::string, farey::TransitionFunction>{
            "minkowski", farey::TransitionFunction::minkowski()}}) {
    Timing t = bench_walk(tf, samples, depth, 42);
    report("walk/" + name, t);
    ok = ok && t.identical;
  }
  return ok ? 0 : 1;
}
