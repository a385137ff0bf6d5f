// End-to-end tests for the command-line binary. Each case spawns the real
// executable and checks stdout plus the exit code.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(FAREY_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    result.out.append(buf.data(), n);
  }
  int status = pclose(pipe);
  result.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST_CASE("eval prints exact rationals") {
  CHECK(run_cli("eval jimm 1/3").out == "2/3\n");
  CHECK(run_cli("eval jimm 2/3").out == "1/3\n");
  CHECK(run_cli("eval jimm 1/2").out == "1/2\n");
  CHECK(run_cli("eval flip 2/5").out == "3/4\n");
  CHECK(run_cli("eval pi-lambda 1/4").out == "2/3\n");
  CHECK(run_cli("eval k 1/3").out == "2/3\n");
  CHECK(run_cli("eval farey 2/5").out == "2/3\n");
  CHECK(run_cli("eval parent 1/3").out == "1/2\n");
  CHECK(run_cli("eval theta-inv 2/5").out == "(2,1)\n");
  CHECK(run_cli("eval jimm 1/3").exit_code == 0);
}

TEST_CASE("eval explain shows the rewrite trace") {
  RunResult r = run_cli("eval jimm 5/8 --explain");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("tuple:  (1,1,1,1)") != std::string::npos);
  CHECK(r.out.find("jimm tuple: (4)") != std::string::npos);
  CHECK(r.out.substr(r.out.size() - 4) == "1/5\n");
}

TEST_CASE("star multiplies tuples or rationals") {
  CHECK(run_cli("star \"(1,1)\" \"(2)\"").out == "(1,1,1)\n");
  CHECK(run_cli("star 2/3 1/3").out == "3/5\n");
  CHECK(run_cli("star \"(1,1)\" 1/3").exit_code == 2);
}

TEST_CASE("tree renders and enforces the depth limit") {
  CHECK(run_cli("tree monoid --depth 2").out ==
        "(1)  [(1)]\n"
        "  (2)  [(2)]\n"
        "  (1,1)  [(1,1)]\n");
  RunResult top = run_cli("tree farey --depth 1");
  CHECK(top.out == "1/2  [(1)]\n");
  CHECK(run_cli("tree farey --depth 13").exit_code == 2);
  CHECK(run_cli("tree nosuch --depth 2").exit_code == 2);
  RunResult dot = run_cli("tree farey --depth 2 --format dot");
  CHECK(dot.exit_code == 0);
  CHECK(dot.out.find("digraph tree {") == 0);
}

TEST_CASE("cdf at a point prints the exact value") {
  CHECK(run_cli("cdf lebesgue --at 2/3").out == "2/3\n");
  CHECK(run_cli("cdf minkowski --at 1/3").out == "1/4\n");
  CHECK(run_cli("cdf lebesgue --at 3/2").exit_code == 2);
  CHECK(run_cli("cdf nosuch --at 1/2").exit_code == 2);
}

TEST_CASE("cdf grid emits csv") {
  RunResult r = run_cli("cdf minkowski --grid 2 --precision 4");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "x_num,x_den,F_num,F_den,x_decimal,F_decimal\n"
        "0,1,0,1,0.0000,0.0000\n"
        "1,2,1,2,0.5000,0.5000\n"
        "1,1,1,1,1.0000,1.0000\n");
  CHECK(run_cli("cdf minkowski --grid 2 --at 1/2").exit_code == 2);
}

TEST_CASE("enumerate prints the twisted sequence") {
  CHECK(run_cli("enumerate --count 1").out == "1/1\n");
  CHECK(run_cli("enumerate --count 10").out ==
        "1/1\n1/2\n2/1\n2/3\n3/1\n1/3\n3/2\n3/5\n5/2\n1/4\n");
}

TEST_CASE("walk reports a deterministic summary") {
  RunResult a = run_cli("walk minkowski --samples 200 --depth 8 --seed 5");
  RunResult b = run_cli("walk minkowski --samples 200 --depth 8 --seed 5");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("measure: minkowski\n") != std::string::npos);
  CHECK(a.out.find("samples: 200\n") != std::string::npos);
  CHECK(a.out.find("depth: 8\n") != std::string::npos);
  CHECK(a.out.find("seed: 5\n") != std::string::npos);
  CHECK(a.out.find("ks-exact: ") != std::string::npos);
  CHECK(a.out.find("ks: 0.") != std::string::npos);
}

TEST_CASE("verify runs the property suites") {
  RunResult r = run_cli("verify --depth 1");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("central-symmetry") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("nosuchcommand").exit_code == 2);
  CHECK(run_cli("eval nosuchfn 1/2").exit_code == 2);
  CHECK(run_cli("eval jimm notanumber").exit_code == 2);
  CHECK(run_cli("eval k 5/3").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}
