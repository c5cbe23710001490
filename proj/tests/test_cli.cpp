#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "f1rep/enumerate.hpp"
#include "f1rep/json_io.hpp"
#include "f1rep/verify.hpp"

#ifndef F1REP_CLI_PATH
#define F1REP_CLI_PATH "f1rep"
#endif
#ifndef F1REP_GOLDEN_DIR
#define F1REP_GOLDEN_DIR "golden"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  std::string out_path = std::string(F1REP_CLI_PATH) + ".out.tmp";
  std::string cmd = std::string(F1REP_CLI_PATH) + " " + args + " > " + out_path +
                    " 2>/dev/null";
  int status = std::system(cmd.c_str());
  int code = status < 0 ? -1 : WEXITSTATUS(status);
  std::ifstream is(out_path);
  std::ostringstream os;
  os << is.rdbuf();
  std::remove(out_path.c_str());
  return {code, os.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream is(path);
  REQUIRE(is.good());
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("ni-table emits the expected CSV") {
  auto res = run_cli("ni-table --quiver L1 --max 6");
  CHECK(res.exit_code == 0);
  std::ostringstream expected;
  expected << "quiver,n,NI,I\n";
  f1rep::Quiver l1 = f1rep::loop_quiver(1);
  for (int n = 1; n <= 6; ++n) {
    expected << "L1," << n << "," << f1rep::ni(l1, n) << ","
             << f1rep::i_growth(l1, n) << "\n";
  }
  CHECK(res.output == expected.str());
  // the NI column itself
  CHECK(res.output.find("L1,1,1,") != std::string::npos);
  CHECK(res.output.find("L1,6,1,") != std::string::npos);

  auto again = run_cli("ni-table --quiver L1 --max 6");
  CHECK(again.output == res.output);
}

TEST_CASE("verify suite runs and reports") {
  auto res = run_cli("verify --suite hall --quiver L1 --dim-cap 4");
  CHECK(res.exit_code == 0);
  auto j = nlohmann::json::parse(res.output);
  CHECK(j.at("suite") == "hall");
  CHECK(j.at("pass") == true);

  auto unknown = run_cli("verify --suite no-such-suite");
  CHECK(unknown.exit_code == 2);
}

TEST_CASE("dot output matches the golden rendering of the worked example") {
  f1rep::Representation v(f1rep::loop_quiver(2), {3},
                          {f1rep::F1Map(3, 3, {0, 1, 2}),
                           f1rep::F1Map(3, 3, {0, 0, 1})});
  nlohmann::json j = v;
  std::string rep_path = std::string(F1REP_CLI_PATH) + ".rep.tmp";
  {
    std::ofstream os(rep_path);
    os << j.dump();
  }
  auto res = run_cli("dot --rep @" + rep_path);
  std::remove(rep_path.c_str());
  CHECK(res.exit_code == 0);
  CHECK(res.output == f1rep::verify::golden_gamma_v_dot());
  CHECK(res.output == slurp(std::string(F1REP_GOLDEN_DIR) + "/gamma_v.dot"));
}

TEST_CASE("golden files match the embedded expectations") {
  CHECK(slurp(std::string(F1REP_GOLDEN_DIR) + "/gamma_v.dot") ==
        f1rep::verify::golden_gamma_v_dot());
  CHECK(slurp(std::string(F1REP_GOLDEN_DIR) + "/kronecker_embed.dot") ==
        f1rep::verify::golden_kronecker_embed_dot());
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("no-such-verb").exit_code == 2);
  CHECK(run_cli("classify --quiver NOPE").exit_code == 2);
}

TEST_CASE("classify subcommand") {
  auto res = run_cli("classify --quiver C3:++-");
  CHECK(res.exit_code == 0);
  auto j = nlohmann::json::parse(res.output);
  CHECK(j.at("tag") == "Cycle");
  CHECK(j.at("cycle_rank") == 1);

  CHECK(nlohmann::json::parse(run_cli("classify --quiver PT1").output).at("tag") ==
        "ProperPseudotree");
  CHECK(nlohmann::json::parse(run_cli("classify --quiver K2").output).at("tag") ==
        "Cycle");
}

TEST_CASE("hall-mul on the Jordan quiver") {
  // delta_S * delta_S = 2 [S + S] + [chain of length 2]
  std::string s_json = nlohmann::json(f1rep::jordan_chain(1)).dump();
  auto res = run_cli("hall-mul --quiver L1 --dim-cap 2 '" + s_json + "' '" +
                     s_json + "'");
  CHECK(res.exit_code == 0);
  auto j = nlohmann::json::parse(res.output);
  REQUIRE(j.size() == 2);
  std::multiset<std::string> values;
  for (const auto& [k, v] : j.items()) values.insert(v.get<std::string>());
  CHECK(values == std::multiset<std::string>{"1/1", "2/1"});
}

TEST_CASE("skew enumeration via the CLI") {
  auto res = run_cli("skew --n 2 --cells 2");
  CHECK(res.exit_code == 0);
  auto j = nlohmann::json::parse(res.output);
  CHECK(j.size() == 2);
}
