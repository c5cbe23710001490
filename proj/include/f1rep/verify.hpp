#pragma once

#include <string>
#include <vector>

#include "f1rep/quiver.hpp"

namespace f1rep::verify {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::string suite;
  std::vector<Check> checks;
  std::vector<std::string> notes;

  bool pass() const;
  void add(const std::string& name, bool ok, const std::string& detail = "");
};

struct SuiteParams {
  std::string quiver;  // named quiver, where a suite is parameterized
  int max = -1;        // dimension bound override
  int dim_cap = -1;    // Hall table cap override
};

std::vector<std::string> suite_names();
Report run_suite(const std::string& name, const SuiteParams& params);

// Built-in quiver names: L0..L9, A2..A9 (equioriented), C2..C9 with an
// optional orientation suffix like C3:++-, K2, PT1.
Quiver named_quiver(const std::string& name);

// Expected DOT renderings of the worked examples (also stored under
// tests/golden/).
const std::string& golden_gamma_v_dot();
const std::string& golden_kronecker_embed_dot();

}  // namespace f1rep::verify
