#pragma once

#include <string>
#include <vector>

#include "ert/types.hpp"

namespace ert {

struct SelftestRow {
  std::string label;
  double value = 0.0;      // measured error / residual
  double threshold = 0.0;  // pass bound
  bool pass = false;
};

struct SelftestResult {
  std::string suite;
  std::vector<SelftestRow> rows;
  bool pass = true;
  void add(const std::string& label, double value, double threshold);
};

// Suites: "identities", "orthogonality", "kernels", "roundtrip", "range".
SelftestResult run_selftest(const std::string& suite);
std::vector<std::string> selftest_suites();

}  // namespace ert
