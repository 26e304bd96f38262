#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qtpaths/json_io.hpp"

namespace qtp {

struct CheckResult {
  std::string id;
  Json params;
  bool pass = false;
  double seconds = 0;
  // Both sides, filled only on failure.
  Json lhs, rhs;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  double seconds = 0;
  bool pass() const;
  int failures() const;
};

struct VerifyOptions {
  int window = 4;
  int zmax = 3;
  std::uint64_t seed = 20240611;
};

// Suites in acceptance order: d-exchange, engines, explicit, macdonald,
// commutation, a-operator, pde, uniqueness, basis, ext-delta, soundness.
const std::vector<std::string>& suite_names();
// Throws std::invalid_argument for an unknown name.
SuiteReport run_suite(const std::string& name, const VerifyOptions& opts);

// Single parametrised checks exposed on the command line.
CheckResult check_pde(const WeightSpec& g1, const WeightSpec& g2, int ell, int zmax);
CheckResult check_ext_delta(int n, int k, int l);

// With timing off the elapsed times are left out so reports are byte-stable.
Json to_json(const CheckResult& c, bool timing);
Json to_json(const SuiteReport& r, bool timing);

}  // namespace qtp
