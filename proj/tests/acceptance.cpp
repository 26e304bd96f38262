// Runs every acceptance criterion with exact comparisons and prints one line each.
#include <cstdio>
#include <cstring>
#include <iostream>

#include "qtpaths/verify.hpp"

int main(int argc, char** argv) {
  static const char* titles[] = {
      "D(z) exchange relation",
      "path, increment and vertex-operator engines agree",
      "explicit formula and coefficient extractions",
      "Macdonald eigen, orthogonality, normalization, Pieri, Cauchy",
      "commutation relations",
      "A_F^(l) commutator form equals path sum",
      "Pi_G conjugation and tau equations",
      "tau from dual bases",
      "a_{F,lambda} basis and q=t=1 triangularity",
      "extended delta identity",
      "mutated inputs are rejected",
  };
  qtp::VerifyOptions opts;
  bool verbose = argc > 1 && std::strcmp(argv[1], "-v") == 0;
  const auto& names = qtp::suite_names();
  int failed = 0;
  for (std::size_t i = 0; i < names.size(); ++i) {
    qtp::SuiteReport r = qtp::run_suite(names[i], opts);
    std::printf("criterion %2zu %-11s %s  %zu checks, %d failed, %.1fs  (%s)\n", i + 1, names[i].c_str(),
                r.pass() ? "PASS" : "FAIL", r.checks.size(), r.failures(), r.seconds, titles[i]);
    if (!r.pass()) {
      ++failed;
      for (const auto& c : r.checks)
        if (!c.pass) std::cout << "    " << qtp::to_json(c, false).dump() << "\n";
    } else if (verbose) {
      for (const auto& c : r.checks) std::cout << "    " << qtp::to_json(c, true).dump() << "\n";
    }
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
