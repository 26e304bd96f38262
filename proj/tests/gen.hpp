#pragma once

#include <random>

#include "qtpaths/qtscalar.hpp"

namespace qtp::testgen {

inline std::mt19937_64& rng() {
  static std::mt19937_64 r(20240611);
  return r;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline IntPoly2 small_poly(int max_terms = 4, int max_deg = 3, int max_coeff = 5) {
  std::vector<IntPoly2::Term> ts;
  int n = uniform(1, max_terms);
  for (int i = 0; i < n; ++i)
    ts.push_back({std::uint32_t(uniform(0, max_deg)), std::uint32_t(uniform(0, max_deg)),
                  Integer(uniform(-max_coeff, max_coeff))});
  return IntPoly2::from_terms(std::move(ts));
}

inline IntPoly2 nonzero_poly(int max_terms = 4, int max_deg = 3) {
  for (;;) {
    IntPoly2 p = small_poly(max_terms, max_deg);
    if (!p.is_zero()) return p;
  }
}

inline QtScalar small_scalar() { return QtScalar::fraction(small_poly(), nonzero_poly()); }

}  // namespace qtp::testgen
