#pragma once

#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qtpaths/qtscalar.hpp"

namespace qtp {

// Polynomial weight F(h) = sum_i a_i h^i with rational a_i and a_0 = 1.
class WeightSpec {
 public:
  WeightSpec() : a_{1} {}
  explicit WeightSpec(std::vector<mpq_class> a);
  // Parses "1,2,1/3".
  static WeightSpec parse(const std::string& s);

  const std::vector<mpq_class>& coeffs() const { return a_; }
  int degree() const { return static_cast<int>(a_.size()) - 1; }
  mpq_class coeff(int i) const { return i >= 0 && i < static_cast<int>(a_.size()) ? a_[i] : mpq_class(0); }
  QtScalar eval(const QtScalar& x) const;
  std::string to_string() const;

 private:
  std::vector<mpq_class> a_;
};

// a_0 = 1 and a_1..a_degree small non-zero fractions with F(1) != 0.
WeightSpec random_weight_spec(std::mt19937_64& rng, int degree);

}  // namespace qtp
