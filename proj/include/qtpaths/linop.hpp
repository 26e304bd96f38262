#pragma once

#include <functional>
#include <map>

#include "qtpaths/matrix.hpp"
#include "qtpaths/symfunc.hpp"

namespace qtp {

// Homogeneous operator of degree `shift`, known on source degrees
// max(0, -shift)..window. Block d maps the p-basis of degree d to the
// p-basis of degree d + shift; a missing block is zero.
class GradedOperator {
 public:
  GradedOperator(int shift, int window);
  static GradedOperator identity(int window);

  int shift() const { return shift_; }
  int window() const { return window_; }
  int min_source() const { return shift_ < 0 ? -shift_ : 0; }
  const std::map<int, QtMatrix>& blocks() const { return blocks_; }
  // nullptr when the block is zero.
  const QtMatrix* block(int d) const;
  void set_block(int d, QtMatrix m);

  QtVector apply(int d, const QtVector& v) const;
  // Throws std::out_of_range if f has a component above the window.
  SymFunc apply(const SymFunc& f) const;

  GradedOperator restricted(int window) const;
  GradedOperator scaled(const QtScalar& c) const;
  GradedOperator operator-() const { return scaled(QtScalar(-1)); }
  friend GradedOperator operator+(const GradedOperator& a, const GradedOperator& b);
  friend GradedOperator operator-(const GradedOperator& a, const GradedOperator& b);

 private:
  void check_source(int d) const;
  int shift_;
  int window_;
  std::map<int, QtMatrix> blocks_;
};

// Materialize a linear action column by column on the p-basis.
GradedOperator op_from_action(const std::function<SymFunc(const SymFunc&)>& action, int shift, int window);
// a after b. The window is the largest N with b's window >= N and a's window >= N + shift(b).
GradedOperator op_compose(const GradedOperator& a, const GradedOperator& b);
GradedOperator op_commutator(const GradedOperator& a, const GradedOperator& b);
// Adjoint for the star scalar product.
GradedOperator op_star_adjoint(const GradedOperator& a);
// Exact blockwise equality on source degrees <= window. Throws on a shift
// mismatch or if the window exceeds what either operator knows.
bool op_equal(const GradedOperator& a, const GradedOperator& b, int window);

}  // namespace qtp
