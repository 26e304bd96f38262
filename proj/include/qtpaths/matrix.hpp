#pragma once

#include <optional>
#include <vector>

#include "qtpaths/qtscalar.hpp"

namespace qtp {

using QtVector = std::vector<QtScalar>;

// Dense row-major matrix over Q(q,t).
class QtMatrix {
 public:
  QtMatrix() = default;
  QtMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {}
  static QtMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  QtScalar& operator()(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
  const QtScalar& operator()(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }
  bool is_zero() const;

  QtVector apply(const QtVector& v) const;
  QtMatrix transpose() const;
  QtMatrix scaled(const QtScalar& c) const;
  QtMatrix operator-() const { return scaled(QtScalar(-1)); }
  QtMatrix& operator+=(const QtMatrix& o);
  QtMatrix& operator-=(const QtMatrix& o);
  friend QtMatrix operator+(QtMatrix a, const QtMatrix& b) { return a += b; }
  friend QtMatrix operator-(QtMatrix a, const QtMatrix& b) { return a -= b; }
  friend QtMatrix operator*(const QtMatrix& a, const QtMatrix& b);
  friend bool operator==(const QtMatrix& a, const QtMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const QtMatrix& a, const QtMatrix& b) { return !(a == b); }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<QtScalar> a_;
};

// Gaussian elimination over the field; nullopt when singular.
std::optional<QtMatrix> inverse(const QtMatrix& m);
QtScalar determinant(const QtMatrix& m);
// Basis of the right null space.
std::vector<QtVector> kernel(const QtMatrix& m);

}  // namespace qtp
