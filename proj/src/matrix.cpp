#include "qtpaths/matrix.hpp"

#include <stdexcept>

namespace qtp {

QtMatrix QtMatrix::identity(int n) {
  QtMatrix r(n, n);
  for (int i = 0; i < n; ++i) r(i, i) = QtScalar(1);
  return r;
}

bool QtMatrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

QtVector QtMatrix::apply(const QtVector& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("matrix-vector size mismatch");
  QtVector out(rows_);
  for (int j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (int i = 0; i < rows_; ++i) {
      const QtScalar& x = (*this)(i, j);
      if (!x.is_zero()) out[i] += x * v[j];
    }
  }
  return out;
}

QtMatrix QtMatrix::transpose() const {
  QtMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

QtMatrix QtMatrix::scaled(const QtScalar& c) const {
  QtMatrix r(*this);
  for (auto& x : r.a_)
    if (!x.is_zero()) x *= c;
  return r;
}

QtMatrix& QtMatrix::operator+=(const QtMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix size mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (!o.a_[i].is_zero()) a_[i] += o.a_[i];
  return *this;
}

QtMatrix& QtMatrix::operator-=(const QtMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix size mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (!o.a_[i].is_zero()) a_[i] -= o.a_[i];
  return *this;
}

QtMatrix operator*(const QtMatrix& a, const QtMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product size mismatch");
  QtMatrix r(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const QtScalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        const QtScalar& y = b(k, j);
        if (!y.is_zero()) r(i, j) += x * y;
      }
    }
  return r;
}

namespace {

// Row reduction to reduced echelon form; returns pivot columns.
std::vector<int> rref(QtMatrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int piv = -1;
    for (int i = row; i < m.rows(); ++i)
      if (!m(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
    QtScalar inv = m(row, col).inv();
    for (int j = col; j < m.cols(); ++j)
      if (!m(row, j).is_zero()) m(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      QtScalar f = m(i, col);
      for (int j = col; j < m.cols(); ++j)
        if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::optional<QtMatrix> inverse(const QtMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  int n = m.rows();
  QtMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = QtScalar(1);
  }
  auto piv = rref(aug);
  if (static_cast<int>(piv.size()) < n || (n > 0 && piv[n - 1] != n - 1)) return std::nullopt;
  QtMatrix r(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r(i, j) = aug(i, n + j);
  return r;
}

// Rows are cleared of denominators, then fraction-free (Bareiss) elimination
// runs in Z[q, t] with exact divisions, which avoids a gcd per entry update.
QtScalar determinant(const QtMatrix& m0) {
  if (m0.rows() != m0.cols()) throw std::invalid_argument("determinant of non-square matrix");
  int n = m0.rows();
  std::vector<std::vector<IntPoly2>> a(n, std::vector<IntPoly2>(n));
  IntPoly2 scale(1);
  for (int i = 0; i < n; ++i) {
    IntPoly2 l(1);
    for (int j = 0; j < n; ++j) {
      IntPoly2 d = m0(i, j).den();
      if (d.is_one()) continue;
      l = l * divexact(d, gcd(l, d));
    }
    for (int j = 0; j < n; ++j) a[i][j] = m0(i, j).num() * divexact(l, m0(i, j).den());
    scale *= l;
  }
  int sign = 1;
  IntPoly2 prev(1);
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (!a[i][k].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) return QtScalar();
    if (piv != k) {
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) a[i][j] = divexact(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
      a[i][k] = IntPoly2();
    }
    prev = a[k][k];
  }
  IntPoly2 det = n ? a[n - 1][n - 1] : IntPoly2(1);
  return QtScalar::fraction(sign < 0 ? -det : det, scale);
}

std::vector<QtVector> kernel(const QtMatrix& m0) {
  QtMatrix m(m0);
  auto piv = rref(m);
  std::vector<bool> is_piv(m.cols(), false);
  for (int c : piv) is_piv[c] = true;
  std::vector<QtVector> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_piv[free]) continue;
    QtVector v(m.cols());
    v[free] = QtScalar(1);
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m(static_cast<int>(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace qtp
