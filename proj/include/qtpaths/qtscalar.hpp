#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "qtpaths/intpoly.hpp"

namespace qtp {

// Element of Q(q, t) kept as a reduced fraction num/den. The denominator's
// lex-least term is positive; a denominator equal to 1 is stored empty.
class QtScalar {
 public:
  QtScalar() = default;
  QtScalar(int c) : num_(c) {}
  QtScalar(long long c) : num_(c) {}
  explicit QtScalar(const Integer& c) : num_(c) {}
  explicit QtScalar(const IntPoly2& p) : num_(p) {}
  explicit QtScalar(const mpq_class& r);
  // Reduces; throws std::domain_error when den is zero.
  static QtScalar fraction(const IntPoly2& num, const IntPoly2& den);
  static QtScalar rational(const Integer& n, const Integer& d);

  static QtScalar q() { return QtScalar(IntPoly2::q()); }
  static QtScalar t() { return QtScalar(IntPoly2::t()); }
  static QtScalar qt() { return QtScalar(IntPoly2::monomial(Integer(1), 1, 1)); }
  static const QtScalar& M();     // (1-q)(1-t)
  static const QtScalar& Mbar();  // q+t-1

  const IntPoly2& num() const { return num_; }
  IntPoly2 den() const { return den_.is_zero() ? IntPoly2(1) : den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_zero() && num_.is_one(); }
  bool is_polynomial() const { return den_.is_zero(); }
  bool is_constant() const;  // lies in Q

  QtScalar operator-() const;
  QtScalar& operator+=(const QtScalar& o);
  QtScalar& operator-=(const QtScalar& o);
  QtScalar& operator*=(const QtScalar& o);
  QtScalar& operator/=(const QtScalar& o);
  friend QtScalar operator+(QtScalar a, const QtScalar& b) { return a += b; }
  friend QtScalar operator-(QtScalar a, const QtScalar& b) { return a -= b; }
  friend QtScalar operator*(const QtScalar& a, const QtScalar& b);
  friend QtScalar operator/(const QtScalar& a, const QtScalar& b) { return a * b.inv(); }
  QtScalar inv() const;
  QtScalar pow(int e) const;

  friend bool operator==(const QtScalar& a, const QtScalar& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const QtScalar& a, const QtScalar& b) { return !(a == b); }

  // Throws std::domain_error if the denominator vanishes at the point.
  mpq_class eval(const mpq_class& q, const mpq_class& t) const;
  std::string to_string() const;
  std::size_t hash() const { return num_.hash() * 31u + den_.hash(); }

 private:
  static QtScalar reduced(IntPoly2 num, IntPoly2 den);
  IntPoly2 num_;
  IntPoly2 den_;
};

// q-integer [m]_x: 1 + x + ... + x^(m-1) for m > 0, -(1 + x + ... + x^(-m-1)) for m < 0, 0 for m = 0.
QtScalar q_integer(int m, const QtScalar& x);

enum class QBase { q, t, qt, q_over_t, t_over_q };
QtScalar qt_int(int m, QBase base);

// Horner evaluation of sum_i coeffs[i] * x^i.
QtScalar qt_substitute(const std::vector<QtScalar>& coeffs, const QtScalar& x);

}  // namespace qtp
