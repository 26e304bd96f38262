#include "qtpaths/qtscalar.hpp"

#include <stdexcept>

namespace qtp {

QtScalar::QtScalar(const mpq_class& r) {
  *this = rational(Integer(r.get_num()), Integer(r.get_den()));
}

QtScalar QtScalar::rational(const Integer& n, const Integer& d) {
  if (d.is_zero()) throw std::domain_error("division by zero");
  return reduced(IntPoly2(n), IntPoly2(d));
}

QtScalar QtScalar::fraction(const IntPoly2& num, const IntPoly2& den) {
  if (den.is_zero()) throw std::domain_error("division by zero");
  return reduced(num, den);
}

const QtScalar& QtScalar::M() {
  static const QtScalar m = (QtScalar(1) - q()) * (QtScalar(1) - t());
  return m;
}

const QtScalar& QtScalar::Mbar() {
  static const QtScalar m = q() + t() - QtScalar(1);
  return m;
}

QtScalar QtScalar::reduced(IntPoly2 num, IntPoly2 den) {
  QtScalar r;
  if (num.is_zero()) return r;
  if (!den.is_constant()) {
    IntPoly2 g = gcd(num, den);
    if (!g.is_one()) {
      num = divexact(num, g);
      den = divexact(den, g);
    }
  } else {
    Integer d = den.constant_value();
    Integer g = gcd(num.content(), d);
    if (!g.is_one()) {
      num = num.divexact_integer(g);
      den = den.divexact_integer(g);
    }
  }
  if (den.terms()[0].c.sign() < 0) {
    num = -num;
    den = -den;
  }
  r.num_ = std::move(num);
  if (!den.is_one()) r.den_ = std::move(den);
  return r;
}

bool QtScalar::is_constant() const { return num_.is_constant() && (den_.is_zero() || den_.is_constant()); }

QtScalar QtScalar::operator-() const {
  QtScalar r(*this);
  r.num_ = -r.num_;
  return r;
}

QtScalar& QtScalar::operator+=(const QtScalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.is_zero() && o.den_.is_zero()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) return *this = reduced(num_ + o.num_, den_);
  IntPoly2 b = den(), d = o.den();
  IntPoly2 g = gcd(b, d);
  if (g.is_one()) {
    // Coprime denominators: a*d + c*b is coprime to b*d.
    num_ = num_ * d + o.num_ * b;
    if (num_.is_zero()) den_ = IntPoly2();
    else den_ = b * d;
    return *this;
  }
  IntPoly2 b1 = divexact(b, g), d1 = divexact(d, g);
  IntPoly2 n = num_ * d1 + o.num_ * b1;
  return *this = reduced(std::move(n), b1 * d);
}

QtScalar& QtScalar::operator-=(const QtScalar& o) { return *this += -o; }

QtScalar operator*(const QtScalar& x, const QtScalar& y) {
  if (x.is_zero() || y.is_zero()) return QtScalar();
  if (x.den_.is_zero() && y.den_.is_zero()) {
    QtScalar r;
    r.num_ = x.num_ * y.num_;
    return r;
  }
  // Cross-cancel before multiplying: gcd(a, d) and gcd(c, b).
  IntPoly2 a = x.num_, b = x.den(), c = y.num_, d = y.den();
  if (!d.is_one()) {
    IntPoly2 g = gcd(a, d);
    if (!g.is_one()) {
      a = divexact(a, g);
      d = divexact(d, g);
    }
  }
  if (!b.is_one()) {
    IntPoly2 g = gcd(c, b);
    if (!g.is_one()) {
      c = divexact(c, g);
      b = divexact(b, g);
    }
  }
  IntPoly2 den = b * d;
  QtScalar r;
  r.num_ = a * c;
  if (den.terms()[0].c.sign() < 0) {
    r.num_ = -r.num_;
    den = -den;
  }
  if (!den.is_one()) r.den_ = std::move(den);
  return r;
}

QtScalar& QtScalar::operator*=(const QtScalar& o) { return *this = *this * o; }
QtScalar& QtScalar::operator/=(const QtScalar& o) { return *this = *this * o.inv(); }

QtScalar QtScalar::inv() const {
  if (is_zero()) throw std::domain_error("division by zero");
  QtScalar r;
  IntPoly2 n = den(), d = num_;
  if (d.terms()[0].c.sign() < 0) {
    n = -n;
    d = -d;
  }
  r.num_ = std::move(n);
  if (!d.is_one()) r.den_ = std::move(d);
  return r;
}

QtScalar QtScalar::pow(int e) const {
  if (e < 0) return inv().pow(-e);
  QtScalar r(1), b(*this);
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

mpq_class QtScalar::eval(const mpq_class& q, const mpq_class& t) const {
  mpq_class d = den_.is_zero() ? mpq_class(1) : den_.eval(q, t);
  if (d == 0) throw std::domain_error("denominator vanishes at evaluation point");
  return num_.eval(q, t) / d;
}

std::string QtScalar::to_string() const {
  if (den_.is_zero()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

QtScalar q_integer(int m, const QtScalar& x) {
  if (m == 0) return QtScalar();
  QtScalar s, p(1);
  int n = m > 0 ? m : -m;
  for (int i = 0; i < n; ++i) {
    s += p;
    p *= x;
  }
  return m > 0 ? s : -s;
}

QtScalar qt_int(int m, QBase base) {
  switch (base) {
    case QBase::q: return q_integer(m, QtScalar::q());
    case QBase::t: return q_integer(m, QtScalar::t());
    case QBase::qt: return q_integer(m, QtScalar::qt());
    case QBase::q_over_t: return q_integer(m, QtScalar::q() / QtScalar::t());
    case QBase::t_over_q: return q_integer(m, QtScalar::t() / QtScalar::q());
  }
  return QtScalar();
}

QtScalar qt_substitute(const std::vector<QtScalar>& coeffs, const QtScalar& x) {
  QtScalar r;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * x + *it;
  return r;
}

}  // namespace qtp
