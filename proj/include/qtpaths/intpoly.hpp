#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qtpaths/integer.hpp"

namespace qtp {

// Sparse polynomial in Z[q, t]. Terms are kept sorted by (deg_q, deg_t)
// ascending with no zero coefficients, so structural equality is equality.
class IntPoly2 {
 public:
  struct Term {
    std::uint32_t a;  // exponent of q
    std::uint32_t b;  // exponent of t
    Integer c;
  };

  IntPoly2() = default;
  IntPoly2(int c) : IntPoly2(Integer(c)) {}
  IntPoly2(long long c) : IntPoly2(Integer(c)) {}
  explicit IntPoly2(const Integer& c) {
    if (!c.is_zero()) terms_.push_back({0, 0, c});
  }
  static IntPoly2 monomial(const Integer& c, std::uint32_t a, std::uint32_t b);
  static IntPoly2 q() { return monomial(Integer(1), 1, 0); }
  static IntPoly2 t() { return monomial(Integer(1), 0, 1); }
  // Takes arbitrary (unsorted, possibly repeated) terms.
  static IntPoly2 from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].a == 0 && terms_[0].b == 0); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].a == 0 && terms_[0].b == 0 && terms_[0].c.is_one(); }
  bool is_monomial() const { return terms_.size() == 1; }
  Integer constant_value() const { return terms_.empty() ? Integer(0) : terms_[0].c; }
  std::uint32_t deg_q() const;
  std::uint32_t deg_t() const;
  std::uint32_t min_q() const;
  std::uint32_t min_t() const;
  Integer content() const;  // positive gcd of coefficients, 0 for the zero polynomial

  IntPoly2 operator-() const;
  IntPoly2& operator+=(const IntPoly2& o);
  IntPoly2& operator-=(const IntPoly2& o);
  friend IntPoly2 operator+(const IntPoly2& a, const IntPoly2& b);
  friend IntPoly2 operator-(const IntPoly2& a, const IntPoly2& b);
  friend IntPoly2 operator*(const IntPoly2& a, const IntPoly2& b);
  IntPoly2& operator*=(const IntPoly2& o) { return *this = *this * o; }
  IntPoly2 scaled(const Integer& c) const;
  IntPoly2 divexact_integer(const Integer& c) const;
  IntPoly2 shifted(std::uint32_t da, std::uint32_t db) const;      // times q^da t^db
  IntPoly2 unshifted(std::uint32_t da, std::uint32_t db) const;    // divided by q^da t^db
  IntPoly2 swapped() const;                                        // q <-> t
  IntPoly2 pow(unsigned e) const;

  friend bool operator==(const IntPoly2& a, const IntPoly2& b);
  friend bool operator!=(const IntPoly2& a, const IntPoly2& b) { return !(a == b); }

  mpq_class eval(const mpq_class& q, const mpq_class& t) const;
  std::string to_string() const;
  std::size_t hash() const;

 private:
  std::vector<Term> terms_;
};

// Positive-leading gcd in Z[q, t] (lex-least term positive, content included).
IntPoly2 gcd(const IntPoly2& a, const IntPoly2& b);
// Returns true and sets quo when b divides a exactly.
bool exact_divide(const IntPoly2& a, const IntPoly2& b, IntPoly2& quo);
// Throws if b does not divide a.
IntPoly2 divexact(const IntPoly2& a, const IntPoly2& b);

}  // namespace qtp
