#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include <gmpxx.h>

namespace qtp {

// Arbitrary precision integer with an inline 64-bit fast path.
// Values that fit in int64 are always stored small.
class Integer {
 public:
  Integer() = default;
  Integer(int v) : small_(v) {}
  Integer(long v) : small_(v) {}
  Integer(long long v) : small_(v) {}
  explicit Integer(const mpz_class& v) { assign(v); }
  explicit Integer(const std::string& s);

  Integer(const Integer& o) : small_(o.small_) {
    if (o.big_) big_ = std::make_unique<mpz_class>(*o.big_);
  }
  Integer(Integer&&) noexcept = default;
  Integer& operator=(const Integer& o) {
    if (this != &o) {
      small_ = o.small_;
      if (o.big_) big_ = std::make_unique<mpz_class>(*o.big_);
      else big_.reset();
    }
    return *this;
  }
  Integer& operator=(Integer&&) noexcept = default;

  bool is_small() const { return !big_; }
  bool is_zero() const { return !big_ && small_ == 0; }
  bool is_one() const { return !big_ && small_ == 1; }
  int sign() const;
  std::int64_t small_value() const { return small_; }
  mpz_class to_mpz() const;

  Integer operator-() const;
  Integer& operator+=(const Integer& o);
  Integer& operator-=(const Integer& o);
  Integer& operator*=(const Integer& o);
  // this += a*b
  void addmul(const Integer& a, const Integer& b);
  void submul(const Integer& a, const Integer& b);

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }

  friend bool operator==(const Integer& a, const Integer& b);
  friend bool operator!=(const Integer& a, const Integer& b) { return !(a == b); }
  friend int cmp(const Integer& a, const Integer& b);
  friend bool operator<(const Integer& a, const Integer& b) { return cmp(a, b) < 0; }

  // Requires b | a.
  friend Integer divexact(const Integer& a, const Integer& b);
  // Truncated quotient and remainder.
  friend void divmod(const Integer& a, const Integer& b, Integer& q, Integer& r);
  friend bool divides(const Integer& b, const Integer& a);
  friend Integer gcd(const Integer& a, const Integer& b);
  friend Integer abs(const Integer& a);
  friend Integer pow(const Integer& a, unsigned e);

  std::string to_string() const;

 private:
  void assign(const mpz_class& v);
  void assign(mpz_class&& v);

  std::int64_t small_ = 0;
  std::unique_ptr<mpz_class> big_;
};

}  // namespace qtp
