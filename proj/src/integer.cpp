#include "qtpaths/integer.hpp"

#include <stdexcept>

namespace qtp {

namespace {

inline mpz_class from_i64(std::int64_t v) {
  mpz_class r;
  mpz_set_si(r.get_mpz_t(), static_cast<long>(v));
  return r;
}

}  // namespace

Integer::Integer(const std::string& s) {
  mpz_class v;
  if (v.set_str(s, 10) != 0) throw std::invalid_argument("not an integer: " + s);
  assign(std::move(v));
}

void Integer::assign(const mpz_class& v) {
  if (mpz_fits_slong_p(v.get_mpz_t())) {
    small_ = mpz_get_si(v.get_mpz_t());
    big_.reset();
  } else {
    small_ = 0;
    big_ = std::make_unique<mpz_class>(v);
  }
}

void Integer::assign(mpz_class&& v) {
  if (mpz_fits_slong_p(v.get_mpz_t())) {
    small_ = mpz_get_si(v.get_mpz_t());
    big_.reset();
  } else {
    small_ = 0;
    big_ = std::make_unique<mpz_class>(std::move(v));
  }
}

int Integer::sign() const {
  if (big_) return sgn(*big_);
  return (small_ > 0) - (small_ < 0);
}

mpz_class Integer::to_mpz() const { return big_ ? *big_ : from_i64(small_); }

Integer Integer::operator-() const {
  if (!big_ && small_ != INT64_MIN) return Integer(static_cast<long long>(-small_));
  mpz_class v = -to_mpz();
  return Integer(v);
}

Integer& Integer::operator+=(const Integer& o) {
  if (!big_ && !o.big_) {
    std::int64_t r;
    if (!__builtin_add_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  assign(to_mpz() + o.to_mpz());
  return *this;
}

Integer& Integer::operator-=(const Integer& o) {
  if (!big_ && !o.big_) {
    std::int64_t r;
    if (!__builtin_sub_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  assign(to_mpz() - o.to_mpz());
  return *this;
}

Integer& Integer::operator*=(const Integer& o) {
  if (!big_ && !o.big_) {
    std::int64_t r;
    if (!__builtin_mul_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  assign(to_mpz() * o.to_mpz());
  return *this;
}

void Integer::addmul(const Integer& a, const Integer& b) {
  if (!big_ && !a.big_ && !b.big_) {
    std::int64_t p, r;
    if (!__builtin_mul_overflow(a.small_, b.small_, &p) && !__builtin_add_overflow(small_, p, &r)) {
      small_ = r;
      return;
    }
  }
  mpz_class v = to_mpz();
  mpz_class av = a.to_mpz(), bv = b.to_mpz();
  mpz_addmul(v.get_mpz_t(), av.get_mpz_t(), bv.get_mpz_t());
  assign(std::move(v));
}

void Integer::submul(const Integer& a, const Integer& b) {
  if (!big_ && !a.big_ && !b.big_) {
    std::int64_t p, r;
    if (!__builtin_mul_overflow(a.small_, b.small_, &p) && !__builtin_sub_overflow(small_, p, &r)) {
      small_ = r;
      return;
    }
  }
  mpz_class v = to_mpz();
  mpz_class av = a.to_mpz(), bv = b.to_mpz();
  mpz_submul(v.get_mpz_t(), av.get_mpz_t(), bv.get_mpz_t());
  assign(std::move(v));
}

bool operator==(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_) return a.small_ == b.small_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // normalized: a big value never equals a small one
}

int cmp(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_) return (a.small_ > b.small_) - (a.small_ < b.small_);
  return ::cmp(a.to_mpz(), b.to_mpz());
}

Integer divexact(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (!a.big_ && !b.big_ && !(a.small_ == INT64_MIN && b.small_ == -1))
    return Integer(static_cast<long long>(a.small_ / b.small_));
  mpz_class r;
  mpz_class av = a.to_mpz(), bv = b.to_mpz();
  mpz_divexact(r.get_mpz_t(), av.get_mpz_t(), bv.get_mpz_t());
  return Integer(r);
}

void divmod(const Integer& a, const Integer& b, Integer& q, Integer& r) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (!a.big_ && !b.big_ && !(a.small_ == INT64_MIN && b.small_ == -1)) {
    q = Integer(static_cast<long long>(a.small_ / b.small_));
    r = Integer(static_cast<long long>(a.small_ % b.small_));
    return;
  }
  mpz_class qq, rr;
  mpz_class av = a.to_mpz(), bv = b.to_mpz();
  mpz_tdiv_qr(qq.get_mpz_t(), rr.get_mpz_t(), av.get_mpz_t(), bv.get_mpz_t());
  q = Integer(qq);
  r = Integer(rr);
}

bool divides(const Integer& b, const Integer& a) {
  if (b.is_zero()) return a.is_zero();
  if (!a.big_ && !b.big_) {
    if (b.small_ == -1) return true;
    return a.small_ % b.small_ == 0;
  }
  mpz_class av = a.to_mpz(), bv = b.to_mpz();
  return mpz_divisible_p(av.get_mpz_t(), bv.get_mpz_t()) != 0;
}

Integer gcd(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_ && a.small_ != INT64_MIN && b.small_ != INT64_MIN) {
    std::uint64_t x = a.small_ < 0 ? -a.small_ : a.small_;
    std::uint64_t y = b.small_ < 0 ? -b.small_ : b.small_;
    while (y) {
      std::uint64_t t = x % y;
      x = y;
      y = t;
    }
    return Integer(static_cast<long long>(x));
  }
  mpz_class r;
  mpz_class av = a.to_mpz(), bv = b.to_mpz();
  mpz_gcd(r.get_mpz_t(), av.get_mpz_t(), bv.get_mpz_t());
  return Integer(r);
}

Integer abs(const Integer& a) { return a.sign() < 0 ? -a : a; }

Integer pow(const Integer& a, unsigned e) {
  Integer r(1), b(a);
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

std::string Integer::to_string() const {
  if (big_) return big_->get_str(10);
  return std::to_string(small_);
}

}  // namespace qtp
