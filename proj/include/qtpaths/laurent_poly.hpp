#pragma once

#include <map>
#include <stdexcept>
#include <vector>

namespace qtp {

// Finitely supported Laurent polynomial in z_1..z_n with coefficients in C.
// C needs a zero default value, is_zero(), += and *.
template <class C>
class LaurentPoly {
 public:
  using Exps = std::vector<int>;

  explicit LaurentPoly(int nvars = 0) : nvars_(nvars) {}
  static LaurentPoly monomial(const Exps& e, const C& c) {
    LaurentPoly r(static_cast<int>(e.size()));
    r.add_term(e, c);
    return r;
  }
  static LaurentPoly constant(int nvars, const C& c) { return monomial(Exps(nvars, 0), c); }

  int nvars() const { return nvars_; }
  const std::map<Exps, C>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exps& e, const C& c) {
    if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("exponent vector length mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  C coeff(const Exps& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? C() : it->second;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check(b);
    LaurentPoly r(a.nvars_);
    Exps e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  void check(const LaurentPoly& o) const {
    if (o.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
  }
  int nvars_;
  std::map<Exps, C> terms_;
};

}  // namespace qtp
