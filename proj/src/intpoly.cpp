#include "qtpaths/intpoly.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <utility>

namespace qtp {

namespace {

using Term = IntPoly2::Term;

inline std::uint64_t key(const Term& x) { return (std::uint64_t(x.a) << 32) | x.b; }

// Dense univariate polynomial over Z, index = exponent, no trailing zeros.
using UPoly = std::vector<Integer>;
// Dense polynomial in the main variable with UPoly coefficients.
using BPoly = std::vector<UPoly>;

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}
void trim(BPoly& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

Integer ucontent(const UPoly& p) {
  Integer g(0);
  for (const auto& c : p) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

UPoly uscale(const UPoly& p, const Integer& c) {
  if (c.is_zero()) return {};
  UPoly r(p);
  for (auto& x : r) x *= c;
  return r;
}

UPoly udivint(const UPoly& p, const Integer& c) {
  UPoly r(p);
  for (auto& x : r)
    if (!x.is_zero()) x = divexact(x, c);
  return r;
}

UPoly umul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) r[i + j].addmul(a[i], b[j]);
  }
  trim(r);
  return r;
}

UPoly usub(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

UPoly upp(const UPoly& p) {
  if (p.empty()) return p;
  Integer c = ucontent(p);
  if (p.back().sign() < 0) c = -c;
  if (c.is_one()) return p;
  return udivint(p, c);
}

bool uexact_div(const UPoly& a, const UPoly& b, UPoly& quo) {
  if (b.empty()) throw std::domain_error("division by zero polynomial");
  quo.clear();
  if (a.empty()) return true;
  if (a.size() < b.size()) return false;
  UPoly r(a);
  std::size_t m = b.size() - 1;
  const Integer& lc = b.back();
  quo.assign(a.size() - m, Integer(0));
  for (std::size_t k = a.size() - m; k-- > 0;) {
    Integer& top = r[k + m];
    if (top.is_zero()) continue;
    if (!divides(lc, top)) return false;
    Integer qk = divexact(top, lc);
    for (std::size_t i = 0; i <= m; ++i)
      if (!b[i].is_zero()) r[k + i].submul(qk, b[i]);
    quo[k] = std::move(qk);
  }
  for (const auto& x : r)
    if (!x.is_zero()) return false;
  trim(quo);
  return true;
}

UPoly uprem(const UPoly& a, const UPoly& b) {
  UPoly r(a);
  if (b.size() == 1) return {};
  const Integer& lc = b.back();
  std::size_t m = b.size() - 1;
  long e = static_cast<long>(a.size()) - static_cast<long>(b.size()) + 1;
  while (!r.empty() && r.size() >= b.size()) {
    Integer top = r.back();
    std::size_t shift = r.size() - 1 - m;
    for (auto& x : r) x *= lc;
    for (std::size_t i = 0; i <= m; ++i) r[shift + i].submul(top, b[i]);
    trim(r);
    --e;
  }
  if (e > 0) r = uscale(r, pow(lc, static_cast<unsigned>(e)));
  return r;
}

UPoly positive(UPoly p) {
  if (!p.empty() && p.back().sign() < 0)
    for (auto& x : p) x = -x;
  return p;
}

UPoly ugcd(UPoly a, UPoly b) {
  if (a.empty()) return positive(std::move(b));
  if (b.empty()) return positive(std::move(a));
  Integer c = gcd(ucontent(a), ucontent(b));
  a = upp(a);
  b = upp(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    if (b.size() == 1) {
      a = UPoly{Integer(1)};
      break;
    }
    UPoly r = uprem(a, b);
    a = std::move(b);
    b = upp(r);
  }
  a = upp(a);
  return uscale(a, c);
}

UPoly bcontent(const BPoly& p) {
  UPoly g;
  for (const auto& c : p) {
    if (c.empty()) continue;
    g = ugcd(g, c);
    if (g.size() == 1 && g[0].is_one()) break;
  }
  return g;
}

BPoly bdiv_u(const BPoly& p, const UPoly& c) {
  BPoly r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].empty()) continue;
    if (!uexact_div(p[i], c, r[i])) throw std::logic_error("bivariate content division failed");
  }
  return r;
}

BPoly bpp(const BPoly& p) {
  if (p.empty()) return p;
  UPoly c = bcontent(p);
  if (c.size() == 1 && c[0].is_one()) return p;
  return bdiv_u(p, c);
}

BPoly bprem(const BPoly& a, const BPoly& b) {
  BPoly r(a);
  std::size_t m = b.size() - 1;
  const UPoly& lc = b.back();
  long e = static_cast<long>(a.size()) - static_cast<long>(b.size()) + 1;
  while (!r.empty() && r.size() >= b.size()) {
    UPoly top = r.back();
    std::size_t shift = r.size() - 1 - m;
    for (auto& x : r) x = umul(x, lc);
    for (std::size_t i = 0; i <= m; ++i) r[shift + i] = usub(r[shift + i], umul(top, b[i]));
    trim(r);
    --e;
  }
  if (e > 0) {
    UPoly f{Integer(1)};
    for (long i = 0; i < e; ++i) f = umul(f, lc);
    for (auto& x : r) x = umul(x, f);
  }
  return r;
}

BPoly bgcd(BPoly a, BPoly b) {
  UPoly ca = bcontent(a), cb = bcontent(b);
  UPoly c = ugcd(ca, cb);
  a = bdiv_u(a, ca);
  b = bdiv_u(b, cb);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    if (b.size() == 1) {
      a = BPoly{UPoly{Integer(1)}};
      break;
    }
    BPoly r = bprem(a, b);
    a = std::move(b);
    b = bpp(r);
  }
  a = bpp(a);
  for (auto& x : a) x = umul(x, c);
  return a;
}

bool bexact_div(const BPoly& a, const BPoly& b, BPoly& quo) {
  quo.clear();
  if (a.empty()) return true;
  if (a.size() < b.size()) return false;
  BPoly r(a);
  std::size_t m = b.size() - 1;
  const UPoly& lc = b.back();
  quo.assign(a.size() - m, UPoly{});
  for (std::size_t k = a.size() - m; k-- > 0;) {
    if (r[k + m].empty()) continue;
    UPoly qk;
    if (!uexact_div(r[k + m], lc, qk)) return false;
    for (std::size_t i = 0; i <= m; ++i)
      if (!b[i].empty()) r[k + i] = usub(r[k + i], umul(qk, b[i]));
    quo[k] = std::move(qk);
  }
  for (const auto& x : r)
    if (!x.empty()) return false;
  trim(quo);
  return true;
}

// Main variable is t (term.b), coefficients in q (term.a).
BPoly to_dense(const IntPoly2& p) {
  BPoly r(p.deg_t() + 1);
  for (const auto& x : p.terms()) {
    auto& c = r[x.b];
    if (c.size() <= x.a) c.resize(x.a + 1, Integer(0));
    c[x.a] = x.c;
  }
  for (auto& c : r) trim(c);
  trim(r);
  return r;
}

IntPoly2 from_dense(const BPoly& p) {
  std::vector<Term> ts;
  for (std::size_t b = 0; b < p.size(); ++b)
    for (std::size_t a = 0; a < p[b].size(); ++a)
      if (!p[b][a].is_zero()) ts.push_back({std::uint32_t(a), std::uint32_t(b), p[b][a]});
  return IntPoly2::from_terms(std::move(ts));
}

IntPoly2 normalize_sign(IntPoly2 p) {
  if (!p.is_zero() && p.terms()[0].c.sign() < 0) p = -p;
  return p;
}

}  // namespace

IntPoly2 IntPoly2::monomial(const Integer& c, std::uint32_t a, std::uint32_t b) {
  IntPoly2 r;
  if (!c.is_zero()) r.terms_.push_back({a, b, c});
  return r;
}

IntPoly2 IntPoly2::from_terms(std::vector<Term> ts) {
  std::sort(ts.begin(), ts.end(), [](const Term& x, const Term& y) { return key(x) < key(y); });
  IntPoly2 r;
  for (auto& x : ts) {
    if (!r.terms_.empty() && key(r.terms_.back()) == key(x)) {
      r.terms_.back().c += x.c;
    } else {
      if (!r.terms_.empty() && r.terms_.back().c.is_zero()) r.terms_.pop_back();
      r.terms_.push_back(std::move(x));
    }
  }
  if (!r.terms_.empty() && r.terms_.back().c.is_zero()) r.terms_.pop_back();
  return r;
}

std::uint32_t IntPoly2::deg_q() const { return terms_.empty() ? 0 : terms_.back().a; }

std::uint32_t IntPoly2::deg_t() const {
  std::uint32_t d = 0;
  for (const auto& x : terms_) d = std::max(d, x.b);
  return d;
}

std::uint32_t IntPoly2::min_q() const { return terms_.empty() ? 0 : terms_.front().a; }

std::uint32_t IntPoly2::min_t() const {
  if (terms_.empty()) return 0;
  std::uint32_t d = terms_.front().b;
  for (const auto& x : terms_) d = std::min(d, x.b);
  return d;
}

Integer IntPoly2::content() const {
  Integer g(0);
  for (const auto& x : terms_) {
    g = gcd(g, x.c);
    if (g.is_one()) break;
  }
  return g;
}

IntPoly2 IntPoly2::operator-() const {
  IntPoly2 r(*this);
  for (auto& x : r.terms_) x.c = -x.c;
  return r;
}

namespace {

IntPoly2 merge(const IntPoly2& a, const IntPoly2& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.terms().size() + b.terms().size());
  auto i = a.terms().begin(), ie = a.terms().end();
  auto j = b.terms().begin(), je = b.terms().end();
  while (i != ie || j != je) {
    if (j == je || (i != ie && key(*i) < key(*j))) {
      out.push_back(*i++);
    } else if (i == ie || key(*j) < key(*i)) {
      out.push_back({j->a, j->b, subtract ? -j->c : j->c});
      ++j;
    } else {
      Term x = *i;
      if (subtract) x.c -= j->c;
      else x.c += j->c;
      if (!x.c.is_zero()) out.push_back(std::move(x));
      ++i;
      ++j;
    }
  }
  return IntPoly2::from_terms(std::move(out));
}

}  // namespace

IntPoly2& IntPoly2::operator+=(const IntPoly2& o) { return *this = merge(*this, o, false); }
IntPoly2& IntPoly2::operator-=(const IntPoly2& o) { return *this = merge(*this, o, true); }
IntPoly2 operator+(const IntPoly2& a, const IntPoly2& b) { return merge(a, b, false); }
IntPoly2 operator-(const IntPoly2& a, const IntPoly2& b) { return merge(a, b, true); }

IntPoly2 operator*(const IntPoly2& x, const IntPoly2& y) {
  if (x.is_zero() || y.is_zero()) return {};
  const auto& a = x.terms();
  const auto& b = y.terms();
  if (a.size() == 1 || b.size() == 1) {
    const auto& m = a.size() == 1 ? a[0] : b[0];
    const auto& p = a.size() == 1 ? b : a;
    std::vector<Term> out;
    out.reserve(p.size());
    for (const auto& t : p) out.push_back({t.a + m.a, t.b + m.b, t.c * m.c});
    return IntPoly2::from_terms(std::move(out));
  }
  std::uint32_t dq = x.deg_q() + y.deg_q(), dt = x.deg_t() + y.deg_t();
  std::size_t cells = std::size_t(dq + 1) * (dt + 1);
  if (cells <= 4 * a.size() * b.size() + 64) {
    std::vector<Integer> dense(cells, Integer(0));
    std::vector<char> used(cells, 0);
    for (const auto& s : a)
      for (const auto& t : b) {
        std::size_t idx = std::size_t(s.a + t.a) * (dt + 1) + (s.b + t.b);
        dense[idx].addmul(s.c, t.c);
        used[idx] = 1;
      }
    std::vector<Term> out;
    for (std::size_t idx = 0; idx < cells; ++idx)
      if (used[idx] && !dense[idx].is_zero())
        out.push_back({std::uint32_t(idx / (dt + 1)), std::uint32_t(idx % (dt + 1)), std::move(dense[idx])});
    return IntPoly2::from_terms(std::move(out));
  }
  std::vector<Term> out;
  out.reserve(a.size() * b.size());
  for (const auto& s : a)
    for (const auto& t : b) out.push_back({s.a + t.a, s.b + t.b, s.c * t.c});
  return IntPoly2::from_terms(std::move(out));
}

IntPoly2 IntPoly2::scaled(const Integer& c) const {
  if (c.is_zero()) return {};
  IntPoly2 r(*this);
  for (auto& x : r.terms_) x.c *= c;
  return r;
}

IntPoly2 IntPoly2::divexact_integer(const Integer& c) const {
  IntPoly2 r(*this);
  for (auto& x : r.terms_) x.c = divexact(x.c, c);
  return r;
}

IntPoly2 IntPoly2::shifted(std::uint32_t da, std::uint32_t db) const {
  IntPoly2 r(*this);
  for (auto& x : r.terms_) {
    x.a += da;
    x.b += db;
  }
  return r;
}

IntPoly2 IntPoly2::unshifted(std::uint32_t da, std::uint32_t db) const {
  IntPoly2 r(*this);
  for (auto& x : r.terms_) {
    if (x.a < da || x.b < db) throw std::logic_error("monomial does not divide polynomial");
    x.a -= da;
    x.b -= db;
  }
  return r;
}

IntPoly2 IntPoly2::swapped() const {
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const auto& x : terms_) ts.push_back({x.b, x.a, x.c});
  return from_terms(std::move(ts));
}

IntPoly2 IntPoly2::pow(unsigned e) const {
  IntPoly2 r(1), b(*this);
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

bool operator==(const IntPoly2& a, const IntPoly2& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    const auto& x = a.terms_[i];
    const auto& y = b.terms_[i];
    if (x.a != y.a || x.b != y.b || x.c != y.c) return false;
  }
  return true;
}

mpq_class IntPoly2::eval(const mpq_class& q, const mpq_class& t) const {
  std::vector<mpq_class> qp{1}, tp{1};
  mpq_class r = 0;
  for (const auto& x : terms_) {
    while (qp.size() <= x.a) qp.push_back(qp.back() * q);
    while (tp.size() <= x.b) tp.push_back(tp.back() * t);
    r += mpq_class(x.c.to_mpz()) * qp[x.a] * tp[x.b];
  }
  return r;
}

std::string IntPoly2::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& x : terms_) {
    std::string c = x.c.to_string();
    bool neg = c[0] == '-';
    if (neg) c = c.substr(1);
    if (first) s += neg ? "-" : "";
    else s += neg ? " - " : " + ";
    first = false;
    bool unit = c == "1" && (x.a || x.b);
    std::string mono;
    if (x.a) mono += x.a == 1 ? "q" : "q^" + std::to_string(x.a);
    if (x.a && x.b) mono += "*";
    if (x.b) mono += x.b == 1 ? "t" : "t^" + std::to_string(x.b);
    if (unit) s += mono;
    else if (mono.empty()) s += c;
    else s += c + "*" + mono;
  }
  return s;
}

std::size_t IntPoly2::hash() const {
  std::size_t h = terms_.size();
  for (const auto& x : terms_) {
    h = h * 1000003u ^ key(x);
    h = h * 1000003u ^ std::hash<std::string>{}(x.c.is_small() ? std::string() : x.c.to_string());
    if (x.c.is_small()) h ^= std::hash<std::int64_t>{}(x.c.small_value());
  }
  return h;
}

IntPoly2 gcd(const IntPoly2& a, const IntPoly2& b) {
  if (a.is_zero()) return normalize_sign(b);
  if (b.is_zero()) return normalize_sign(a);
  std::uint32_t mq = std::min(a.min_q(), b.min_q());
  std::uint32_t mt = std::min(a.min_t(), b.min_t());
  IntPoly2 x = a.unshifted(a.min_q(), a.min_t());
  IntPoly2 y = b.unshifted(b.min_q(), b.min_t());
  if (x.is_constant() || y.is_constant()) {
    Integer g = gcd(x.content(), y.content());
    return IntPoly2::monomial(g, mq, mt);
  }
  bool swap = std::max(x.deg_q(), y.deg_q()) < std::max(x.deg_t(), y.deg_t());
  if (swap) {
    x = x.swapped();
    y = y.swapped();
  }
  IntPoly2 g = from_dense(bgcd(to_dense(x), to_dense(y)));
  if (swap) g = g.swapped();
  return normalize_sign(g.shifted(mq, mt));
}

bool exact_divide(const IntPoly2& a, const IntPoly2& b, IntPoly2& quo) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) {
    quo = IntPoly2();
    return true;
  }
  if (b.is_monomial()) {
    const auto& m = b.terms()[0];
    std::vector<Term> ts;
    ts.reserve(a.terms().size());
    for (const auto& x : a.terms()) {
      if (x.a < m.a || x.b < m.b || !divides(m.c, x.c)) return false;
      ts.push_back({x.a - m.a, x.b - m.b, divexact(x.c, m.c)});
    }
    quo = IntPoly2::from_terms(std::move(ts));
    return true;
  }
  std::uint32_t bq = b.min_q(), bt = b.min_t();
  if (a.min_q() < bq || a.min_t() < bt) return false;
  IntPoly2 x = a.unshifted(bq, bt);
  IntPoly2 y = b.unshifted(bq, bt);
  if (x.deg_q() < y.deg_q() || x.deg_t() < y.deg_t()) return false;
  bool swap = y.deg_q() < y.deg_t();
  if (swap) {
    x = x.swapped();
    y = y.swapped();
  }
  BPoly q;
  if (!bexact_div(to_dense(x), to_dense(y), q)) return false;
  quo = from_dense(q);
  if (swap) quo = quo.swapped();
  return true;
}

IntPoly2 divexact(const IntPoly2& a, const IntPoly2& b) {
  IntPoly2 q;
  if (!exact_divide(a, b, q)) throw std::logic_error("inexact polynomial division");
  return q;
}

}  // namespace qtp
