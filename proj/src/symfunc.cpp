#include "qtpaths/symfunc.hpp"

#include <atomic>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include <gmpxx.h>

namespace qtp {

namespace detail {
// Defined in macdonald.cpp.
const QtMatrix& htilde_to_p(int n);
const QtMatrix& htilde_from_p(int n);
}  // namespace detail

namespace {

std::atomic<int> g_degree_cap{12};

void check_degree(int n) {
  if (n > g_degree_cap.load()) throw std::out_of_range("degree " + std::to_string(n) + " exceeds the configured cap");
}

using QMap = std::map<Partition, mpq_class>;

QMap qmul(const QMap& a, const QMap& b) {
  QMap r;
  for (const auto& [la, x] : a)
    for (const auto& [mu, y] : b) r[la.join(mu)] += x * y;
  for (auto it = r.begin(); it != r.end();) it = it->second == 0 ? r.erase(it) : std::next(it);
  return r;
}

// h_k or e_k in the p-basis.
QMap hk_p(int k, bool elementary) {
  QMap r;
  for (const auto& mu : partitions(k)) {
    mpq_class c(1);
    c /= mpq_class(mu.z().to_mpz());
    if (elementary && (k - mu.length()) % 2) c = -c;
    r[mu] = c;
  }
  return r;
}

QMap product_p(const Partition& lambda, bool elementary) {
  QMap r{{Partition(), mpq_class(1)}};
  for (int k : lambda.parts()) r = qmul(r, hk_p(k, elementary));
  return r;
}

// Jacobi-Trudi: s_lambda = det(g_{lambda_i - i + j}) as a combination of g_nu.
std::map<Partition, long long> jacobi_trudi(const Partition& lambda) {
  int l = lambda.length();
  std::vector<int> perm(l);
  std::iota(perm.begin(), perm.end(), 0);
  std::map<Partition, long long> out;
  do {
    int inversions = 0;
    for (int i = 0; i < l; ++i)
      for (int j = i + 1; j < l; ++j)
        if (perm[i] > perm[j]) ++inversions;
    std::vector<int> idx;
    bool ok = true;
    for (int i = 0; i < l; ++i) {
      int v = lambda.part(i) - i + perm[i];
      if (v < 0) {
        ok = false;
        break;
      }
      idx.push_back(v);
    }
    if (!ok) continue;
    out[Partition::from_unsorted(idx)] += inversions % 2 ? -1 : 1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

using QMatrix = std::vector<std::vector<mpq_class>>;

QMatrix qinverse(QMatrix a) {
  int n = static_cast<int>(a.size());
  QMatrix inv(n, std::vector<mpq_class>(n, 0));
  for (int i = 0; i < n; ++i) inv[i][i] = 1;
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw std::logic_error("singular transition matrix");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    mpq_class f = 1 / a[c][c];
    for (int j = 0; j < n; ++j) {
      a[c][j] *= f;
      inv[c][j] *= f;
    }
    for (int i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      mpq_class g = a[i][c];
      for (int j = 0; j < n; ++j) {
        a[i][j] -= g * a[c][j];
        inv[i][j] -= g * inv[c][j];
      }
    }
  }
  return inv;
}

QMatrix classical_to_p(Basis b, int n) {
  const auto& parts = partitions(n);
  int N = static_cast<int>(parts.size());
  QMatrix m(N, std::vector<mpq_class>(N, 0));
  auto put_column = [&](int j, const QMap& col) {
    for (const auto& [mu, c] : col) m[partition_index(mu)][j] = c;
  };
  switch (b) {
    case Basis::p:
      for (int j = 0; j < N; ++j) m[j][j] = 1;
      break;
    case Basis::h:
    case Basis::e:
      for (int j = 0; j < N; ++j) put_column(j, product_p(parts[j], b == Basis::e));
      break;
    case Basis::s:
      for (int j = 0; j < N; ++j) {
        const Partition& la = parts[j];
        bool dual = la.length() > (la.empty() ? 0 : la.parts()[0]);
        Partition shape = dual ? la.transpose() : la;
        QMap col;
        for (const auto& [nu, c] : jacobi_trudi(shape)) {
          if (c == 0) continue;
          for (const auto& [mu, x] : product_p(nu, dual)) col[mu] += mpq_class(static_cast<long>(c)) * x;
        }
        put_column(j, col);
      }
      break;
    case Basis::m: {
      // <m_la, h_mu> = delta, so M = ((Z H)^{-1})^T with Z = diag(z).
      QMatrix h = classical_to_p(Basis::h, n);
      for (int i = 0; i < N; ++i) {
        mpq_class z(parts[i].z().to_mpz());
        for (int j = 0; j < N; ++j) h[i][j] *= z;
      }
      QMatrix inv = qinverse(h);
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) m[i][j] = inv[j][i];
      break;
    }
    case Basis::Htilde:
      throw std::logic_error("not a classical basis");
  }
  return m;
}

QtMatrix to_qt(const QMatrix& m) {
  int n = static_cast<int>(m.size());
  QtMatrix r(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m[i][j] != 0) r(i, j) = QtScalar(m[i][j]);
  return r;
}

struct TransitionCache {
  std::mutex mu;
  std::map<std::pair<int, int>, std::unique_ptr<QtMatrix>> to, from;
};

TransitionCache& cache() {
  static TransitionCache c;
  return c;
}

}  // namespace

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::p: return "p";
    case Basis::m: return "m";
    case Basis::e: return "e";
    case Basis::h: return "h";
    case Basis::s: return "s";
    case Basis::Htilde: return "Htilde";
  }
  return "?";
}

Basis basis_from_name(const std::string& name) {
  for (Basis b : {Basis::p, Basis::m, Basis::e, Basis::h, Basis::s, Basis::Htilde})
    if (basis_name(b) == name) return b;
  throw std::invalid_argument("unknown basis: " + name);
}

void set_degree_cap(int n) { g_degree_cap.store(n); }
int degree_cap() { return g_degree_cap.load(); }

const QtMatrix& to_p_matrix(Basis b, int n) {
  check_degree(n);
  if (b == Basis::Htilde) return detail::htilde_to_p(n);
  auto& c = cache();
  {
    std::lock_guard<std::mutex> lock(c.mu);
    auto it = c.to.find({int(b), n});
    if (it != c.to.end()) return *it->second;
  }
  auto m = std::make_unique<QtMatrix>(to_qt(classical_to_p(b, n)));
  std::lock_guard<std::mutex> lock(c.mu);
  return *c.to.try_emplace({int(b), n}, std::move(m)).first->second;
}

const QtMatrix& from_p_matrix(Basis b, int n) {
  check_degree(n);
  if (b == Basis::Htilde) return detail::htilde_from_p(n);
  auto& c = cache();
  {
    std::lock_guard<std::mutex> lock(c.mu);
    auto it = c.from.find({int(b), n});
    if (it != c.from.end()) return *it->second;
  }
  auto m = std::make_unique<QtMatrix>(to_qt(qinverse(classical_to_p(b, n))));
  std::lock_guard<std::mutex> lock(c.mu);
  return *c.from.try_emplace({int(b), n}, std::move(m)).first->second;
}

SymFunc SymFunc::term(Basis b, const Partition& lambda, const QtScalar& c) {
  SymFunc f(b);
  f.add(lambda, c);
  return f;
}

QtScalar SymFunc::coeff(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? QtScalar() : it->second;
}

void SymFunc::add(const Partition& lambda, const QtScalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(lambda);
  if (it == terms_.end()) {
    terms_.emplace(lambda, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

int SymFunc::max_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.size(); }

SymFunc SymFunc::homogeneous_part(int d) const {
  SymFunc r(basis_);
  for (const auto& [la, c] : terms_)
    if (la.size() == d) r.terms_.emplace(la, c);
  return r;
}

SymFunc SymFunc::operator-() const { return scaled(QtScalar(-1)); }

SymFunc& SymFunc::operator+=(const SymFunc& o) {
  const SymFunc& x = o.basis_ == basis_ ? o : convert(o, basis_);
  for (const auto& [la, c] : x.terms_) add(la, c);
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) { return *this += -o; }

SymFunc SymFunc::scaled(const QtScalar& c) const {
  SymFunc r(basis_);
  if (c.is_zero()) return r;
  for (const auto& [la, x] : terms_) r.terms_.emplace(la, x * c);
  return r;
}

bool operator==(const SymFunc& a, const SymFunc& b) {
  if (a.basis_ == b.basis_) return a.terms_ == b.terms_;
  return convert(a, Basis::p).terms_ == convert(b, Basis::p).terms_;
}

std::string SymFunc::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [la, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")*" + basis_name(basis_) + la.to_string();
  }
  return s;
}

QtVector p_vector(const SymFunc& f, int d) {
  check_degree(d);
  QtVector src(partition_count(d));
  bool any = false;
  for (const auto& [la, c] : f.terms())
    if (la.size() == d) {
      src[partition_index(la)] = c;
      any = true;
    }
  if (!any || f.basis() == Basis::p) return src;
  return to_p_matrix(f.basis(), d).apply(src);
}

SymFunc from_p_vector(const QtVector& v, int d) {
  SymFunc f(Basis::p);
  const auto& parts = partitions(d);
  for (std::size_t i = 0; i < v.size(); ++i) f.add(parts[i], v[i]);
  return f;
}

std::map<int, QtVector> p_components(const SymFunc& f) {
  std::map<int, QtVector> out;
  for (const auto& [la, c] : f.terms()) out.try_emplace(la.size());
  for (auto& [d, v] : out) v = p_vector(f, d);
  return out;
}

SymFunc convert(const SymFunc& f, Basis target) {
  if (f.basis() == target) return f;
  SymFunc r(target);
  for (const auto& [d, v] : p_components(f)) {
    QtVector w = target == Basis::p ? v : from_p_matrix(target, d).apply(v);
    const auto& parts = partitions(d);
    for (std::size_t i = 0; i < w.size(); ++i) r.add(parts[i], w[i]);
  }
  return r;
}

SymFunc mul(const SymFunc& f, const SymFunc& g) {
  Basis b = f.basis();
  bool multiplicative = b == g.basis() && (b == Basis::p || b == Basis::e || b == Basis::h);
  if (!multiplicative) b = Basis::p;
  const SymFunc& x = f.basis() == b ? f : convert(f, b);
  const SymFunc& y = g.basis() == b ? g : convert(g, b);
  SymFunc r(b);
  for (const auto& [la, c] : x.terms())
    for (const auto& [mu, d] : y.terms()) r.add(la.join(mu), c * d);
  return r;
}

QtScalar hall(const SymFunc& f, const SymFunc& g) {
  SymFunc x = convert(f, Basis::p), y = convert(g, Basis::p);
  QtScalar r;
  for (const auto& [la, c] : x.terms()) {
    QtScalar d = y.coeff(la);
    if (!d.is_zero()) r += c * d * QtScalar(la.z());
  }
  return r;
}

QtScalar scale_M(int k) {
  IntPoly2 a = IntPoly2(1) - IntPoly2::monomial(Integer(1), k, 0);
  IntPoly2 b = IntPoly2(1) - IntPoly2::monomial(Integer(1), 0, k);
  return QtScalar(a * b);
}

QtScalar scale_minus_M(int k) { return -scale_M(k); }

QtScalar star_norm_p(const Partition& mu) {
  QtScalar r(mu.z());
  for (int k : mu.parts()) r *= scale_minus_M(k);
  return r;
}

QtScalar star(const SymFunc& f, const SymFunc& g) {
  SymFunc x = convert(f, Basis::p), y = convert(g, Basis::p);
  QtScalar r;
  for (const auto& [la, c] : x.terms()) {
    QtScalar d = y.coeff(la);
    if (!d.is_zero()) r += c * d * star_norm_p(la);
  }
  return r;
}

SymFunc pleth_diag(const SymFunc& f, const std::function<QtScalar(int)>& scale) {
  SymFunc x = convert(f, Basis::p);
  std::map<int, QtScalar> memo;
  auto s = [&](int k) -> const QtScalar& {
    auto it = memo.find(k);
    if (it == memo.end()) it = memo.emplace(k, scale(k)).first;
    return it->second;
  };
  SymFunc r(Basis::p);
  for (const auto& [la, c] : x.terms()) {
    QtScalar v = c;
    for (int k : la.parts()) v *= s(k);
    r.add(la, v);
  }
  return r;
}

SymFunc skew_hall(const SymFunc& g, const SymFunc& f) {
  SymFunc x = convert(g, Basis::p), y = convert(f, Basis::p);
  SymFunc r(Basis::p);
  for (const auto& [mu, c] : x.terms()) {
    auto mm = mu.multiplicities();
    for (const auto& [la, d] : y.terms()) {
      if (la.size() < mu.size()) continue;
      auto ml = la.multiplicities();
      Integer factor(1);
      std::vector<int> rest;
      bool ok = true;
      for (std::size_t k = 1; k < std::max(mm.size(), ml.size()); ++k) {
        int a = k < mm.size() ? mm[k] : 0;
        int b = k < ml.size() ? ml[k] : 0;
        if (a > b) {
          ok = false;
          break;
        }
        // (p_k^perp)^a p_k^b = k^a b!/(b-a)! p_k^(b-a)
        for (int i = 0; i < a; ++i) factor *= Integer(static_cast<long long>(k) * (b - i));
        for (int i = 0; i < b - a; ++i) rest.push_back(static_cast<int>(k));
      }
      if (!ok) continue;
      r.add(Partition::from_unsorted(rest), c * d * QtScalar(factor));
    }
  }
  return r;
}

LaurentPoly<QtScalar> eval_monomials(const SymFunc& f, const std::vector<LaurentMonomial>& args) {
  int nv = args.empty() ? 0 : static_cast<int>(args[0].second.size());
  for (const auto& a : args)
    if (static_cast<int>(a.second.size()) != nv) throw std::invalid_argument("monomials need a common variable count");
  std::map<int, LaurentPoly<QtScalar>> pk;
  auto power_sum = [&](int k) -> const LaurentPoly<QtScalar>& {
    auto it = pk.find(k);
    if (it != pk.end()) return it->second;
    LaurentPoly<QtScalar> s(nv);
    for (const auto& [c, e] : args) {
      std::vector<int> ek(e);
      for (int& x : ek) x *= k;
      s.add_term(ek, c.pow(k));
    }
    return pk.emplace(k, std::move(s)).first->second;
  };
  LaurentPoly<QtScalar> out(nv);
  SymFunc fp = convert(f, Basis::p);
  for (const auto& [la, c] : fp.terms()) {
    LaurentPoly<QtScalar> term = LaurentPoly<QtScalar>::constant(nv, c);
    for (int k : la.parts()) term = term * power_sum(k);
    out += term;
  }
  return out;
}

SymFunc e_fn(int k) { return SymFunc::term(Basis::e, k ? Partition{k} : Partition()); }
SymFunc h_fn(int k) { return SymFunc::term(Basis::h, k ? Partition{k} : Partition()); }
SymFunc p_fn(int k) { return SymFunc::term(Basis::p, k ? Partition{k} : Partition()); }

}  // namespace qtp
