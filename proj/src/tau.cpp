#include "qtpaths/tau.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "qtpaths/macdonald.hpp"

namespace qtp {

TensorSeries tau_build(const WeightSpec& g1, const WeightSpec& g2, int zmax) {
  TensorSeries r;
  r.zmax = zmax;
  for (int m = 0; m <= zmax; ++m) {
    const MacData& md = mac_basis(m);
    int n = static_cast<int>(md.lambdas.size());
    QtMatrix w = md.to_p;
    for (int j = 0; j < n; ++j) {
      QtScalar c = pi_eigenvalue(g1, g2, md.lambdas[j]) / md.norm[j];
      for (int i = 0; i < n; ++i)
        if (!w(i, j).is_zero()) w(i, j) *= c;
    }
    r.comp.push_back(w * md.to_p.transpose());
  }
  return r;
}

const GradedOperator& A_cached(const WeightSpec& F, int ell, int window, AEngine engine) {
  using Key = std::tuple<std::string, int, int, int>;
  static std::mutex mu;
  static std::map<Key, std::unique_ptr<GradedOperator>> cache;
  Key key{F.to_string(), ell, window, static_cast<int>(engine)};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  auto op = std::make_unique<GradedOperator>(A_op(F, ell, window, engine));
  std::lock_guard<std::mutex> lock(mu);
  return *cache.try_emplace(key, std::move(op)).first->second;
}

namespace {

QtMatrix block_or_zero(const GradedOperator& a, int d) {
  const QtMatrix* b = a.block(d);
  if (b) return *b;
  return QtMatrix(partition_count(d + a.shift()), partition_count(d));
}

}  // namespace

bool pde_holds(const TensorSeries& tau, const WeightSpec& g1, const WeightSpec& g2, int ell) {
  int n = tau.zmax;
  if (n < ell) throw std::invalid_argument("pde check needs zmax >= l");
  const GradedOperator& a1 = A_cached(g1, ell, n - ell);
  GradedOperator a2 = op_star_adjoint(A_cached(g2, ell, n - ell));
  for (int m = 0; m + ell <= n; ++m) {
    QtMatrix lhs = block_or_zero(a1, m) * tau.comp[m];
    QtMatrix rhs = tau.comp[m + ell] * block_or_zero(a2, m + ell).transpose();
    if (lhs != rhs) return false;
  }
  return true;
}

bool pde_check(const WeightSpec& g1, const WeightSpec& g2, int ell, int zmax) {
  return pde_holds(tau_build(g1, g2, zmax), g1, g2, ell);
}

namespace {

// Block of op from degree d in Macdonald coordinates on both sides.
QtMatrix mac_block(const GradedOperator& op, int d) {
  int tgt = d + op.shift();
  return mac_basis(tgt).from_p * block_or_zero(op, d) * mac_basis(d).to_p;
}

// Pi_G acts diagonally on the H_lambda, so conjugating scales entry (lambda, mu) by G(lambda)/G(mu).
QtMatrix conjugated_mac_block(const WeightSpec& g1, const WeightSpec& g2, int ell, int window, int d) {
  QtMatrix k = mac_block(A_cached(g2, ell, window), d);
  const auto& tl = mac_basis(d + ell).lambdas;
  const auto& sl = mac_basis(d).lambdas;
  for (int j = 0; j < k.cols(); ++j) {
    QtScalar inv = pi_eigenvalue(g2, g1, sl[j]);
    for (int i = 0; i < k.rows(); ++i)
      if (!k(i, j).is_zero()) k(i, j) *= pi_eigenvalue(g1, g2, tl[i]) * inv;
  }
  return k;
}

}  // namespace

GradedOperator conjugated_A(const WeightSpec& g1, const WeightSpec& g2, int ell, int window) {
  GradedOperator r(ell, window);
  for (int d = 0; d <= window; ++d) {
    QtMatrix k = conjugated_mac_block(g1, g2, ell, window, d);
    if (!k.is_zero()) r.set_block(d, mac_basis(d + ell).to_p * k * mac_basis(d).from_p);
  }
  return r;
}

bool conjugation_check(const WeightSpec& g1, const WeightSpec& g2, int ell, int window) {
  const GradedOperator& a1 = A_cached(g1, ell, window);
  for (int d = 0; d <= window; ++d)
    if (conjugated_mac_block(g1, g2, ell, window, d) != mac_block(a1, d)) return false;
  return true;
}

std::vector<SymFunc> a_family(const WeightSpec& F, int n) {
  std::vector<SymFunc> out;
  for (const auto& la : partitions(n)) {
    SymFunc f = SymFunc::one();
    for (int i = la.length() - 1; i >= 0; --i) f = A_cached(F, la.part(i), n - la.part(i)).apply(f);
    out.push_back(std::move(f));
  }
  return out;
}

SymFunc a_function(const WeightSpec& F, const Partition& lambda) {
  return a_family(F, lambda.size())[partition_index(lambda)];
}

QtMatrix a_matrix(const WeightSpec& F, int n, Basis b) {
  const auto& ps = partitions(n);
  int N = static_cast<int>(ps.size());
  QtMatrix m(N, N);
  auto fam = a_family(F, n);
  for (int j = 0; j < N; ++j) {
    SymFunc c = convert(fam[j], b);
    for (int i = 0; i < N; ++i) m(i, j) = c.coeff(ps[i]);
  }
  return m;
}

QtScalar basis_det(const WeightSpec& F, int n) { return determinant(a_matrix(F, n, Basis::e)); }

std::string specialized_basis_report(const WeightSpec& F, int n) {
  const auto& ps = partitions(n);
  int N = static_cast<int>(ps.size());
  QtMatrix m = a_matrix(F, n, Basis::e);
  mpq_class sum = 0;
  for (const auto& a : F.coeffs()) sum += a;
  mpq_class diag = 1;
  for (int i = 0; i < n; ++i) diag *= sum;
  if (n % 2) diag = -diag;
  QtMatrix at1(N, N);
  mpq_class prod = 1;
  for (int j = 0; j < N; ++j)
    for (int i = 0; i < N; ++i) {
      mpq_class v = m(i, j).eval(1, 1);
      at1(i, j) = QtScalar(v);
      if (i == j) {
        if (v != diag)
          return "diagonal entry at " + ps[j].to_string() + " is " + v.get_str() + ", expected " + diag.get_str();
        prod *= v;
      } else if (v != 0 && !dominates(ps[j], ps[i])) {
        return "entry e_" + ps[i].to_string() + " of a_" + ps[j].to_string() + " breaks dominance triangularity";
      }
    }
  if (determinant(at1) != QtScalar(prod)) return "specialized determinant differs from the diagonal product";
  if (prod == 0) return "specialized determinant vanishes";
  return "";
}

TensorSeries tau_from_equations(const WeightSpec& g1, const WeightSpec& g2, int zmax) {
  TensorSeries r;
  r.zmax = zmax;
  for (int m = 0; m <= zmax; ++m) {
    QtMatrix a1 = a_matrix(g1, m, Basis::p);
    QtMatrix a2 = a_matrix(g2, m, Basis::p);
    QtMatrix gram = a2.transpose();
    const auto& ps = partitions(m);
    for (int j = 0; j < gram.cols(); ++j) {
      QtScalar z = star_norm_p(ps[j]);
      for (int i = 0; i < gram.rows(); ++i)
        if (!gram(i, j).is_zero()) gram(i, j) *= z;
    }
    auto b = inverse(gram);
    if (!b) throw std::domain_error("a-family of G2 is not a basis in degree " + std::to_string(m));
    r.comp.push_back(a1 * b->transpose());
  }
  return r;
}

std::pair<SymFunc, SymFunc> ext_delta_sides(int n, int k, int l) {
  if (k <= 0 || k > n || l < 0)
    throw std::invalid_argument("extended delta needs 0 < k <= n and l >= 0");
  SymFunc lhs(Basis::s);
  for (const auto& [la, c] : expand_in_mac(e_fn(n))) {
    QtScalar ev = delta_eigenvalue(DeltaKind::h, l, la) * delta_eigenvalue(DeltaKind::e_prime, k - 1, la);
    lhs += htilde(la).scaled(n % 2 ? -(c * ev) : c * ev);
  }
  int len = k + l;
  SymFunc rhs(Basis::p);
  for (const auto& b : weak_compositions(n - k, len))
    for (const auto& bp : weak_compositions(l, len - 1)) {
      bool binary = true;
      for (int x : bp) binary = binary && x <= 1;
      if (!binary) continue;
      IntSeq beta(len);
      for (int i = 0; i < len; ++i) beta[i] = b[i] + 1 - (i ? bp[i - 1] : 0);
      rhs += R_apply(beta, SymFunc::one(), Engine::increments);
    }
  return {lhs, rhs};
}

bool ext_delta_check(int n, int k, int l) {
  auto [lhs, rhs] = ext_delta_sides(n, k, l);
  return lhs == rhs;
}

}  // namespace qtp
