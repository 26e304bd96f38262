#include "qtpaths/laurent.hpp"

#include <stdexcept>

#include "qtpaths/steps.hpp"

namespace qtp {

namespace {

QtScalar qpow(int a, int b) { return QtScalar(IntPoly2::monomial(Integer(1), a, b)); }

// Coefficients of (1-x)/((1-qx)(1-tx)): h_a(q,t) - h_{a-1}(q,t).
QtScalar omega_bar_coeff(int a) {
  if (a < 0) return QtScalar();
  QtScalar r;
  for (int k = 0; k <= a; ++k) r += qpow(k, a - k);
  for (int k = 0; k < a; ++k) r -= qpow(k, a - 1 - k);
  return r;
}

QtScalar ratio_coeff(int a, bool ni) {
  QtScalar c = omega_bar_coeff(a);
  if (ni) c -= QtScalar::qt() * omega_bar_coeff(a - 1);
  return c;
}

LaurentSeries ratio_monomial(int i, int j, int a, const QtScalar& c, int nvars) {
  std::vector<int> e(nvars, 0);
  e[i] -= a;
  e[j] += a;
  return LaurentSeries::monomial(e, c);
}

IntSeq flatten(const std::vector<IntSeq>& betas) {
  IntSeq b;
  for (const auto& x : betas) b.insert(b.end(), x.begin(), x.end());
  return b;
}

// The product of all pair factors, keeping the exponents kappa for which
// z^(beta - kappa) can come from prod_i Omega[-z_i X], i.e. 0 <= beta_i - kappa_i <= n.
LaurentSeries ratio_product(const std::vector<IntSeq>& betas, std::optional<int> cap) {
  IntSeq beta = flatten(betas);
  int l = static_cast<int>(beta.size());
  int n = seq_size(beta);
  LaurentSeries p(l);
  if (n < 0) return p;
  p = LaurentSeries::constant(l, QtScalar(1));
  std::vector<std::vector<bool>> ni(l, std::vector<bool>(l, false));
  for (auto [i, j] : non_consecutive_indices(betas)) ni[i - 1][j - 1] = true;
  std::map<std::pair<int, bool>, QtScalar> coeffs;
  auto coeff = [&](int a, bool nic) -> const QtScalar& {
    auto it = coeffs.find({a, nic});
    if (it == coeffs.end()) it = coeffs.emplace(std::make_pair(a, nic), ratio_coeff(a, nic)).first;
    return it->second;
  };
  for (int i = 0; i < l; ++i) {
    for (int j = i + 1; j < l; ++j) {
      LaurentSeries next(l);
      for (const auto& [e, c] : p.terms()) {
        int amax = e[i] - beta[i] + n;
        if (cap) amax = std::min(amax, *cap);
        std::vector<int> f = e;
        for (int a = 0; a <= amax; ++a) {
          f[i] = e[i] - a;
          f[j] = e[j] + a;
          const QtScalar& k = coeff(a, ni[i][j]);
          if (!k.is_zero()) next.add_term(f, c * k);
        }
      }
      p = std::move(next);
    }
    LaurentSeries kept(l);
    for (const auto& [e, c] : p.terms())
      if (e[i] <= beta[i] && e[i] >= beta[i] - n) kept.add_term(e, c);
    p = std::move(kept);
  }
  return p;
}

}  // namespace

LaurentSeries geom_factor(const QtScalar& c, int i, int j, int T, int nvars) {
  if (i >= j) throw std::invalid_argument("geometric factor must expand in z_j/z_i with i < j");
  LaurentSeries r = LaurentSeries::constant(nvars, QtScalar(1));
  QtScalar pw(1);
  for (int a = 1; a <= T; ++a) {
    pw *= c;
    r += ratio_monomial(i, j, a, pw, nvars);
  }
  return r;
}

LaurentSeries omega_factor(int i, int j, int T, int nvars) {
  if (i >= j) throw std::invalid_argument("omega factor must expand in z_j/z_i with i < j");
  LaurentSeries r(nvars);
  for (int a = 0; a <= T; ++a) r += ratio_monomial(i, j, a, ratio_coeff(a, true), nvars);
  return r;
}

std::vector<std::pair<int, int>> non_consecutive_indices(const std::vector<IntSeq>& betas) {
  std::vector<int> block;
  for (std::size_t k = 0; k < betas.size(); ++k) block.insert(block.end(), betas[k].size(), static_cast<int>(k));
  int l = static_cast<int>(block.size());
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l; ++j)
      if (j > i + 1 || block[i] != block[j]) out.emplace_back(i + 1, j + 1);
  return out;
}

int default_ratio_cap(const std::vector<IntSeq>& betas) {
  int s = 0;
  for (int b : flatten(betas)) s += std::max(b, 0);
  return s + 1;
}

SymFunc explicit_rhs(const std::vector<IntSeq>& betas, std::optional<int> cap) {
  IntSeq beta = flatten(betas);
  int n = seq_size(beta);
  SymFunc r(Basis::e);
  if (n < 0) return r;
  LaurentSeries pr = ratio_product(betas, cap);
  for (const auto& [e, c] : pr.terms()) {
    std::vector<int> parts;
    for (std::size_t i = 0; i < beta.size(); ++i)
      if (beta[i] != e[i]) parts.push_back(beta[i] - e[i]);
    r.add(Partition::from_unsorted(parts), n % 2 ? -c : c);
  }
  return r;
}

Side side_from_name(const std::string& s) {
  if (s == "schur") return Side::schur;
  if (s == "monomial") return Side::monomial;
  if (s == "elementary") return Side::elementary;
  throw std::invalid_argument("unknown side: " + s);
}

QtScalar expansion_coeff(const std::vector<IntSeq>& betas, const Partition& lambda, Side side) {
  IntSeq beta = flatten(betas);
  int n = seq_size(beta);
  if (lambda.size() != n)
    throw std::invalid_argument("partition size " + std::to_string(lambda.size()) + " differs from total size " +
                                std::to_string(n));
  int l = static_cast<int>(beta.size());
  SymFunc g = side == Side::schur       ? SymFunc::term(Basis::s, lambda.transpose())
              : side == Side::monomial ? SymFunc::term(Basis::e, lambda)
                                       : SymFunc::term(Basis::m, lambda);
  std::vector<LaurentMonomial> args;
  for (int i = 0; i < l; ++i) {
    std::vector<int> e(l, 0);
    e[i] = 1;
    args.emplace_back(QtScalar(1), e);
  }
  LaurentSeries gz = l ? eval_monomials(g, args) : LaurentSeries::constant(0, n == 0 ? QtScalar(1) : QtScalar());
  QtScalar r;
  LaurentSeries pr = ratio_product(betas, std::nullopt);
  for (const auto& [e, c] : pr.terms()) {
    std::vector<int> rest(l);
    for (int i = 0; i < l; ++i) rest[i] = beta[i] - e[i];
    QtScalar k = gz.coeff(rest);
    if (!k.is_zero()) r += c * k;
  }
  return r;
}

QtMatrix voa_block(const std::vector<IntSeq>& betas, int d) {
  IntSeq beta = flatten(betas);
  std::vector<bool> closes_block;
  for (const auto& b : betas)
    for (std::size_t i = 0; i < b.size(); ++i) closes_block.push_back(i + 1 == b.size());
  int total = seq_size(beta);
  int tgt = d + total;
  if (tgt < 0) return QtMatrix(0, partition_count(d));
  // c[j] is the coefficient of w^j; it maps degree tgt - B - j to degree tgt,
  // where B is the sum of the exponents extracted so far.
  std::map<int, QtMatrix> c;
  c.emplace(0, QtMatrix::identity(partition_count(tgt)));
  int B = 0;
  for (std::size_t m = 0; m < beta.size(); ++m) {
    int b = beta[m];
    int nb = B + b;
    std::map<int, QtMatrix> next;
    int jmax = closes_block[m] ? 0 : tgt - nb;
    for (int jp = 0; jp <= jmax; ++jp) {
      int src = tgt - nb - jp;
      if (src < 0) break;
      QtMatrix acc(partition_count(tgt), partition_count(src));
      bool any = false;
      for (const auto& [j, cj] : c) {
        const QtMatrix* dk = D_block(b + jp - j, src);
        if (!dk) continue;
        acc += cj * *dk;
        any = true;
      }
      if (!any || acc.is_zero()) continue;
      next.emplace(jp, jp ? acc.scaled(QtScalar::qt().pow(jp)) : acc);
    }
    c = std::move(next);
    B = nb;
  }
  auto it = c.find(0);
  if (it == c.end()) return QtMatrix(partition_count(tgt), partition_count(d));
  return it->second;
}

GradedOperator voa_operator(const std::vector<IntSeq>& betas, int window) {
  int shift = seq_size(flatten(betas));
  GradedOperator r(shift, window);
  for (int d = r.min_source(); d <= window; ++d) {
    QtMatrix m = voa_block(betas, d);
    if (!m.is_zero()) r.set_block(d, std::move(m));
  }
  return r;
}

SymFunc voa_apply(const std::vector<IntSeq>& betas, const SymFunc& f) {
  int shift = seq_size(flatten(betas));
  SymFunc r(Basis::p);
  for (const auto& [d, v] : p_components(f)) {
    if (d + shift < 0) continue;
    r += from_p_vector(voa_block(betas, d).apply(v), d + shift);
  }
  return r;
}

namespace {

using XPoly = std::map<int, QtScalar>;

XPoly xmul(const XPoly& a, const XPoly& b) {
  XPoly r;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) r[i + j] += x * y;
  return r;
}

XPoly linear(int e, const QtScalar& c) { return XPoly{{0, QtScalar(1)}, {e, -c}}; }

}  // namespace

std::pair<GradedOperator, GradedOperator> d_exchange_sides(int a, int b, int window) {
  // x = z_2/z_1. Left factor: (1-1/x)(1-qt/x)(1-qx)(1-tx); right: (1-x)(1-qtx)(1-q/x)(1-t/x).
  XPoly lf = xmul(xmul(linear(-1, QtScalar(1)), linear(-1, QtScalar::qt())),
                  xmul(linear(1, QtScalar::q()), linear(1, QtScalar::t())));
  XPoly rf = xmul(xmul(linear(1, QtScalar(1)), linear(1, QtScalar::qt())),
                  xmul(linear(-1, QtScalar::q()), linear(-1, QtScalar::t())));
  GradedOperator lhs(a + b, window), rhs(a + b, window);
  for (int d = lhs.min_source(); d <= window; ++d) {
    int tgt = d + a + b;
    QtMatrix l(partition_count(tgt), partition_count(d)), r = l;
    for (const auto& [u, c] : lf) {
      // [z_1^a z_2^b]: D_{a+u}(z_1) D_{b-u}(z_2)
      const QtMatrix* inner = D_block(b - u, d);
      if (!inner) continue;
      const QtMatrix* outer = D_block(a + u, d + b - u);
      if (outer && !c.is_zero()) l += (*outer * *inner).scaled(c);
    }
    for (const auto& [u, c] : rf) {
      const QtMatrix* inner = D_block(a + u, d);
      if (!inner) continue;
      const QtMatrix* outer = D_block(b - u, d + a + u);
      if (outer && !c.is_zero()) r += (*outer * *inner).scaled(c);
    }
    if (!l.is_zero()) lhs.set_block(d, std::move(l));
    if (!r.is_zero()) rhs.set_block(d, std::move(r));
  }
  return {lhs, rhs};
}

}  // namespace qtp
