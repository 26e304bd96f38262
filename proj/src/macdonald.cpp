#include "qtpaths/macdonald.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>

#include "qtpaths/steps.hpp"

namespace qtp {

std::vector<QtScalar> cell_weights(const Partition& lambda) {
  std::vector<QtScalar> out;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda.part(i); ++j) out.emplace_back(IntPoly2::monomial(Integer(1), j, i));
  return out;
}

QtScalar b_stat(const Partition& lambda) {
  QtScalar s;
  for (const auto& x : cell_weights(lambda)) s += x;
  return s;
}

namespace {

std::unique_ptr<MacData> build(int n) {
  auto data = std::make_unique<MacData>();
  data->n = n;
  data->lambdas = partitions(n);
  int N = static_cast<int>(data->lambdas.size());
  const QtMatrix* d0 = D_block(0, n);
  QtMatrix ds = from_p_matrix(Basis::s, n) * *d0 * to_p_matrix(Basis::s, n);

  for (const auto& la : data->lambdas) {
    data->b.push_back(b_stat(la));
    data->eigenvalue.push_back(QtScalar(1) - QtScalar::M() * data->b.back());
  }
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j)
      if (data->eigenvalue[i] == data->eigenvalue[j])
        throw std::logic_error("repeated D_0 eigenvalue: eigenspace is not one-dimensional");

  data->to_p = QtMatrix(N, N);
  for (int l = 0; l < N; ++l) {
    // Spectral projector onto the lambda eigenline applied to s_(n).
    QtVector v(N);
    v[0] = QtScalar(1);
    for (int m = 0; m < N; ++m) {
      if (m == l) continue;
      QtVector w = ds.apply(v);
      for (int i = 0; i < N; ++i) w[i] -= data->eigenvalue[m] * v[i];
      v = std::move(w);
    }
    if (v[0].is_zero()) throw std::logic_error("Macdonald eigenvector has no s_(n) component");
    QtScalar inv = v[0].inv();
    for (auto& x : v) x *= inv;
    QtVector dv = ds.apply(v);
    for (int i = 0; i < N; ++i)
      if (dv[i] != data->eigenvalue[l] * v[i]) throw std::logic_error("D_0 eigen-equation fails");
    SymFunc h(Basis::s);
    for (int i = 0; i < N; ++i) h.add(data->lambdas[i], v[i]);
    QtVector pv = to_p_matrix(Basis::s, n).apply(v);
    for (int i = 0; i < N; ++i) data->to_p(i, l) = pv[i];
    data->htilde.push_back(std::move(h));
  }

  std::vector<QtScalar> gram;
  for (const auto& mu : data->lambdas) gram.push_back(star_norm_p(mu));
  data->from_p = QtMatrix(N, N);
  for (int l = 0; l < N; ++l) {
    QtScalar nm;
    for (int i = 0; i < N; ++i)
      if (!data->to_p(i, l).is_zero()) nm += data->to_p(i, l) * data->to_p(i, l) * gram[i];
    data->norm.push_back(nm);
    QtScalar inv = nm.inv();
    for (int i = 0; i < N; ++i)
      if (!data->to_p(i, l).is_zero()) data->from_p(l, i) = data->to_p(i, l) * gram[i] * inv;
  }
  return data;
}

}  // namespace

const MacData& mac_basis(int n) {
  if (n > degree_cap()) throw std::out_of_range("degree " + std::to_string(n) + " exceeds the configured cap");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<MacData>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return *it->second;
  return *cache.emplace(n, build(n)).first->second;
}

namespace detail {
const QtMatrix& htilde_to_p(int n) { return mac_basis(n).to_p; }
const QtMatrix& htilde_from_p(int n) { return mac_basis(n).from_p; }
}  // namespace detail

SymFunc htilde(const Partition& lambda) { return mac_basis(lambda.size()).htilde[partition_index(lambda)]; }

std::map<Partition, QtScalar> expand_in_mac(const SymFunc& f) {
  std::map<Partition, QtScalar> out;
  for (const auto& [d, v] : p_components(f)) {
    const MacData& md = mac_basis(d);
    QtVector c = md.from_p.apply(v);
    for (std::size_t i = 0; i < c.size(); ++i)
      if (!c[i].is_zero()) out.emplace(md.lambdas[i], c[i]);
  }
  return out;
}

std::map<Partition, QtScalar> pieri_coeffs(const Partition& mu) {
  SymFunc f = mul(SymFunc::term(Basis::e, Partition{1}, QtScalar(-1)), htilde(mu));
  auto c = expand_in_mac(f);
  for (const auto& [la, x] : c) {
    bool one_cell = la.length() <= mu.length() + 1;
    int extra = 0;
    for (int i = 0; one_cell && i < la.length(); ++i) {
      int diff = la.part(i) - mu.part(i);
      if (diff < 0 || diff > 1) one_cell = false;
      extra += diff;
    }
    if (!one_cell || extra != 1)
      throw std::logic_error("Pieri coefficient outside one-cell additions: " + la.to_string());
  }
  return c;
}

GradedOperator mac_diagonal_op(const std::function<QtScalar(const Partition&)>& ev, int window) {
  GradedOperator r(0, window);
  for (int d = 0; d <= window; ++d) {
    const MacData& md = mac_basis(d);
    int N = static_cast<int>(md.lambdas.size());
    QtMatrix scaled(md.to_p);
    for (int j = 0; j < N; ++j) {
      QtScalar e = ev(md.lambdas[j]);
      for (int i = 0; i < N; ++i)
        if (!scaled(i, j).is_zero()) scaled(i, j) *= e;
    }
    r.set_block(d, scaled * md.from_p);
  }
  return r;
}

QtScalar elementary_of(int n, const std::vector<QtScalar>& xs) {
  if (n < 0) return QtScalar();
  std::vector<QtScalar> e(n + 1);
  e[0] = QtScalar(1);
  for (const auto& x : xs)
    for (int k = n; k >= 1; --k) e[k] += e[k - 1] * x;
  return e[n];
}

QtScalar complete_of(int n, const std::vector<QtScalar>& xs) {
  if (n < 0) return QtScalar();
  std::vector<QtScalar> h(n + 1);
  h[0] = QtScalar(1);
  for (const auto& x : xs)
    for (int k = 1; k <= n; ++k) h[k] += h[k - 1] * x;
  return h[n];
}

QtScalar delta_eigenvalue(DeltaKind kind, int n, const Partition& lambda) {
  auto cells = cell_weights(lambda);
  switch (kind) {
    case DeltaKind::e: return elementary_of(n, cells);
    case DeltaKind::h: return complete_of(n, cells);
    case DeltaKind::e_prime: {
      QtScalar s;
      for (int i = 0; i <= n; ++i) {
        QtScalar v = elementary_of(n - i, cells);
        s += i % 2 ? -v : v;
      }
      return s;
    }
  }
  return QtScalar();
}

GradedOperator delta_op(DeltaKind kind, int n, int window) {
  return mac_diagonal_op([&](const Partition& la) { return delta_eigenvalue(kind, n, la); }, window);
}

QtScalar pi_eigenvalue(const WeightSpec& g1, const WeightSpec& g2, const Partition& lambda) {
  QtScalar r(1);
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda.part(i); ++j) {
      QtScalar x(IntPoly2::monomial(Integer(1), j, i));
      QtScalar d = g2.eval(x);
      if (d.is_zero())
        throw std::domain_error("G2 vanishes at cell (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      r *= g1.eval(x) / d;
    }
  return r;
}

GradedOperator pi_op(const WeightSpec& g1, const WeightSpec& g2, int window) {
  return mac_diagonal_op([&](const Partition& la) { return pi_eigenvalue(g1, g2, la); }, window);
}

}  // namespace qtp
