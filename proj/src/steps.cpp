#include "qtpaths/steps.hpp"

#include <memory>
#include <mutex>

namespace qtp {

namespace {

struct BlockCache {
  std::mutex mu;
  // value null means a zero block
  std::map<std::pair<int, int>, std::unique_ptr<QtMatrix>> step, d;
};

BlockCache& cache() {
  static BlockCache c;
  return c;
}

std::unique_ptr<QtMatrix> nonzero_or_null(QtMatrix m) {
  if (m.is_zero()) return nullptr;
  return std::make_unique<QtMatrix>(std::move(m));
}

QtMatrix compute_step(int m, int d) {
  const auto& src = partitions(d);
  const auto& tgt = partitions(d + m);
  QtMatrix r(static_cast<int>(tgt.size()), static_cast<int>(src.size()));
  if (m == 0) return QtMatrix::identity(static_cast<int>(src.size()));
  if (m > 0) {
    // (-1)^m e_m = sum_{mu |- m} (-1)^{l(mu)} p_mu / z_mu
    for (std::size_t j = 0; j < src.size(); ++j)
      for (const auto& mu : partitions(m)) {
        QtScalar c = QtScalar::rational(Integer(mu.length() % 2 ? -1 : 1), mu.z());
        r(partition_index(src[j].join(mu)), static_cast<int>(j)) += c;
      }
    return r;
  }
  // h_n[MX]^perp with h_n[MX] = sum_{mu |- n} p_mu[M] p_mu / z_mu
  SymFunc g(Basis::p);
  for (const auto& mu : partitions(-m)) {
    QtScalar c = QtScalar::rational(Integer(1), mu.z());
    for (int k : mu.parts()) c *= scale_M(k);
    g.add(mu, c);
  }
  for (std::size_t j = 0; j < src.size(); ++j) {
    SymFunc img = skew_hall(g, SymFunc::term(Basis::p, src[j]));
    for (const auto& [la, c] : img.terms()) r(partition_index(la), static_cast<int>(j)) = c;
  }
  return r;
}

QtMatrix compute_D(int k, int d) {
  QtMatrix r(partition_count(d + k), partition_count(d));
  for (int n = k < 0 ? -k : 0; n <= d; ++n) {
    const QtMatrix* skew = step_block(-n, d);
    const QtMatrix* mult = step_block(k + n, d - n);
    if (!skew || !mult) continue;
    r += *mult * *skew;
  }
  return r;
}

}  // namespace

const QtMatrix* step_block(int m, int d) {
  if (d < 0) throw std::out_of_range("negative source degree");
  if (d + m < 0) return nullptr;
  auto& c = cache();
  {
    std::lock_guard<std::mutex> lock(c.mu);
    auto it = c.step.find({m, d});
    if (it != c.step.end()) return it->second.get();
  }
  auto blk = nonzero_or_null(compute_step(m, d));
  std::lock_guard<std::mutex> lock(c.mu);
  return c.step.try_emplace({m, d}, std::move(blk)).first->second.get();
}

const QtMatrix* D_block(int k, int d) {
  if (d < 0) throw std::out_of_range("negative source degree");
  if (d + k < 0) return nullptr;
  auto& c = cache();
  {
    std::lock_guard<std::mutex> lock(c.mu);
    auto it = c.d.find({k, d});
    if (it != c.d.end()) return it->second.get();
  }
  auto blk = nonzero_or_null(compute_D(k, d));
  std::lock_guard<std::mutex> lock(c.mu);
  return c.d.try_emplace({k, d}, std::move(blk)).first->second.get();
}

QtVector apply_step(int m, int d, const QtVector& v) {
  if (d + m < 0) return {};
  const QtMatrix* b = step_block(m, d);
  return b ? b->apply(v) : QtVector(partition_count(d + m));
}

QtVector apply_D(int k, int d, const QtVector& v) {
  if (d + k < 0) return {};
  const QtMatrix* b = D_block(k, d);
  return b ? b->apply(v) : QtVector(partition_count(d + k));
}

namespace {

SymFunc apply_graded(const SymFunc& f, int shift, QtVector (*fn)(int, int, const QtVector&)) {
  SymFunc out(Basis::p);
  for (const auto& [d, v] : p_components(f))
    if (d + shift >= 0) out += from_p_vector(fn(shift, d, v), d + shift);
  return out;
}

}  // namespace

SymFunc apply_step(int m, const SymFunc& f) { return apply_graded(f, m, apply_step); }
SymFunc apply_D(int k, const SymFunc& f) { return apply_graded(f, k, apply_D); }

GradedOperator step_op(int m, int window) {
  GradedOperator r(m, window);
  for (int d = r.min_source(); d <= window; ++d)
    if (const QtMatrix* b = step_block(m, d)) r.set_block(d, *b);
  return r;
}

GradedOperator D_op(int k, int window) {
  GradedOperator r(k, window);
  for (int d = r.min_source(); d <= window; ++d)
    if (const QtMatrix* b = D_block(k, d)) r.set_block(d, *b);
  return r;
}

GradedOperator mult_op(const SymFunc& g, int k, int window) {
  return op_from_action([&](const SymFunc& f) { return mul(g, f); }, k, window);
}

}  // namespace qtp
