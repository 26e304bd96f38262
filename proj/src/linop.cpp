#include "qtpaths/linop.hpp"

#include <algorithm>
#include <stdexcept>

namespace qtp {

GradedOperator::GradedOperator(int shift, int window) : shift_(shift), window_(window) {
  if (window < min_source()) throw std::invalid_argument("operator window is empty");
}

GradedOperator GradedOperator::identity(int window) {
  GradedOperator r(0, window);
  for (int d = 0; d <= window; ++d) r.set_block(d, QtMatrix::identity(partition_count(d)));
  return r;
}

void GradedOperator::check_source(int d) const {
  if (d < min_source() || d > window_)
    throw std::out_of_range("source degree " + std::to_string(d) + " outside operator window " +
                            std::to_string(window_));
}

const QtMatrix* GradedOperator::block(int d) const {
  check_source(d);
  auto it = blocks_.find(d);
  return it == blocks_.end() ? nullptr : &it->second;
}

void GradedOperator::set_block(int d, QtMatrix m) {
  check_source(d);
  if (m.rows() != partition_count(d + shift_) || m.cols() != partition_count(d))
    throw std::invalid_argument("block has wrong dimensions");
  if (m.is_zero()) blocks_.erase(d);
  else blocks_[d] = std::move(m);
}

QtVector GradedOperator::apply(int d, const QtVector& v) const {
  const QtMatrix* b = block(d);
  if (!b) return QtVector(partition_count(d + shift_));
  return b->apply(v);
}

SymFunc GradedOperator::apply(const SymFunc& f) const {
  SymFunc out(Basis::p);
  for (const auto& [d, v] : p_components(f)) {
    if (d > window_) throw std::out_of_range("input degree " + std::to_string(d) + " above operator window");
    if (d + shift_ < 0) continue;
    out += from_p_vector(apply(d, v), d + shift_);
  }
  return out;
}

GradedOperator GradedOperator::restricted(int window) const {
  if (window > window_) throw std::out_of_range("cannot enlarge an operator window");
  GradedOperator r(shift_, window);
  for (const auto& [d, m] : blocks_)
    if (d <= window) r.blocks_.emplace(d, m);
  return r;
}

GradedOperator GradedOperator::scaled(const QtScalar& c) const {
  GradedOperator r(shift_, window_);
  if (c.is_zero()) return r;
  for (const auto& [d, m] : blocks_) r.blocks_.emplace(d, m.scaled(c));
  return r;
}

namespace {

GradedOperator combine(const GradedOperator& a, const GradedOperator& b, bool subtract) {
  if (a.shift() != b.shift()) throw std::invalid_argument("adding operators of different shifts");
  int w = std::min(a.window(), b.window());
  GradedOperator r(a.shift(), w);
  for (int d = r.min_source(); d <= w; ++d) {
    const QtMatrix* x = a.block(d);
    const QtMatrix* y = b.block(d);
    if (!x && !y) continue;
    if (!y) r.set_block(d, *x);
    else if (!x) r.set_block(d, subtract ? -*y : *y);
    else r.set_block(d, subtract ? *x - *y : *x + *y);
  }
  return r;
}

}  // namespace

GradedOperator operator+(const GradedOperator& a, const GradedOperator& b) { return combine(a, b, false); }
GradedOperator operator-(const GradedOperator& a, const GradedOperator& b) { return combine(a, b, true); }

GradedOperator op_from_action(const std::function<SymFunc(const SymFunc&)>& action, int shift, int window) {
  GradedOperator r(shift, window);
  for (int d = r.min_source(); d <= window; ++d) {
    const auto& src = partitions(d);
    const auto& tgt = partitions(d + shift);
    QtMatrix m(static_cast<int>(tgt.size()), static_cast<int>(src.size()));
    for (std::size_t j = 0; j < src.size(); ++j) {
      SymFunc img = convert(action(SymFunc::term(Basis::p, src[j])), Basis::p);
      for (const auto& [la, c] : img.terms()) {
        if (la.size() != d + shift)
          throw std::logic_error("action is not homogeneous of shift " + std::to_string(shift));
        m(partition_index(la), static_cast<int>(j)) = c;
      }
    }
    r.set_block(d, std::move(m));
  }
  return r;
}

GradedOperator op_compose(const GradedOperator& a, const GradedOperator& b) {
  int w = std::min(b.window(), a.window() - b.shift());
  int shift = a.shift() + b.shift();
  if (w < (shift < 0 ? -shift : 0)) throw std::out_of_range("composition has an empty window");
  GradedOperator r(shift, w);
  for (int d = r.min_source(); d <= w; ++d) {
    if (d < b.min_source()) continue;
    const QtMatrix* y = b.block(d);
    if (!y) continue;
    int mid = d + b.shift();
    if (mid < a.min_source()) continue;
    const QtMatrix* x = a.block(mid);
    if (!x) continue;
    r.set_block(d, *x * *y);
  }
  return r;
}

GradedOperator op_commutator(const GradedOperator& a, const GradedOperator& b) {
  return op_compose(a, b) - op_compose(b, a);
}

GradedOperator op_star_adjoint(const GradedOperator& a) {
  int k = a.shift();
  GradedOperator r(-k, a.window() + k);
  for (const auto& [d, m] : a.blocks()) {
    const auto& src = partitions(d);
    const auto& tgt = partitions(d + k);
    QtMatrix adj = m.transpose();
    for (int i = 0; i < adj.rows(); ++i) {
      QtScalar gi = star_norm_p(src[i]).inv();
      for (int j = 0; j < adj.cols(); ++j)
        if (!adj(i, j).is_zero()) adj(i, j) *= gi * star_norm_p(tgt[j]);
    }
    r.set_block(d + k, std::move(adj));
  }
  return r;
}

bool op_equal(const GradedOperator& a, const GradedOperator& b, int window) {
  if (a.shift() != b.shift()) throw std::invalid_argument("comparing operators of different shifts");
  if (window > a.window() || window > b.window())
    throw std::out_of_range("comparison window exceeds an operator window");
  for (int d = a.min_source(); d <= window; ++d) {
    const QtMatrix* x = a.block(d);
    const QtMatrix* y = b.block(d);
    if (!x && !y) continue;
    if (!x || !y) return false;
    if (*x != *y) return false;
  }
  return true;
}

}  // namespace qtp
