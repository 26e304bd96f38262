#include "qtpaths/paths.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "qtpaths/laurent.hpp"
#include "qtpaths/steps.hpp"

namespace qtp {

IntSeq AltPath::heights() const {
  IntSeq y{0};
  for (int s : steps) y.push_back(y.back() + s);
  return y;
}

int AltPath::valley(int j) const {
  int y = 0;
  for (int i = 0; i < 2 * j; ++i) y += steps.at(i);
  return y;
}

int seq_size(const IntSeq& s) { return std::accumulate(s.begin(), s.end(), 0); }

std::string seq_string(const IntSeq& s) {
  std::string r = "(";
  for (std::size_t i = 0; i < s.size(); ++i) r += (i ? "," : "") + std::to_string(s[i]);
  return r + ")";
}

AltPath gamma_of(const IntSeq& beta) {
  AltPath g;
  for (int b : beta) {
    g.steps.push_back(std::max(0, b));
    g.steps.push_back(std::min(0, b));
  }
  return g;
}

bool is_alternating(const AltPath& g) {
  if (g.steps.size() % 2) return false;
  for (std::size_t i = 0; i < g.steps.size(); ++i)
    if (i % 2 ? g.steps[i] > 0 : g.steps[i] < 0) return false;
  return true;
}

int beta_height(const AltPath& g, const IntSeq& beta, int j) {
  int b = 0;
  for (int i = 0; i < j; ++i) b += beta.at(i);
  return g.valley(j) - b;
}

bool in_R(const AltPath& g, const IntSeq& beta) {
  if (!is_alternating(g) || g.half_length() != static_cast<int>(beta.size())) return false;
  int l = g.half_length();
  for (int j = 1; j < l; ++j)
    if (beta_height(g, beta, j) < 0) return false;
  return l == 0 || beta_height(g, beta, l) == 0;
}

namespace {

QtScalar qt_power(int e) { return QtScalar::qt().pow(e); }

IntSeq prefix_sums(const IntSeq& beta) {
  IntSeq b{0};
  for (int x : beta) b.push_back(b.back() + x);
  return b;
}

}  // namespace

QtScalar valley_weight(const AltPath& g, const IntSeq& beta) {
  if (!in_R(g, beta)) throw std::invalid_argument("path " + seq_string(g.steps) + " is not in R_" + seq_string(beta));
  int e = 0;
  for (int j = 1; j <= g.half_length(); ++j) e += beta_height(g, beta, j);
  return qt_power(e);
}

SymFunc path_op_apply(const AltPath& g, const IntSeq& beta, const SymFunc& f) {
  QtScalar w = valley_weight(g, beta);
  SymFunc r = convert(f, Basis::p);
  for (auto it = g.steps.rbegin(); it != g.steps.rend() && !r.is_zero(); ++it) r = apply_step(*it, r);
  return r.scaled(w);
}

std::vector<AltPath> enumerate_paths(const IntSeq& beta, int d) {
  int l = static_cast<int>(beta.size());
  IntSeq B = prefix_sums(beta);
  int top = B[l] + d;
  std::vector<AltPath> out;
  if (top < 0) return out;
  IntSeq y(2 * l + 1);
  y[2 * l] = B[l];
  // Fill heights from the right end back to y_0 = 0.
  auto rec = [&](auto&& self, int j) -> void {
    if (j == 0) {
      if (y[0] != 0) return;
      AltPath g;
      for (int i = 1; i <= 2 * l; ++i) g.steps.push_back(y[i] - y[i - 1]);
      out.push_back(std::move(g));
      return;
    }
    if (j % 2 == 0) {
      for (int p = y[j]; p <= top; ++p) {
        y[j - 1] = p;
        self(self, j - 1);
      }
    } else {
      int i = (j - 1) / 2;
      int lo = i == 0 ? 0 : B[i];
      int hi = i == 0 ? 0 : y[j];
      for (int v = lo; v <= std::min(hi, y[j]); ++v) {
        y[j - 1] = v;
        self(self, j - 1);
      }
    }
  };
  if (l == 0) {
    out.push_back(AltPath{});
    return out;
  }
  rec(rec, 2 * l);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IntSeq> enumerate_increments(const IntSeq& beta, int d) {
  int l = static_cast<int>(beta.size());
  IntSeq B = prefix_sums(beta);
  int top = B[l] + d;
  std::vector<IntSeq> out;
  if (top < 0) return out;
  IntSeq s(l + 1);
  s[l] = B[l];
  auto rec = [&](auto&& self, int j) -> void {
    if (j == 0) {
      IntSeq r;
      for (int i = 1; i <= l; ++i) r.push_back(s[i] - s[i - 1]);
      out.push_back(std::move(r));
      return;
    }
    if (j == 1) {
      s[0] = 0;
      self(self, 0);
      return;
    }
    for (int v = B[j - 1]; v <= top; ++v) {
      s[j - 1] = v;
      self(self, j - 1);
    }
  };
  rec(rec, l);
  std::sort(out.begin(), out.end());
  return out;
}

std::string engine_name(Engine e) {
  switch (e) {
    case Engine::paths: return "paths";
    case Engine::increments: return "increments";
    case Engine::voa: return "voa";
  }
  return "";
}

Engine engine_from_name(const std::string& s) {
  if (s == "paths") return Engine::paths;
  if (s == "increments") return Engine::increments;
  if (s == "voa") return Engine::voa;
  throw std::invalid_argument("unknown engine: " + s);
}

namespace {

// Both engines sum over paths (or increment tuples) from the endpoint
// backwards. Paths sharing a suffix share the product of its operators, so the
// sum is organised by the last fixed point: level[y] is the weighted sum of the
// operator words of all suffixes starting at height y, mapping degree d to
// degree d + |beta| - y.
using Level = std::map<int, QtMatrix>;

void accumulate(Level& lv, int y, QtMatrix m) {
  auto it = lv.find(y);
  if (it == lv.end())
    lv.emplace(y, std::move(m));
  else
    it->second += m;
}

// Prepend one step of operator op(y_new, y_old) to every suffix.
template <class Op>
Level prepend(const Level& lv, int lo, int hi, Op op) {
  Level next;
  for (const auto& [y, s] : lv)
    for (int v = lo; v <= hi; ++v) {
      const QtMatrix* blk = op(v, y);
      if (!blk) continue;
      QtMatrix m = *blk * s;
      if (!m.is_zero()) accumulate(next, v, std::move(m));
    }
  return next;
}

void weigh_valleys(Level& lv, int base) {
  for (auto& [y, s] : lv)
    if (y != base) s = s.scaled(qt_power(y - base));
}

QtMatrix finish(const Level& lv, int rows, int cols) {
  auto it = lv.find(0);
  return it == lv.end() ? QtMatrix(rows, cols) : it->second;
}

QtMatrix paths_engine(const IntSeq& beta, int d, const QtMatrix& s0) {
  int l = static_cast<int>(beta.size());
  IntSeq B = prefix_sums(beta);
  int top = B[l] + d;
  Level lv{{B[l], s0}};
  for (int i = l; i >= 1; --i) {
    // down step from the peak p to the valley y_{2i}
    Level peaks;
    for (const auto& [y, s] : lv)
      for (int p = y; p <= top; ++p) {
        if (p == y) {
          accumulate(peaks, p, s);
          continue;
        }
        const QtMatrix* blk = step_block(y - p, d + B[l] - y);
        if (!blk) continue;
        QtMatrix m = *blk * s;
        if (!m.is_zero()) accumulate(peaks, p, std::move(m));
      }
    // up step from the valley y_{2i-2} to the peak
    lv.clear();
    int lo = i == 1 ? 0 : B[i - 1];
    for (const auto& [p, s] : peaks)
      for (int v = lo; v <= (i == 1 ? std::min(0, p) : p); ++v) {
        if (v == p) {
          accumulate(lv, v, s);
          continue;
        }
        const QtMatrix* blk = step_block(p - v, d + B[l] - p);
        if (!blk) continue;
        QtMatrix m = *blk * s;
        if (!m.is_zero()) accumulate(lv, v, std::move(m));
      }
    if (i > 1) weigh_valleys(lv, B[i - 1]);
  }
  return finish(lv, partition_count(d + B[l]), s0.cols());
}

QtMatrix increments_engine(const IntSeq& beta, int d, const QtMatrix& s0) {
  int l = static_cast<int>(beta.size());
  IntSeq B = prefix_sums(beta);
  int top = B[l] + d;
  Level lv{{B[l], s0}};
  for (int j = l; j >= 1; --j) {
    int lo = j == 1 ? 0 : B[j - 1];
    int hi = j == 1 ? 0 : top;
    lv = prepend(lv, lo, hi, [&](int v, int sj) { return D_block(sj - v, d + B[l] - sj); });
    if (j > 1) weigh_valleys(lv, B[j - 1]);
  }
  return finish(lv, partition_count(d + B[l]), s0.cols());
}

QtMatrix R_times(const IntSeq& beta, int d, const QtMatrix& s0, Engine engine) {
  int tgt = d + seq_size(beta);
  if (tgt < 0) return QtMatrix(0, s0.cols());
  switch (engine) {
    case Engine::paths: return paths_engine(beta, d, s0);
    case Engine::increments: return increments_engine(beta, d, s0);
    case Engine::voa: return voa_block({beta}, d) * s0;
  }
  throw std::logic_error("bad engine");
}

QtMatrix column(const QtVector& v) {
  QtMatrix m(static_cast<int>(v.size()), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(static_cast<int>(i), 0) = v[i];
  return m;
}

SymFunc apply_blocks(const std::function<QtMatrix(int, const QtMatrix&)>& blk, int shift, const SymFunc& f) {
  SymFunc r(Basis::p);
  for (const auto& [d, v] : p_components(f)) {
    if (d + shift < 0) continue;
    QtMatrix out = blk(d, column(v));
    QtVector w(out.rows());
    for (int i = 0; i < out.rows(); ++i) w[i] = out(i, 0);
    r += from_p_vector(w, d + shift);
  }
  return r;
}

}  // namespace

QtMatrix R_block(const IntSeq& beta, int d, Engine engine) {
  int tgt = d + seq_size(beta);
  if (tgt < 0) return QtMatrix(0, partition_count(d));
  if (engine == Engine::voa) return voa_block({beta}, d);
  return R_times(beta, d, QtMatrix::identity(partition_count(d)), engine);
}

SymFunc R_apply(const IntSeq& beta, const SymFunc& f, Engine engine) {
  return apply_blocks([&](int d, const QtMatrix& s) { return R_times(beta, d, s, engine); }, seq_size(beta), f);
}

GradedOperator R_op(const IntSeq& beta, int window, Engine engine) {
  GradedOperator r(seq_size(beta), window);
  for (int d = r.min_source(); d <= window; ++d) {
    QtMatrix m = R_block(beta, d, engine);
    if (!m.is_zero()) r.set_block(d, std::move(m));
  }
  return r;
}

bool valid_psi_domain(const IntSeq& beta) {
  if (beta.empty() || beta[0] <= 0) return false;
  return std::all_of(beta.begin(), beta.end(), [](int b) { return b >= 0; });
}

IntSeq psi(const IntSeq& beta) {
  if (!valid_psi_domain(beta))
    throw std::invalid_argument("psi needs beta_1 > 0 and beta_i >= 0, got " + seq_string(beta));
  IntSeq a;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    a.insert(a.end(), beta[i], 0);
    if (i + 1 < beta.size()) ++a.back();
  }
  return a;
}

IntSeq psi_inv(const IntSeq& alpha) {
  if (alpha.empty()) throw std::invalid_argument("psi_inv of the empty sequence is undefined");
  for (int a : alpha)
    if (a < 0) throw std::invalid_argument("psi_inv needs non-negative entries, got " + seq_string(alpha));
  // Particle k sits over peak pos_k; consecutive particles are alpha_k apart.
  IntSeq pos{1};
  for (std::size_t k = 0; k + 1 < alpha.size(); ++k) pos.push_back(pos.back() + alpha[k]);
  IntSeq beta(pos.back() + alpha.back(), 0);
  for (int p : pos) ++beta[p - 1];
  return beta;
}

SymFunc Q_apply(const IntSeq& alpha, const SymFunc& f, Engine engine) { return R_apply(psi_inv(alpha), f, engine); }

GradedOperator Q_op(const IntSeq& alpha, int window, Engine engine) { return R_op(psi_inv(alpha), window, engine); }

GradedOperator Q_sym_op(const IntSeq& alpha, int window) {
  std::vector<int> idx(alpha.size());
  std::iota(idx.begin(), idx.end(), 0);
  GradedOperator r(static_cast<int>(alpha.size()), window);
  std::map<IntSeq, int> mult;
  do {
    IntSeq a;
    for (int i : idx) a.push_back(alpha[i]);
    ++mult[a];
  } while (std::next_permutation(idx.begin(), idx.end()));
  for (const auto& [a, m] : mult) r = r + Q_op(a, window).scaled(QtScalar(m));
  return r;
}

SymFunc R_product_apply(const std::vector<IntSeq>& betas, const SymFunc& f, Engine engine) {
  if (engine == Engine::voa) {
    int shift = 0;
    for (const auto& b : betas) shift += seq_size(b);
    return apply_blocks([&](int d, const QtMatrix& s) { return voa_block(betas, d) * s; }, shift, f);
  }
  SymFunc r = f;
  for (auto it = betas.rbegin(); it != betas.rend(); ++it) r = R_apply(*it, r, engine);
  return r;
}

std::vector<GradedOperator> ad_D0_e1(int n, int window) {
  GradedOperator d0 = D_op(0, window + 1).scaled(-QtScalar::M().inv());
  std::vector<GradedOperator> out{mult_op(-e_fn(1), 1, window)};
  for (int i = 1; i <= n; ++i) out.push_back(op_commutator(d0, out.back()).restricted(window));
  return out;
}

GradedOperator A_F_op(const WeightSpec& F, int window) {
  auto ad = ad_D0_e1(F.degree(), window);
  GradedOperator r(1, window);
  for (int i = 0; i <= F.degree(); ++i)
    if (F.coeff(i) != 0) r = r + ad[i].scaled(QtScalar(F.coeff(i)));
  return r;
}

GradedOperator A_op(const WeightSpec& F, int ell, int window, AEngine engine) {
  if (ell < 1) throw std::invalid_argument("A_F^(l) needs l >= 1");
  if (engine == AEngine::pathsum) {
    GradedOperator r(ell, window);
    IntSeq alpha(ell, 0);
    int K = F.degree();
    for (;;) {
      mpq_class c = 1;
      for (int a : alpha) c *= F.coeff(a);
      if (c != 0) r = r + Q_op(alpha, window).scaled(QtScalar(c));
      int i = ell - 1;
      while (i >= 0 && alpha[i] == K) alpha[i--] = 0;
      if (i < 0) break;
      ++alpha[i];
    }
    return r;
  }
  int n = window + ell - 1;
  GradedOperator af = A_F_op(F, n);
  GradedOperator d0 = D_op(0, n + 1).scaled(-QtScalar::M().inv());
  GradedOperator a = op_commutator(d0, af);
  GradedOperator afm = af.scaled(QtScalar::M().inv());
  for (int k = 2; k <= ell; ++k) a = op_commutator(afm, a);
  return a.restricted(window);
}

}  // namespace qtp
