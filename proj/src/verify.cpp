#include "qtpaths/verify.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <stdexcept>

#include "qtpaths/laurent.hpp"
#include "qtpaths/macdonald.hpp"
#include "qtpaths/paths.hpp"
#include "qtpaths/steps.hpp"
#include "qtpaths/tau.hpp"

namespace qtp {

bool SuiteReport::pass() const { return failures() == 0; }

int SuiteReport::failures() const {
  int n = 0;
  for (const auto& c : checks) n += !c.pass;
  return n;
}

namespace {

struct Outcome {
  bool pass;
  Json lhs, rhs;
};

Outcome ok() { return {true, {}, {}}; }

QtMatrix block_or_zero(const GradedOperator& a, int d) {
  if (d >= a.min_source()) {
    const QtMatrix* b = a.block(d);
    if (b) return *b;
  }
  return QtMatrix(d + a.shift() < 0 ? 0 : partition_count(d + a.shift()), partition_count(d));
}

// Blockwise comparison; a failure reports the first differing block of each side.
Outcome same(const GradedOperator& a, const GradedOperator& b, int window) {
  if (a.shift() != b.shift()) return {false, {{"shift", a.shift()}}, {{"shift", b.shift()}}};
  for (int d = std::max(0, -a.shift()); d <= window; ++d) {
    QtMatrix x = block_or_zero(a, d), y = block_or_zero(b, d);
    if (x != y) {
      Json l = to_json(x), r = to_json(y);
      l["source_degree"] = d;
      r["source_degree"] = d;
      return {false, l, r};
    }
  }
  return ok();
}

Outcome same(const SymFunc& a, const SymFunc& b) {
  if (a == b) return ok();
  return {false, to_json(a), to_json(b)};
}

Outcome same(const QtScalar& a, const QtScalar& b) {
  if (a == b) return ok();
  return {false, to_json(a), to_json(b)};
}

Outcome same(const QtMatrix& a, const QtMatrix& b) {
  if (a == b) return ok();
  return {false, to_json(a), to_json(b)};
}

Outcome same(const TensorSeries& a, const TensorSeries& b) {
  if (a == b) return ok();
  return {false, to_json(a), to_json(b)};
}

// A mutation check passes when the underlying comparison fails.
Outcome detected(const Outcome& o) {
  if (!o.pass) return ok();
  return {false, {{"undetected", true}}, {}};
}

class Runner {
 public:
  explicit Runner(std::string suite) { rep_.suite = std::move(suite); }

  void check(std::string id, Json params, const std::function<Outcome()>& body) {
    CheckResult c;
    c.id = std::move(id);
    c.params = std::move(params);
    auto t0 = std::chrono::steady_clock::now();
    try {
      Outcome o = body();
      c.pass = o.pass;
      if (!o.pass) {
        c.lhs = std::move(o.lhs);
        c.rhs = std::move(o.rhs);
      }
    } catch (const std::exception& e) {
      c.pass = false;
      c.lhs = {{"error", e.what()}};
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    rep_.seconds += c.seconds;
    rep_.checks.push_back(std::move(c));
  }

  SuiteReport done() { return std::move(rep_); }

 private:
  SuiteReport rep_;
};

Json seq_json(const IntSeq& s) { return Json(s); }

Json seqs_json(const std::vector<IntSeq>& bs) {
  Json a = Json::array();
  for (const auto& b : bs) a.push_back(seq_json(b));
  return a;
}

Json weight_json(const WeightSpec& w) { return w.to_string(); }

// All sequences of the given length with entries in [lo, hi].
std::vector<IntSeq> all_seqs(int len, int lo, int hi) {
  std::vector<IntSeq> out;
  IntSeq s(len, lo);
  for (;;) {
    out.push_back(s);
    int i = len - 1;
    while (i >= 0 && s[i] == hi) s[i--] = lo;
    if (i < 0) break;
    ++s[i];
  }
  return out;
}

QtScalar qpow(int a, int b) { return QtScalar(IntPoly2::monomial(Integer(1), a, b)); }

// t^(i-1) [i]_{q/t} = sum_{a+b=i-1} q^a t^b
QtScalar h_qt(int i) {
  QtScalar r;
  for (int a = 0; a < i; ++a) r += qpow(a, i - 1 - a);
  return r;
}

// [i]_{qt}
QtScalar qt_int(int i) {
  QtScalar r;
  for (int a = 0; a < i; ++a) r += qpow(a, a);
  return r;
}

// f[M] for f in the p-basis: p_k -> (1-q^k)(1-t^k).
QtScalar eval_at_M(const SymFunc& f, bool negate) {
  QtScalar r;
  SymFunc fp = convert(f, Basis::p);
  for (const auto& [la, c] : fp.terms()) {
    QtScalar x = c;
    for (int k : la.parts()) x *= negate ? scale_minus_M(k) : scale_M(k);
    r += x;
  }
  return r;
}

// Operators of the given shifts acting right to left; each factor is built on
// the window its input degrees need.
GradedOperator step_word(const IntSeq& ms, int w) {
  GradedOperator r = GradedOperator::identity(w);
  int s = 0;
  for (auto it = ms.rbegin(); it != ms.rend(); ++it) {
    int lo = *it < 0 ? -*it : 0;
    r = op_compose(step_op(*it, std::max(w + std::max(s, 0), lo)), r);
    s += *it;
  }
  return r;
}

Json pde_params(const WeightSpec& g1, const WeightSpec& g2, int ell, int zmax) {
  return {{"g1", weight_json(g1)}, {"g2", weight_json(g2)}, {"l", ell}, {"zmax", zmax}};
}

Outcome pde_outcome(const WeightSpec& g1, const WeightSpec& g2, int ell, int zmax) {
  TensorSeries tau = tau_build(g1, g2, zmax);
  if (pde_holds(tau, g1, g2, ell)) return ok();
  // Report the first z-degree where the two sides differ.
  const GradedOperator& a1 = A_cached(g1, ell, zmax - ell);
  GradedOperator a2 = op_star_adjoint(A_cached(g2, ell, zmax - ell));
  for (int m = 0; m + ell <= zmax; ++m) {
    QtMatrix l = block_or_zero(a1, m) * tau.comp[m];
    QtMatrix r = tau.comp[m + ell] * block_or_zero(a2, m + ell).transpose();
    if (l != r) {
      Json lj = to_json(l), rj = to_json(r);
      lj["z_degree"] = m + ell;
      rj["z_degree"] = m + ell;
      return {false, lj, rj};
    }
  }
  return {false, {}, {}};
}

Outcome ext_delta_outcome(int n, int k, int l) {
  auto [a, b] = ext_delta_sides(n, k, l);
  return same(a, b);
}

// ---------------------------------------------------------------------------

SuiteReport suite_d_exchange(const VerifyOptions& o) {
  Runner run("d-exchange");
  int w = std::min(3, o.window);
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b) {
      // Below -w every block maps to a negative degree and both sides vanish.
      if (a + b < -w) continue;
      run.check("d-exchange", {{"a", a}, {"b", b}, {"window", w}}, [&] {
        auto [l, r] = d_exchange_sides(a, b, w);
        return same(l, r, w);
      });
    }
  return run.done();
}

SuiteReport suite_engines(const VerifyOptions& o) {
  Runner run("engines");
  int w = std::min(3, o.window);
  for (int len = 1; len <= 3; ++len)
    for (const auto& beta : all_seqs(len, -2, 2))
      run.check("engine-agreement", {{"beta", beta}, {"window", w}}, [&]() -> Outcome {
        for (int d = std::max(0, -seq_size(beta)); d <= w; ++d) {
          QtMatrix a = R_block(beta, d, Engine::paths);
          QtMatrix b = R_block(beta, d, Engine::increments);
          QtMatrix c = R_block(beta, d, Engine::voa);
          if (a != b) return {false, {{"paths", to_json(a)}, {"degree", d}}, {{"increments", to_json(b)}}};
          if (a != c) return {false, {{"paths", to_json(a)}, {"degree", d}}, {{"voa", to_json(c)}}};
        }
        return ok();
      });
  return run.done();
}

SuiteReport suite_explicit(const VerifyOptions&) {
  Runner run("explicit");
  for (int len = 1; len <= 4; ++len)
    for (const auto& beta : all_seqs(len, -2, 4)) {
      int n = seq_size(beta);
      if (n < 0 || n > 4) continue;
      std::vector<std::vector<IntSeq>> splits{{beta}};
      for (int c = 1; c < len; ++c)
        splits.push_back({IntSeq(beta.begin(), beta.begin() + c), IntSeq(beta.begin() + c, beta.end())});
      for (const auto& bs : splits) {
        Json p = {{"betas", seqs_json(bs)}};
        SymFunc rhs = explicit_rhs(bs);
        run.check("explicit-formula", p, [&] { return same(R_product_apply(bs, SymFunc::one(), Engine::increments), rhs); });
        run.check("coefficient-sides", p, [&]() -> Outcome {
          QtScalar sign(n % 2 ? -1 : 1);
          SymFunc rs = convert(rhs, Basis::s), rm = convert(rhs, Basis::m), re = convert(rhs, Basis::e);
          for (const auto& la : partitions(n)) {
            for (auto [side, f] : {std::pair{Side::schur, &rs}, {Side::monomial, &rm}, {Side::elementary, &re}}) {
              QtScalar x = expansion_coeff(bs, la, side);
              if (x != sign * f->coeff(la))
                return {false, {{"partition", la.parts()}, {"extracted", to_json(x)}},
                        {{"converted", to_json(sign * f->coeff(la))}}};
            }
          }
          return ok();
        });
      }
    }
  // The default ratio cap and two more reproduce the exact truncation.
  for (const auto& bs : std::vector<std::vector<IntSeq>>{{{2, -1, 1}}, {{1}, {0, 1}}, {{2, 0, 0}, {1}}, {{3, -2, 2, 1}}})
    run.check("ratio-cap-stability", {{"betas", seqs_json(bs)}}, [&]() -> Outcome {
      int T = default_ratio_cap(bs);
      SymFunc exact = explicit_rhs(bs);
      Outcome a = same(explicit_rhs(bs, T), exact);
      if (!a.pass) return a;
      return same(explicit_rhs(bs, T + 2), exact);
    });
  return run.done();
}

SuiteReport suite_macdonald(const VerifyOptions&) {
  Runner run("macdonald");
  for (int n = 0; n <= 5; ++n) {
    const MacData& md = mac_basis(n);
    for (std::size_t i = 0; i < md.lambdas.size(); ++i) {
      const Partition& la = md.lambdas[i];
      Json p = {{"lambda", la.parts()}};
      const SymFunc& H = md.htilde[i];
      run.check("eigen", p, [&] {
        QtScalar ev = QtScalar(1) - QtScalar::M() * b_stat(la);
        return same(apply_D(0, H), H.scaled(ev));
      });
      run.check("normalization", p, [&] { return same(H.coeff(Partition(n ? std::vector<int>{n} : std::vector<int>{})), QtScalar(1)); });
      run.check("star-orthogonality", p, [&]() -> Outcome {
        for (std::size_t j = 0; j < md.lambdas.size(); ++j) {
          QtScalar x = star(H, md.htilde[j]);
          QtScalar want = i == j ? md.norm[i] : QtScalar();
          if (j == i && x.is_zero()) return {false, {{"with", md.lambdas[j].parts()}, {"star", to_json(x)}}, {}};
          if (x != want) return {false, {{"with", md.lambdas[j].parts()}, {"star", to_json(x)}}, to_json(want)};
        }
        return ok();
      });
      if (n < 5)
        run.check("pieri-support", p, [&]() -> Outcome {
          for (const auto& [mu, c] : expand_in_mac(mul(-e_fn(1), H))) {
            bool one_cell = mu.size() == n + 1;
            for (int r = 0; r < mu.length() && one_cell; ++r) one_cell = mu.part(r) >= la.part(r);
            if (!one_cell) return {false, {{"outside", mu.parts()}, {"coeff", to_json(c)}}, {}};
          }
          return ok();
        });
    }
  }
  for (int n = 0; n <= 4; ++n)
    run.check("cauchy", {{"n", n}}, [&]() -> Outcome {
      const MacData& md = mac_basis(n);
      int N = static_cast<int>(md.lambdas.size());
      QtMatrix lhs(N, N), rhs(N, N);
      for (int a = 0; a < N; ++a) {
        rhs(a, a) = star_norm_p(md.lambdas[a]).inv();
        for (int b = 0; b < N; ++b)
          for (int l = 0; l < N; ++l) lhs(a, b) += md.to_p(a, l) * md.to_p(b, l) / md.norm[l];
      }
      return same(lhs, rhs);
    });
  return run.done();
}

Outcome check_com_h(int k, int r, int w, bool first_form) {
  GradedOperator lhs = step_word({-k, r}, w) - step_word({r, -k}, w);
  GradedOperator rhs(r - k, w);
  for (int i = 1; i <= std::min(k, r); ++i) {
    GradedOperator term = first_form ? step_word({r - i, -(k - i)}, w).scaled(h_qt(i))
                                     : step_word({-(k - i), r - i}, w).scaled(qt_int(i));
    rhs = rhs + term;
  }
  return same(lhs, rhs.scaled(-QtScalar::M()), w);
}

GradedOperator d0_over_minus_M(int window) { return D_op(0, window).scaled(-QtScalar::M().inv()); }

IntSeq insert_at(IntSeq a, int pos, int v) {
  a.insert(a.begin() + pos, v);
  return a;
}

// Right-hand side of the commutation of ad^m(-e_1) with Q_alpha.
GradedOperator commutation_P_rhs(int m, const IntSeq& alpha, int w) {
  int l = static_cast<int>(alpha.size());
  GradedOperator r(l + 1, w);
  for (int i = 1; i <= l - 1; ++i) r = r + Q_op(insert_at(alpha, i, m), w);
  for (int i = 0; i < l; ++i) {
    int s = m - alpha[i] - 1;
    if (s == 0) continue;
    int lo = std::min(m, alpha[i] + 1);
    int total = m + alpha[i];
    for (int r1 = lo; total - r1 >= lo; ++r1) {
      IntSeq b = alpha;
      b[i] = r1;
      b.insert(b.begin() + i + 1, total - r1);
      r = r + Q_op(b, w).scaled(QtScalar(s > 0 ? 1 : -1));
    }
  }
  return r;
}

SuiteReport suite_commutation(const VerifyOptions& o) {
  Runner run("commutation");
  int w = std::min(4, o.window);
  for (int n = 1; n <= 4; ++n)
    run.check("h-specialized", {{"n", n}}, [&]() -> Outcome {
      SymFunc h = h_fn(n);
      Outcome a = same(eval_at_M(h, false), QtScalar::M() * qt_int(n));
      if (!a.pass) return a;
      return same(eval_at_M(h, true), -QtScalar::M() * h_qt(n));
    });
  for (int k = 0; k <= 3; ++k)
    for (int r = 0; r <= 3; ++r)
      for (bool first : {true, false}) {
        // Below -w the commutator has no source degree in the window.
        if (r - k < -w) continue;
        run.check(first ? "com-h-normal" : "com-h-reversed", {{"k", k}, {"r", r}, {"window", w}},
                  [&] { return check_com_h(k, r, w, first); });
      }

  GradedOperator d0 = d0_over_minus_M(w + 4);
  GradedOperator prev = mult_op(-e_fn(1), 1, w);
  for (int n = 0; n <= 3; ++n) {
    run.check("first-commutation", {{"n", n}, {"window", w}},
              [&] { return same(op_commutator(d0, prev), Q_op({n}, w), w); });
    prev = Q_op({n}, w);
  }
  for (const auto& F : {WeightSpec({1, 1}), WeightSpec({1, 2, 1}), WeightSpec({1, mpq_class(1, 2), 0, 3})})
    run.check("A_F-as-paths", {{"F", weight_json(F)}, {"window", w}}, [&] {
      GradedOperator r = mult_op(-e_fn(1), 1, w);
      for (int n = 0; n < F.degree(); ++n)
        if (F.coeff(n + 1) != 0) r = r + Q_op({n}, w).scaled(QtScalar(F.coeff(n + 1)));
      return same(A_F_op(F, w), r, w);
    });

  for (int l = 1; l <= 2; ++l)
    for (int s = 0; s <= 2; ++s)
      for (const auto& alpha : weak_compositions(s, l))
        run.check("D0-commutation", {{"alpha", alpha}, {"window", w}}, [&] {
          GradedOperator lhs = op_commutator(d0_over_minus_M(w + l), Q_op(alpha, w));
          GradedOperator rhs(l, w);
          for (int i = 0; i < l; ++i) {
            IntSeq a = alpha;
            ++a[i];
            rhs = rhs + Q_op(a, w);
          }
          return same(lhs, rhs, w);
        });

  auto ad = ad_D0_e1(2, w + 2);
  for (int m = 0; m <= 2; ++m)
    for (int l = 1; l <= 2; ++l)
      for (int s = 0; s <= 2; ++s)
        for (const auto& alpha : weak_compositions(s, l))
          run.check("commutation-P", {{"m", m}, {"alpha", alpha}, {"window", w}}, [&] {
            GradedOperator lhs = op_commutator(ad[m], Q_op(alpha, w + 1)).scaled(-QtScalar::M().inv());
            return same(lhs, commutation_P_rhs(m, alpha, w), w);
          });

  for (const IntSeq& alpha : std::vector<IntSeq>{{0, 0}, {1, 0}, {1, 1}, {2, 0}})
    run.check("second-commutation", {{"alpha", alpha}, {"window", w}}, [&] {
      int l = static_cast<int>(alpha.size());
      GradedOperator rhs(l, w);
      for (int i = 0; i < l; ++i) {
        IntSeq rest = alpha;
        rest.erase(rest.begin() + i);
        rhs = rhs + op_commutator(ad[alpha[i]], Q_sym_op(rest, w + 1));
      }
      return same(Q_sym_op(alpha, w), rhs.scaled(QtScalar::M().inv()), w);
    });
  return run.done();
}

const std::vector<WeightSpec>& a_weights() {
  static const std::vector<WeightSpec> ws{WeightSpec(), WeightSpec({1, 1}), WeightSpec({1, 2, 1})};
  return ws;
}

SuiteReport suite_a_operator(const VerifyOptions& o) {
  Runner run("a-operator");
  int w = std::min(3, o.window);
  for (const auto& F : a_weights())
    for (int l = 1; l <= 2; ++l)
      run.check("commutator-equals-pathsum", {{"F", weight_json(F)}, {"l", l}, {"window", w}}, [&] {
        return same(A_cached(F, l, w, AEngine::commutator), A_cached(F, l, w, AEngine::pathsum), w);
      });
  return run.done();
}

std::vector<std::pair<WeightSpec, WeightSpec>> random_pairs(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<WeightSpec, WeightSpec>> out;
  for (auto [d1, d2] : {std::pair{1, 2}, {2, 1}, {2, 2}}) {
    WeightSpec a = random_weight_spec(rng, d1);
    WeightSpec b = random_weight_spec(rng, d2);
    out.emplace_back(a, b);
  }
  return out;
}

SuiteReport suite_pde(const VerifyOptions& o) {
  Runner run("pde");
  for (const auto& [g1, g2] : random_pairs(o.seed))
    for (int l = 1; l <= 2 && l <= o.zmax; ++l) {
      Json p = {{"g1", weight_json(g1)}, {"g2", weight_json(g2)}, {"l", l}};
      int w = std::min(o.window, o.zmax - l);
      Json pc = p;
      pc["window"] = w;
      run.check("conjugation", pc, [&] { return same(conjugated_A(g1, g2, l, w), A_cached(g1, l, w), w); });
      run.check("pde", pde_params(g1, g2, l, o.zmax), [&] { return pde_outcome(g1, g2, l, o.zmax); });
    }
  return run.done();
}

SuiteReport suite_uniqueness(const VerifyOptions& o) {
  Runner run("uniqueness");
  for (const auto& [g1, g2] : random_pairs(o.seed))
    run.check("tau-from-dual-bases", {{"g1", weight_json(g1)}, {"g2", weight_json(g2)}, {"zmax", o.zmax}},
              [&] { return same(tau_from_equations(g1, g2, o.zmax), tau_build(g1, g2, o.zmax)); });
  return run.done();
}

SuiteReport suite_basis(const VerifyOptions&) {
  Runner run("basis");
  for (const auto& F : {WeightSpec(), WeightSpec({1, 1}), WeightSpec({1, 1, 1})})
    for (int n = 1; n <= 4; ++n) {
      Json p = {{"F", weight_json(F)}, {"n", n}};
      run.check("determinant-nonzero", p, [&]() -> Outcome {
        QtScalar d = basis_det(F, n);
        if (d.is_zero()) return {false, to_json(d), {}};
        return ok();
      });
      run.check("specialized-triangularity", p, [&]() -> Outcome {
        std::string r = specialized_basis_report(F, n);
        if (r.empty()) return ok();
        return {false, r, {}};
      });
    }
  return run.done();
}

SuiteReport suite_ext_delta(const VerifyOptions&) {
  Runner run("ext-delta");
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= n; ++k)
      for (int l = 0; l <= 2; ++l) {
        run.check("extended-delta", {{"n", n}, {"k", k}, {"l", l}}, [&] { return ext_delta_outcome(n, k, l); });
      }
  return run.done();
}

// The path side of the extended delta identity with sequences of length len.
SymFunc ext_delta_path_side(int n, int k, int l, int len) {
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
  return rhs;
}

SuiteReport suite_soundness(const VerifyOptions&) {
  Runner run("soundness");
  const int w = 2;
  run.check("d-exchange-without-omega", {{"a", 1}, {"b", 0}}, [&] {
    GradedOperator ab = op_compose(D_op(1, w + 1), D_op(0, w));
    GradedOperator ba = op_compose(D_op(0, w + 1), D_op(1, w));
    return detected(same(ab, ba, w));
  });
  run.check("d-exchange-perturbed", {{"a", 1}, {"b", 1}}, [&] {
    auto [l, r] = d_exchange_sides(1, 1, w);
    return detected(same(l, r + step_op(2, w).scaled(QtScalar::qt()), w));
  });
  run.check("engines-reordered-beta", {{"beta", IntSeq{1, -1}}}, [&] {
    return detected(same(R_block({1, -1}, 1, Engine::paths), R_block({-1, 1}, 1, Engine::voa)));
  });
  run.check("explicit-without-non-consecutive-factor", {{"betas", "((1),(1)) vs ((1,1))"}}, [&] {
    return detected(same(R_product_apply({{1}, {1}}, SymFunc::one(), Engine::increments), explicit_rhs({{1, 1}})));
  });
  run.check("explicit-perturbed", {{"betas", "((2,0,1))"}}, [&] {
    return detected(same(R_product_apply({{2, 0, 1}}, SymFunc::one(), Engine::increments),
                         explicit_rhs({{2, 0, 1}}) + e_fn(3).scaled(QtScalar::q())));
  });
  run.check("macdonald-perturbed-eigenvector", {{"lambda", Partition{2, 1}.parts()}}, [&] {
    SymFunc H = htilde(Partition{2, 1}) + SymFunc::term(Basis::s, {3}, QtScalar::q());
    QtScalar ev = QtScalar(1) - QtScalar::M() * b_stat(Partition{2, 1});
    return detected(same(apply_D(0, H), H.scaled(ev)));
  });
  run.check("com-h-swapped-integers", {{"k", 2}, {"r", 2}}, [&] {
    GradedOperator lhs = step_word({-2, 2}, w) - step_word({2, -2}, w);
    GradedOperator rhs(0, w);
    for (int i = 1; i <= 2; ++i) rhs = rhs + step_word({2 - i, -(2 - i)}, w).scaled(qt_int(i));
    return detected(same(lhs, rhs.scaled(-QtScalar::M()), w));
  });
  run.check("D0-commutation-missing-term", {{"alpha", IntSeq{1, 0}}}, [&] {
    GradedOperator lhs = op_commutator(d0_over_minus_M(w + 2), Q_op({1, 0}, w + 1));
    return detected(same(lhs, Q_op({2, 0}, w), w));
  });
  run.check("a-operator-mismatched-weights", {{"F", "1+h vs 1+2h"}}, [&] {
    return detected(same(A_cached(WeightSpec({1, 1}), 1, w, AEngine::commutator),
                         A_cached(WeightSpec({1, 2}), 1, w, AEngine::pathsum), w));
  });
  const WeightSpec g1({1, 1}), g2;
  run.check("conjugation-swapped-weights", {{"g1", "1,1"}, {"g2", "1"}}, [&] {
    return detected(same(conjugated_A(g1, g2, 1, w), A_cached(g2, 1, w), w));
  });
  run.check("pde-perturbed-tau", {{"g1", "1,1"}, {"g2", "1"}, {"zmax", 3}}, [&] {
    TensorSeries tau = tau_build(g1, g2, 3);
    tau.comp[2](0, 1) += QtScalar(1);
    return Outcome{!pde_holds(tau, g1, g2, 1), {}, {}};
  });
  run.check("pde-wrong-weights", {{"g1", "1,1"}, {"g2", "1"}, {"zmax", 3}}, [&] {
    return Outcome{!pde_holds(tau_build(g1, g2, 3), g1, WeightSpec({1, 2}), 1), {}, {}};
  });
  run.check("uniqueness-swapped-weights", {{"g1", "1,1"}, {"g2", "1"}}, [&] {
    return detected(same(tau_from_equations(g1, g2, 2), tau_build(g2, g1, 2)));
  });
  run.check("basis-vanishing-weight-sum", {{"F", "1,-1"}, {"n", 2}}, [&]() -> Outcome {
    if (specialized_basis_report(WeightSpec({1, -1}), 2).empty()) return {false, {{"undetected", true}}, {}};
    return ok();
  });
  run.check("ext-delta-short-sequences", {{"n", 3}, {"k", 2}, {"l", 1}, {"length", 2}}, [&] {
    return detected(same(ext_delta_sides(3, 2, 1).first, ext_delta_path_side(3, 2, 1, 2)));
  });
  run.check("ext-delta-shifted-l", {{"n", 3}, {"k", 1}, {"l", 1}}, [&] {
    return detected(same(ext_delta_sides(3, 1, 1).first, ext_delta_sides(3, 1, 2).second));
  });
  return run.done();
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"d-exchange", "engines",    "explicit", "macdonald",
                                              "commutation", "a-operator", "pde",      "uniqueness",
                                              "basis",       "ext-delta",  "soundness"};
  return names;
}

SuiteReport run_suite(const std::string& name, const VerifyOptions& o) {
  if (name == "d-exchange") return suite_d_exchange(o);
  if (name == "engines") return suite_engines(o);
  if (name == "explicit") return suite_explicit(o);
  if (name == "macdonald") return suite_macdonald(o);
  if (name == "commutation") return suite_commutation(o);
  if (name == "a-operator") return suite_a_operator(o);
  if (name == "pde") return suite_pde(o);
  if (name == "uniqueness") return suite_uniqueness(o);
  if (name == "basis") return suite_basis(o);
  if (name == "ext-delta") return suite_ext_delta(o);
  if (name == "soundness") return suite_soundness(o);
  throw std::invalid_argument("unknown suite: " + name);
}

CheckResult check_pde(const WeightSpec& g1, const WeightSpec& g2, int ell, int zmax) {
  Runner run("pde");
  run.check("pde", pde_params(g1, g2, ell, zmax), [&] { return pde_outcome(g1, g2, ell, zmax); });
  return std::move(run.done().checks.front());
}

CheckResult check_ext_delta(int n, int k, int l) {
  Runner run("ext-delta");
  run.check("extended-delta", {{"n", n}, {"k", k}, {"l", l}}, [&] { return ext_delta_outcome(n, k, l); });
  return std::move(run.done().checks.front());
}

Json to_json(const CheckResult& c, bool timing) {
  Json j;
  j["id"] = c.id;
  j["params"] = c.params;
  j["status"] = c.pass ? "pass" : "fail";
  if (timing) j["seconds"] = c.seconds;
  if (!c.pass) {
    j["lhs"] = c.lhs;
    j["rhs"] = c.rhs;
  }
  return j;
}

Json to_json(const SuiteReport& r, bool timing) {
  Json j;
  j["suite"] = r.suite;
  j["status"] = r.pass() ? "pass" : "fail";
  j["checks"] = static_cast<int>(r.checks.size());
  j["failures"] = r.failures();
  if (timing) j["seconds"] = r.seconds;
  Json cs = Json::array();
  for (const auto& c : r.checks) cs.push_back(to_json(c, timing));
  j["results"] = std::move(cs);
  return j;
}

}  // namespace qtp
