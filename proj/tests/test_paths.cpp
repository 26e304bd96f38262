#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "gen.hpp"
#include "qtpaths/laurent.hpp"
#include "qtpaths/paths.hpp"
#include "qtpaths/steps.hpp"

using namespace qtp;

namespace {

const QtScalar qt = QtScalar::qt();

SymFunc e(std::initializer_list<int> parts, QtScalar c = QtScalar(1)) {
  return SymFunc::term(Basis::e, Partition(std::vector<int>(parts)), c);
}

// h_k[MX] written through the plethystic scaling of p_k, independent of the step blocks.
SymFunc h_MX(int k) { return pleth_diag(h_fn(k), scale_M); }
SymFunc skew_h(int k, const SymFunc& f) { return skew_hall(h_MX(k), f); }
SymFunc times_e(int k, const SymFunc& f) { return mul(e_fn(k), f); }

// All alternating step vectors of half-length l with |steps| <= top, filtered by
// membership and the height bound.
std::vector<AltPath> brute_paths(const IntSeq& beta, int d) {
  int l = static_cast<int>(beta.size());
  int top = seq_size(beta) + d;
  std::vector<AltPath> out;
  if (top < 0) return out;
  int span = top + 1;
  for (int b : beta) span += std::abs(b);
  IntSeq steps(2 * l, 0);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == 2 * l) {
      AltPath g{steps};
      if (!in_R(g, beta)) return;
      for (int y : g.heights())
        if (y > top) return;
      out.push_back(g);
      return;
    }
    for (int s = 0; s <= span; ++s) {
      steps[i] = i % 2 ? -s : s;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

SymFunc path_sum(const IntSeq& beta, const SymFunc& f, int d) {
  SymFunc r(Basis::p);
  for (const auto& g : enumerate_paths(beta, d)) r += path_op_apply(g, beta, f);
  return r;
}

IntSeq random_beta(int maxlen, int lo, int hi) {
  IntSeq b(testgen::uniform(1, maxlen));
  for (auto& x : b) x = testgen::uniform(lo, hi);
  return b;
}

}  // namespace

TEST_CASE("minimal path") {
  CHECK(gamma_of({1, -2, 1, 3}).steps == IntSeq{1, 0, 0, -2, 1, 0, 3, 0});
  CHECK(gamma_of({}).steps.empty());
  CHECK(gamma_of({2}).steps == IntSeq{2, 0});
  for (int k = 0; k < 20; ++k) {
    IntSeq b = random_beta(4, -3, 3);
    CHECK(in_R(gamma_of(b), b));
    CHECK(valley_weight(gamma_of(b), b) == QtScalar(1));
  }
}

TEST_CASE("membership and valley weight") {
  AltPath g{{3, -1, 0, -3, 2, 0, 3, -1}};
  IntSeq beta{1, -2, 1, 3};
  CHECK(in_R(g, beta));
  CHECK(valley_weight(g, beta) == qt.pow(2));
  CHECK_FALSE(in_R(AltPath{{1, 0}}, {2}));
  CHECK_FALSE(in_R(AltPath{{0, 1}}, {1}));
  CHECK_FALSE(in_R(AltPath{{0, -1, 1, 0}}, {0, 0}));
  CHECK_THROWS(valley_weight(AltPath{{1, 0}}, {2}));
}

TEST_CASE("path operator of a single path") {
  CHECK(path_op_apply(AltPath{{1, 0}}, {1}, SymFunc::one()) == -e_fn(1));
  AltPath g{{3, -1, 0, -3, 2, 0, 3, -1}};
  IntSeq beta{1, -2, 1, 3};
  SymFunc f = mul(e_fn(2), h_fn(2)) + SymFunc::term(Basis::p, {3, 1});
  SymFunc expect = times_e(3, skew_h(1, skew_h(3, times_e(2, times_e(3, skew_h(1, f))))));
  CHECK(path_op_apply(g, beta, f) == expect.scaled(qt.pow(2)));
  CHECK_THROWS(path_op_apply(AltPath{{1, 0}}, {2}, f));
}

TEST_CASE("a suffix dipping below -deg f annihilates") {
  SymFunc f = e_fn(2);
  CHECK(path_op_apply(AltPath{{3, -3}}, {0}, f).is_zero());
  CHECK_FALSE(path_op_apply(AltPath{{2, -2}}, {0}, f).is_zero());
}

TEST_CASE("path enumeration matches brute force") {
  for (const IntSeq& b : std::vector<IntSeq>{{1}, {-1}, {2, -1}, {1, -2, 1}, {0, 0}, {-1, 2}, {1, 1, -1}})
    for (int d = 0; d <= 2; ++d) CHECK(enumerate_paths(b, d) == brute_paths(b, d));
}

TEST_CASE("increments are the valley increments of the enumerated paths") {
  for (const IntSeq& b : std::vector<IntSeq>{{1, -2, 1}, {2, 0}, {-1, 1, 1}})
    for (int d = 0; d <= 2; ++d) {
      std::set<IntSeq> from_paths;
      for (const auto& g : enumerate_paths(b, d)) {
        IntSeq r;
        for (int j = 0; j < g.half_length(); ++j) r.push_back(g.steps[2 * j] + g.steps[2 * j + 1]);
        from_paths.insert(r);
      }
      auto inc = enumerate_increments(b, d);
      CHECK(std::set<IntSeq>(inc.begin(), inc.end()) == from_paths);
    }
}

TEST_CASE("R on 1 for one-part sequences") {
  for (int n = 0; n <= 5; ++n)
    for (Engine en : {Engine::paths, Engine::increments, Engine::voa})
      CHECK(R_apply({n}, SymFunc::one(), en) == e_fn(n).scaled(QtScalar(n % 2 ? -1 : 1)));
  CHECK(R_apply({-1}, SymFunc::one(), Engine::paths).is_zero());
  CHECK(R_apply({-1}, SymFunc::one(), Engine::increments).is_zero());
}

TEST_CASE("DFS path engine equals the plain sum of path operators") {
  std::vector<SymFunc> fs{SymFunc::one(), e_fn(1), SymFunc::term(Basis::p, {2}), mul(e_fn(1), h_fn(2))};
  for (const IntSeq& b : std::vector<IntSeq>{{1, -1}, {-1, 2}, {2, -2, 1}, {0, 1, -1}})
    for (const auto& f : fs) {
      int d = f.max_degree();
      CHECK(R_apply(b, f, Engine::paths) == path_sum(b, f, d));
    }
}

TEST_CASE("three engines agree on random sequences") {
  for (int k = 0; k < 25; ++k) {
    IntSeq b = random_beta(3, -2, 2);
    int d = testgen::uniform(0, 3);
    const auto& ps = partitions(d);
    SymFunc f = SymFunc::term(Basis::p, ps[testgen::uniform(0, static_cast<int>(ps.size()) - 1)]);
    SymFunc a = R_apply(b, f, Engine::paths);
    INFO(seq_string(b) << " on " << f.to_string());
    CHECK(a == R_apply(b, f, Engine::increments));
    CHECK(a == R_apply(b, f, Engine::voa));
  }
}

TEST_CASE("psi examples and bijection") {
  CHECK(psi({1, 2, 0, 1}) == IntSeq{1, 0, 2, 0});
  CHECK(psi_inv({1, 0, 2, 0}) == IntSeq{1, 2, 0, 1});
  for (int r = 0; r <= 4; ++r) {
    IntSeq b{1};
    b.insert(b.end(), r, 0);
    CHECK(psi(b) == IntSeq{r});
  }
  for (int r = 1; r <= 4; ++r) CHECK(psi({r}) == IntSeq(r, 0));
  CHECK_THROWS(psi({0, 1}));
  CHECK_THROWS(psi({-1}));
  CHECK_THROWS(psi_inv({}));
  for (int k = 0; k < 50; ++k) {
    IntSeq b = random_beta(4, 0, 3);
    if (b[0] == 0) b[0] = 1;
    IntSeq a = psi(b);
    CHECK(static_cast<int>(a.size()) == seq_size(b));
    CHECK(seq_size(a) == static_cast<int>(b.size()) - 1);
    CHECK(psi_inv(a) == b);
  }
}

TEST_CASE("Q on 1") {
  CHECK(Q_apply({0}, SymFunc::one(), Engine::increments) == -e_fn(1));
  CHECK(Q_apply({0, 0}, SymFunc::one(), Engine::increments) == e_fn(2));
  for (int k = 0; k < 10; ++k) {
    IntSeq a = random_beta(3, 0, 2);
    SymFunc f = mul(e_fn(testgen::uniform(0, 2)), h_fn(1));
    SymFunc r = Q_apply(a, f, Engine::increments);
    if (!r.is_zero()) CHECK(r.max_degree() == f.max_degree() + static_cast<int>(a.size()));
    CHECK(r == r.homogeneous_part(f.max_degree() + static_cast<int>(a.size())));
  }
}

TEST_CASE("products of path operators") {
  SymFunc one = SymFunc::one();
  SymFunc expect = apply_D(1, apply_D(1, one));
  for (Engine en : {Engine::paths, Engine::increments, Engine::voa})
    CHECK(R_product_apply({{1}, {1}}, one, en) == expect);
  CHECK(R_product_apply({{1, -1}}, e_fn(2), Engine::paths) == R_apply({1, -1}, e_fn(2), Engine::paths));
  for (int k = 0; k < 10; ++k) {
    std::vector<IntSeq> bs{random_beta(2, -2, 2), random_beta(2, -2, 2)};
    SymFunc f = SymFunc::term(Basis::p, {1});
    CHECK(R_product_apply(bs, f, Engine::increments) == R_product_apply(bs, f, Engine::voa));
  }
}

TEST_CASE("non-consecutive indices") {
  using P = std::pair<int, int>;
  CHECK(non_consecutive_indices({{2, 0, 0}, {3}}) == std::vector<P>{{1, 3}, {1, 4}, {2, 4}, {3, 4}});
  CHECK(non_consecutive_indices({{1, 1}}).empty());
  CHECK(non_consecutive_indices({{1}, {1}}) == std::vector<P>{{1, 2}});
}

TEST_CASE("R_beta as a graded operator") {
  GradedOperator r = R_op({1, -1}, 3, Engine::increments);
  CHECK(op_equal(r, R_op({1, -1}, 3, Engine::paths), 3));
  CHECK(op_equal(r, voa_operator({{1, -1}}, 3), 3));
  SymFunc f = SymFunc::term(Basis::p, {2, 1});
  CHECK(r.apply(f) == R_apply({1, -1}, f, Engine::increments));
}

TEST_CASE("D_0 commutator with -e_1 gives Q_0") {
  GradedOperator d0 = D_op(0, 4);
  GradedOperator e1 = mult_op(-e_fn(1), 1, 4);
  GradedOperator lhs = op_commutator(d0, e1).scaled(-QtScalar::M().inv());
  CHECK(op_equal(lhs, Q_op({0}, 3), 3));
  GradedOperator lhs2 = op_commutator(d0, Q_op({0}, 3)).scaled(-QtScalar::M().inv());
  CHECK(op_equal(lhs2, Q_op({1}, 3), 3));
}

TEST_CASE("A_F^(l) for F = 1") {
  WeightSpec one;
  for (int n = 1; n <= 2; ++n) {
    GradedOperator a = A_op(one, n, 2, AEngine::commutator);
    CHECK(a.apply(SymFunc::one()) == e_fn(n).scaled(QtScalar(n % 2 ? -1 : 1)));
    CHECK(op_equal(a, A_op(one, n, 2, AEngine::pathsum), 2));
  }
}
