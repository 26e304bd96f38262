#include <catch2/catch_amalgamated.hpp>

#include "gen.hpp"
#include "qtpaths/laurent.hpp"
#include "qtpaths/steps.hpp"

using namespace qtp;

namespace {

const QtScalar q = QtScalar::q();
const QtScalar t = QtScalar::t();
const QtScalar qt = QtScalar::qt();

QtScalar ratio_coeff(const LaurentSeries& s, int a) { return s.coeff({-a, a}); }

LaurentSeries linear(int a, const QtScalar& c) {
  // 1 - c (z_2/z_1)^a in two variables
  return LaurentSeries::constant(2, QtScalar(1)) + LaurentSeries::monomial({-a, a}, -c);
}

std::vector<IntSeq> random_betas(int max_total_len, int lo, int hi) {
  std::vector<IntSeq> bs;
  int len = testgen::uniform(1, max_total_len);
  while (len > 0) {
    int k = testgen::uniform(1, len);
    IntSeq b(k);
    for (auto& x : b) x = testgen::uniform(lo, hi);
    bs.push_back(b);
    len -= k;
  }
  return bs;
}

}  // namespace

TEST_CASE("geometric factor") {
  LaurentSeries g = geom_factor(qt, 0, 1, 4, 2);
  CHECK(ratio_coeff(g, 2) == qt * qt);
  CHECK(ratio_coeff(g, 4) == qt.pow(4));
  CHECK(ratio_coeff(g, 5).is_zero());
  CHECK(geom_factor(QtScalar(), 0, 1, 3, 2) == LaurentSeries::constant(2, QtScalar(1)));
  CHECK(geom_factor(qt, 0, 1, 0, 2) == LaurentSeries::constant(2, QtScalar(1)));
  CHECK_THROWS(geom_factor(qt, 1, 0, 3, 2));
}

TEST_CASE("omega factor") {
  const int T = 6;
  LaurentSeries w = omega_factor(0, 1, T, 2);
  CHECK(ratio_coeff(w, 0) == QtScalar(1));
  CHECK(ratio_coeff(w, 1) == -QtScalar::M());
  // Multiply back by (1-qx)(1-tx)/((1-x)(1-qtx)).
  LaurentSeries back = w * linear(1, q) * linear(1, t) * geom_factor(QtScalar(1), 0, 1, T, 2) *
                       geom_factor(qt, 0, 1, T, 2);
  for (int a = 0; a <= T; ++a) CHECK(ratio_coeff(back, a) == QtScalar(a == 0 ? 1 : 0));
}

TEST_CASE("explicit formula on one-part sequences") {
  CHECK(explicit_rhs({{1}}) == -e_fn(1));
  for (int n = 0; n <= 4; ++n) CHECK(explicit_rhs({{n}}) == e_fn(n).scaled(QtScalar(n % 2 ? -1 : 1)));
  CHECK(explicit_rhs({{-1}}).is_zero());
}

TEST_CASE("explicit formula against composed path operators") {
  CHECK(explicit_rhs({{1, 1}}) == R_apply({1, 1}, SymFunc::one(), Engine::increments));
  CHECK(explicit_rhs({{1, 0}}) == R_apply({1, 0}, SymFunc::one(), Engine::increments));
  for (int k = 0; k < 20; ++k) {
    auto bs = random_betas(4, -1, 2);
    int n = 0;
    for (const auto& b : bs) n += seq_size(b);
    if (n < 0 || n > 4) continue;
    CHECK(explicit_rhs(bs) == R_product_apply(bs, SymFunc::one(), Engine::increments));
  }
}

TEST_CASE("ratio cap: default, +2 and uncapped agree") {
  for (const auto& bs : std::vector<std::vector<IntSeq>>{{{2, -1, 1}}, {{1}, {0, 1}}, {{2, 0, 0}, {1}}}) {
    int T = default_ratio_cap(bs);
    SymFunc exact = explicit_rhs(bs);
    CHECK(explicit_rhs(bs, T) == exact);
    CHECK(explicit_rhs(bs, T + 2) == exact);
  }
}

TEST_CASE("expansion coefficients") {
  CHECK(expansion_coeff({{1}}, Partition{1}, Side::schur) == QtScalar(1));
  CHECK(expansion_coeff({{2}}, Partition{1, 1}, Side::schur) == QtScalar(1));
  CHECK(expansion_coeff({{2}}, Partition{2}, Side::schur).is_zero());
  CHECK_THROWS(expansion_coeff({{2}}, Partition{1}, Side::schur));
  for (const auto& bs : std::vector<std::vector<IntSeq>>{{{1, 1}}, {{2, -1, 1}}, {{1}, {1, 1}}, {{0, 3}}}) {
    SymFunc r = explicit_rhs(bs);
    int n = 0;
    for (const auto& b : bs) n += seq_size(b);
    QtScalar sign(n % 2 ? -1 : 1);
    SymFunc rs = convert(r, Basis::s), rm = convert(r, Basis::m), re = convert(r, Basis::e);
    for (const auto& la : partitions(n)) {
      CHECK(expansion_coeff(bs, la, Side::schur) == sign * rs.coeff(la));
      CHECK(expansion_coeff(bs, la, Side::monomial) == sign * rm.coeff(la));
      CHECK(expansion_coeff(bs, la, Side::elementary) == sign * re.coeff(la));
    }
  }
}

TEST_CASE("vertex operator engine") {
  SymFunc f = SymFunc::term(Basis::p, {2, 1}) + e_fn(1);
  for (int k = -3; k <= 3; ++k) CHECK(voa_apply({{k}}, f) == apply_D(k, f));
  CHECK(voa_apply({{1}, {1}}, SymFunc::one()) == apply_D(1, apply_D(1, SymFunc::one())));
  for (int k = 0; k < 15; ++k) {
    auto bs = random_betas(3, -2, 2);
    SymFunc g = SymFunc::term(Basis::p, partitions(2)[testgen::uniform(0, 1)]);
    CHECK(voa_apply(bs, g) == R_product_apply(bs, g, Engine::increments));
  }
}

TEST_CASE("exchange relation for D(z)") {
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b) {
      if (a + b < -2) continue;
      auto [l, r] = d_exchange_sides(a, b, 2);
      CHECK(op_equal(l, r, 2));
    }
  // The relation is not a plain commutation.
  GradedOperator ab = op_compose(D_op(1, 3), D_op(0, 2));
  GradedOperator ba = op_compose(D_op(0, 3), D_op(1, 2));
  CHECK_FALSE(op_equal(ab, ba, 2));
}
