#include <algorithm>

#include <catch2/catch_amalgamated.hpp>

#include "gen.hpp"
#include "qtpaths/steps.hpp"

using namespace qtp;

namespace {

SymFunc p(Partition la, QtScalar c = QtScalar(1)) { return SymFunc::term(Basis::p, la, c); }

GradedOperator random_op(int shift, int window) {
  GradedOperator r(shift, window);
  for (int d = r.min_source(); d <= window; ++d) {
    QtMatrix m(partition_count(d + shift), partition_count(d));
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j)
        if (testgen::uniform(0, 1)) m(i, j) = QtScalar(testgen::uniform(-2, 2)) + QtScalar(testgen::uniform(0, 1)) * QtScalar::t();
    r.set_block(d, m);
  }
  return r;
}

SymFunc random_fn(int d) {
  SymFunc f(Basis::p);
  for (const auto& la : partitions(d)) f.add(la, QtScalar(testgen::uniform(-3, 3)) + QtScalar::q() * QtScalar(testgen::uniform(-1, 1)));
  return f;
}

}  // namespace

TEST_CASE("materializing actions") {
  auto e1 = SymFunc::term(Basis::e, {1}, QtScalar(-1));
  GradedOperator m = op_from_action([&](const SymFunc& f) { return mul(e1, f); }, 1, 3);
  CHECK(m.apply(p({2, 1})) == mul(e1, p({2, 1})));
  CHECK(op_equal(op_from_action([](const SymFunc& f) { return f; }, 0, 3), GradedOperator::identity(3), 3));
  GradedOperator d0 = D_op(0, 2);
  REQUIRE(d0.block(1) != nullptr);
  CHECK((*d0.block(1))(0, 0) == QtScalar(1) - QtScalar::M());
  CHECK_THROWS(op_from_action([](const SymFunc& f) { return mul(p({1}), f); }, 0, 2));
}

TEST_CASE("re-materializing from apply reproduces blocks") {
  GradedOperator a = random_op(1, 3);
  GradedOperator b = op_from_action([&](const SymFunc& f) { return a.apply(f); }, 1, 3);
  CHECK(op_equal(a, b, 3));
}

TEST_CASE("commutators") {
  GradedOperator d0 = D_op(0, 4);
  CHECK(op_equal(op_commutator(d0, d0), GradedOperator(0, 4), 4));
  for (int i = 0; i < 5; ++i) {
    GradedOperator a = random_op(1, 4), b = random_op(-1, 4);
    CHECK(op_equal(op_commutator(a, b), -op_commutator(b, a), 3));
  }
}

TEST_CASE("Jacobi identity") {
  for (int i = 0; i < 3; ++i) {
    GradedOperator a = random_op(1, 5), b = random_op(0, 5), c = random_op(-1, 5);
    GradedOperator j = op_commutator(a, op_commutator(b, c)) + op_commutator(b, op_commutator(c, a)) +
                       op_commutator(c, op_commutator(a, b));
    CHECK(op_equal(j, GradedOperator(0, j.window()), j.window()));
  }
}

TEST_CASE("window bookkeeping") {
  GradedOperator a = random_op(2, 3), b = random_op(1, 4);
  GradedOperator c = op_compose(a, b);
  CHECK(c.window() == 2);
  CHECK_THROWS_AS(op_equal(c, c, 3), std::out_of_range);
  CHECK_THROWS_AS(op_equal(a, b, 2), std::invalid_argument);
  CHECK_THROWS_AS(a.apply(p({1, 1, 1, 1})), std::out_of_range);
  CHECK(op_equal(a + (-a), GradedOperator(2, 3), 3));
}

TEST_CASE("D_1 is not multiplication by -e_1") {
  auto e1 = SymFunc::term(Basis::e, {1}, QtScalar(-1));
  GradedOperator m = op_from_action([&](const SymFunc& f) { return mul(e1, f); }, 1, 2);
  CHECK_FALSE(op_equal(D_op(1, 2), m, 1));
  CHECK(op_equal(D_op(1, 0), m.restricted(0), 0));
}

TEST_CASE("star adjoint") {
  GradedOperator mp1 = op_from_action([](const SymFunc& f) { return mul(p({1}), f); }, 1, 0);
  GradedOperator adj = op_star_adjoint(mp1);
  CHECK(star(mp1.apply(SymFunc::one()), p({1})) == -QtScalar::M());
  CHECK(star(SymFunc::one(), adj.apply(p({1}))) == -QtScalar::M());
  CHECK(op_equal(op_star_adjoint(GradedOperator::identity(3)), GradedOperator::identity(3), 3));
  for (int k : {-1, 0, 2}) {
    GradedOperator a = random_op(k, 4);
    CHECK(op_equal(op_star_adjoint(op_star_adjoint(a)), a, 4));
    GradedOperator as = op_star_adjoint(a);
    for (int d = a.min_source(); d <= 4; ++d) {
      SymFunc f = random_fn(d), g = random_fn(d + k);
      CHECK(star(a.apply(f), g) == star(f, as.apply(g)));
    }
  }
}

TEST_CASE("adjoint contract on D operators") {
  for (int k = -2; k <= 2; ++k) {
    GradedOperator a = D_op(k, 3);
    GradedOperator as = op_star_adjoint(a);
    for (int d = a.min_source(); d <= 3; ++d) {
      SymFunc f = random_fn(d), g = random_fn(d + k);
      CHECK(star(a.apply(f), g) == star(f, as.apply(g)));
    }
  }
}

namespace {

QtScalar leibniz(const QtMatrix& m) {
  int n = m.rows();
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  QtScalar r;
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inv += perm[i] > perm[j];
    QtScalar x(inv % 2 ? -1 : 1);
    for (int i = 0; i < n; ++i) x *= m(i, perm[i]);
    r += x;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return r;
}

}  // namespace

TEST_CASE("determinant against the Leibniz formula") {
  for (int k = 0; k < 20; ++k) {
    int n = testgen::uniform(1, 4);
    QtMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
      IntPoly2 d = testgen::nonzero_poly();
      for (int j = 0; j < n; ++j)
        if (testgen::uniform(0, 3)) m(i, j) = QtScalar::fraction(testgen::small_poly(), d);
    }
    CHECK(determinant(m) == leibniz(m));
  }
  QtMatrix sing(2, 2);
  sing(0, 0) = QtScalar::q();
  sing(0, 1) = QtScalar::t();
  sing(1, 0) = QtScalar::q() * QtScalar::M();
  sing(1, 1) = QtScalar::t() * QtScalar::M();
  CHECK(determinant(sing).is_zero());
  CHECK(determinant(QtMatrix(0, 0)) == QtScalar(1));
}
