#include <catch2/catch_amalgamated.hpp>

#include "gen.hpp"
#include "qtpaths/symfunc.hpp"

using namespace qtp;

namespace {

const QtScalar q = QtScalar::q();
const QtScalar t = QtScalar::t();

SymFunc term(Basis b, Partition la, QtScalar c = QtScalar(1)) { return SymFunc::term(b, la, c); }

QtScalar half() { return QtScalar::rational(Integer(1), Integer(2)); }

SymFunc random_homogeneous(Basis b, int d) {
  SymFunc f(b);
  for (const auto& la : partitions(d))
    if (testgen::uniform(0, 2)) f.add(la, QtScalar(testgen::uniform(-3, 3)) + QtScalar(testgen::uniform(-1, 1)) * q);
  return f;
}

}  // namespace

TEST_CASE("partition basics") {
  Partition la{3, 1, 1};
  CHECK(la.size() == 5);
  CHECK(la.z() == Integer(6));
  CHECK(la.transpose() == Partition{3, 1, 1});
  CHECK(Partition{2, 1}.z() == Integer(2));
  CHECK(Partition{4, 2}.transpose() == Partition{2, 2, 1, 1});
  CHECK_THROWS(Partition{1, 2});
  CHECK(partition_count(6) == 11);
  CHECK(partitions(3)[0] == Partition{3});
  CHECK(partition_index(Partition{1, 1, 1}) == 2);
}

TEST_CASE("dominance is a partial order") {
  for (int n = 1; n <= 7; ++n) {
    const auto& ps = partitions(n);
    for (const auto& a : ps) {
      CHECK(dominates(a, a));
      for (const auto& b : ps) {
        if (a != b && dominates(a, b)) CHECK_FALSE(dominates(b, a));
        if (!dominates(a, b)) continue;
        for (const auto& c : ps)
          if (dominates(b, c)) CHECK(dominates(a, c));
      }
    }
  }
}

TEST_CASE("basis conversions") {
  SymFunc e2p = convert(term(Basis::e, {2}), Basis::p);
  SymFunc expect(Basis::p);
  expect.add({1, 1}, half());
  expect.add({2}, -half());
  CHECK(e2p.terms() == expect.terms());
  CHECK(convert(term(Basis::s, {1, 1}), Basis::e).terms() == term(Basis::e, {2}).terms());
  SymFunc h2m = convert(term(Basis::h, {2}), Basis::m);
  CHECK(h2m.terms() == (term(Basis::m, {2}) + term(Basis::m, {1, 1})).terms());
  // s_(2,1) = m_(2,1) + 2 m_(1,1,1)
  CHECK(convert(term(Basis::s, {2, 1}), Basis::m).terms() ==
        (term(Basis::m, {2, 1}) + term(Basis::m, {1, 1, 1}, QtScalar(2))).terms());
}

TEST_CASE("basis round trips up to degree 6") {
  std::vector<Basis> bases{Basis::p, Basis::m, Basis::e, Basis::h, Basis::s};
  for (int d = 0; d <= 6; ++d)
    for (Basis a : bases) {
      SymFunc f = random_homogeneous(a, d);
      for (Basis b : bases) {
        SymFunc back = convert(convert(f, b), a);
        CHECK(back.terms() == f.terms());
      }
    }
}

TEST_CASE("products") {
  CHECK(mul(term(Basis::p, {1}), term(Basis::p, {1})).terms() == term(Basis::p, {1, 1}).terms());
  CHECK(mul(term(Basis::e, {1}), SymFunc::one(Basis::e)) == term(Basis::e, {1}));
  CHECK(convert(mul(term(Basis::e, {1}), term(Basis::e, {1})), Basis::m).terms() ==
        (term(Basis::m, {2}) + term(Basis::m, {1, 1}, QtScalar(2))).terms());
}

TEST_CASE("Hall and star products") {
  CHECK(hall(term(Basis::p, {2, 1}), term(Basis::p, {2, 1})) == QtScalar(2));
  CHECK(hall(term(Basis::m, {2}), term(Basis::h, {2})) == QtScalar(1));
  CHECK(hall(term(Basis::p, {1}), term(Basis::p, {2})).is_zero());
  CHECK(star(term(Basis::p, {1}), term(Basis::p, {1})) == -QtScalar::M());
  CHECK(star(term(Basis::p, {1}), term(Basis::p, {2})).is_zero());
  CHECK(star(term(Basis::s, {1}), term(Basis::s, {1})) == -QtScalar::M());
  for (int n = 0; n <= 5; ++n)
    for (const auto& mu : partitions(n)) {
      // z_mu p_mu[-M] computed independently through the plethystic scaling
      SymFunc pm = pleth_diag(term(Basis::p, mu), scale_minus_M);
      CHECK(star(term(Basis::p, mu), term(Basis::p, mu)) == QtScalar(mu.z()) * pm.coeff(mu));
    }
}

TEST_CASE("Hall duality of m and h, s orthonormal") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& a : partitions(n))
      for (const auto& b : partitions(n)) {
        QtScalar d(a == b ? 1 : 0);
        CHECK(hall(term(Basis::m, a), term(Basis::h, b)) == d);
        CHECK(hall(term(Basis::s, a), term(Basis::s, b)) == d);
      }
}

TEST_CASE("plethystic scalings") {
  SymFunc f = pleth_diag(term(Basis::p, {2}), scale_M);
  CHECK(f.coeff({2}) == (QtScalar(1) - q * q) * (QtScalar(1) - t * t));
  SymFunc g = random_homogeneous(Basis::s, 3);
  CHECK(pleth_diag(g, [](int) { return QtScalar(1); }) == g);
  CHECK(pleth_diag(term(Basis::h, {2}), [](int) { return QtScalar(-1); }) == term(Basis::e, {2}));
}

TEST_CASE("skewing") {
  CHECK(skew_hall(term(Basis::h, {1}), term(Basis::p, {1, 1})).terms() == term(Basis::p, {1}, QtScalar(2)).terms());
  CHECK(skew_hall(term(Basis::h, {2}), term(Basis::e, {1})).is_zero());
  SymFunc hM = pleth_diag(term(Basis::h, {1}), scale_M);
  CHECK(skew_hall(hM, term(Basis::p, {1})) == SymFunc::one().scaled(QtScalar::M()));
}

TEST_CASE("skewing is adjoint to multiplication") {
  for (int i = 0; i < 30; ++i) {
    int dg = testgen::uniform(0, 2), dh = testgen::uniform(0, 3 - dg);
    SymFunc g = random_homogeneous(Basis::s, dg);
    SymFunc h = random_homogeneous(Basis::h, dh);
    SymFunc f = random_homogeneous(Basis::e, dg + dh);
    CHECK(hall(skew_hall(g, f), h) == hall(f, mul(g, h)));
  }
}

TEST_CASE("monomial evaluation") {
  std::vector<LaurentMonomial> z12{{QtScalar(1), {1, 0}}, {QtScalar(1), {0, 1}}};
  auto r = eval_monomials(term(Basis::e, {2}), z12);
  CHECK(r == LaurentPoly<QtScalar>::monomial({1, 1}, QtScalar(1)));
  std::vector<LaurentMonomial> z3{{QtScalar(1), {1, 0, 0}}, {QtScalar(1), {0, 1, 0}}, {QtScalar(1), {0, 0, 1}}};
  auto s1 = eval_monomials(term(Basis::s, {1}), z3);
  CHECK(s1.terms().size() == 3);
  CHECK(s1.coeff({0, 1, 0}) == QtScalar(1));
  std::vector<LaurentMonomial> inv{{QtScalar(1), {0, -1, 0}}, {QtScalar(1), {0, 0, -1}}};
  auto e1 = eval_monomials(term(Basis::e, {1}), inv);
  CHECK(e1 == LaurentPoly<QtScalar>::monomial({0, -1, 0}, QtScalar(1)) +
                  LaurentPoly<QtScalar>::monomial({0, 0, -1}, QtScalar(1)));
}

TEST_CASE("degree cap is enforced") {
  int cap = degree_cap();
  set_degree_cap(3);
  CHECK_THROWS_AS(convert(term(Basis::s, {4}), Basis::p), std::out_of_range);
  set_degree_cap(cap);
}
