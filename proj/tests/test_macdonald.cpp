#include <catch2/catch_amalgamated.hpp>

#include "qtpaths/macdonald.hpp"
#include "qtpaths/steps.hpp"

using namespace qtp;

namespace {
const QtScalar q = QtScalar::q();
const QtScalar t = QtScalar::t();
const QtScalar one(1);
SymFunc s(Partition la, QtScalar c = QtScalar(1)) { return SymFunc::term(Basis::s, la, c); }
}  // namespace

TEST_CASE("cell statistic") {
  CHECK(b_stat(Partition()).is_zero());
  CHECK(b_stat({1}) == one);
  CHECK(b_stat({2, 1}) == one + q + t);
}

TEST_CASE("small Macdonald polynomials") {
  CHECK(htilde({1}) == s({1}));
  CHECK(mac_basis(1).eigenvalue[0] == one - QtScalar::M());
  CHECK(htilde({2}).terms() == (s({2}) + s({1, 1}, q)).terms());
  CHECK(htilde({1, 1}).terms() == (s({2}) + s({1, 1}, t)).terms());
  CHECK(mac_basis(1).norm[0] == -QtScalar::M());
  CHECK(star(htilde({2}), htilde({1, 1})).is_zero());
}

TEST_CASE("eigen property, orthogonality and normalization up to degree 5") {
  for (int n = 0; n <= 5; ++n) {
    const MacData& md = mac_basis(n);
    for (std::size_t i = 0; i < md.lambdas.size(); ++i) {
      const SymFunc& h = md.htilde[i];
      CHECK(apply_D(0, h) == h.scaled(one - QtScalar::M() * b_stat(md.lambdas[i])));
      CHECK(h.coeff(Partition::from_unsorted({n})) == one);
      for (std::size_t j = 0; j < md.lambdas.size(); ++j) {
        QtScalar st = star(h, md.htilde[j]);
        CHECK(st == (i == j ? md.norm[i] : QtScalar()));
      }
    }
  }
}

TEST_CASE("Pieri coefficients") {
  auto c0 = pieri_coeffs(Partition());
  CHECK(c0.size() == 1);
  CHECK(c0[Partition{1}] == QtScalar(-1));
  auto c1 = pieri_coeffs({1});
  CHECK(c1[Partition{2}] == (t - one) / (q - t));
  CHECK(c1[Partition{1, 1}] == (one - q) / (q - t));
  CHECK(c1[Partition{2}] + c1[Partition{1, 1}] == QtScalar(-1));
  for (int n = 0; n <= 4; ++n)
    for (const auto& mu : partitions(n)) CHECK_NOTHROW(pieri_coeffs(mu));
}

TEST_CASE("Cauchy identity") {
  for (int n = 0; n <= 4; ++n) {
    const MacData& md = mac_basis(n);
    int N = static_cast<int>(md.lambdas.size());
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b) {
        QtScalar lhs;
        for (int l = 0; l < N; ++l) lhs += md.to_p(a, l) * md.to_p(b, l) / md.norm[l];
        QtScalar rhs = a == b ? star_norm_p(md.lambdas[a]).inv() : QtScalar();
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("expansion in the Macdonald basis") {
  auto c = expand_in_mac(s({1}));
  CHECK(c.size() == 1);
  CHECK(c[Partition{1}] == one);
  SymFunc e2 = SymFunc::term(Basis::e, {2});
  SymFunc back(Basis::s);
  for (const auto& [la, x] : expand_in_mac(e2)) back += htilde(la).scaled(x);
  CHECK(back == e2);
  CHECK(expand_in_mac(SymFunc()).empty());
  CHECK(convert(convert(e2, Basis::Htilde), Basis::e).terms() == e2.terms());
}

TEST_CASE("diagonal operators") {
  CHECK(op_equal(delta_op(DeltaKind::e, 0, 3), GradedOperator::identity(3), 3));
  GradedOperator de1 = delta_op(DeltaKind::e, 1, 2);
  CHECK(de1.apply(htilde({2})) == htilde({2}).scaled(one + q));
  GradedOperator dh1 = delta_op(DeltaKind::h, 1, 2);
  CHECK(dh1.apply(htilde({1, 1})) == htilde({1, 1}).scaled(one + t));
  CHECK(op_equal(delta_op(DeltaKind::e_prime, 1, 3), de1.restricted(2) - GradedOperator::identity(2), 2));
}

TEST_CASE("Pi operators") {
  WeightSpec one_w;
  WeightSpec g({1, 1});
  CHECK(op_equal(pi_op(one_w, one_w, 3), GradedOperator::identity(3), 3));
  CHECK(pi_eigenvalue(g, one_w, {1}) == QtScalar(2));
  CHECK(pi_eigenvalue(g, one_w, {2}) == QtScalar(2) * (one + q));
  WeightSpec bad({1, -1});
  CHECK_THROWS_WITH(pi_eigenvalue(one_w, bad, {1}), Catch::Matchers::ContainsSubstring("(1,1)"));
}
