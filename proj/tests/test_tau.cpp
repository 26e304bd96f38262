#include <catch2/catch_amalgamated.hpp>

#include "gen.hpp"
#include "qtpaths/macdonald.hpp"
#include "qtpaths/tau.hpp"

using namespace qtp;

namespace {

WeightSpec ws(std::vector<mpq_class> a) { return WeightSpec(std::move(a)); }

const WeightSpec one;
const WeightSpec one_plus = ws({1, 1});

}  // namespace

TEST_CASE("tau low-degree coefficients") {
  TensorSeries tau = tau_build(one, one, 1);
  REQUIRE(tau.comp.size() == 2);
  CHECK(tau.comp[0](0, 0) == QtScalar(1));
  CHECK(tau.comp[1](0, 0) == -QtScalar::M().inv());
  TensorSeries t2 = tau_build(one_plus, one, 1);
  CHECK(t2.comp[0] == tau.comp[0]);
  CHECK(t2.comp[1] == tau.comp[1].scaled(QtScalar(2)));
}

TEST_CASE("tau is the Cauchy kernel for G = 1") {
  // sum_lambda H(X) H(Y) / norm is the star reproducing kernel: p_mu(X) p_mu(Y) / star_norm_p(mu).
  TensorSeries tau = tau_build(one, one, 3);
  for (int m = 0; m <= 3; ++m) {
    const auto& ps = partitions(m);
    for (int i = 0; i < static_cast<int>(ps.size()); ++i)
      for (int j = 0; j < static_cast<int>(ps.size()); ++j)
        CHECK(tau.comp[m](i, j) == (i == j ? star_norm_p(ps[i]).inv() : QtScalar()));
  }
}

TEST_CASE("tau satisfies the paired equations") {
  CHECK(pde_check(one_plus, one, 1, 3));
  CHECK(pde_check(one, one_plus, 1, 3));
  CHECK(pde_check(one_plus, ws({1, 0, 2}), 2, 3));
  TensorSeries tau = tau_build(one_plus, one, 3);
  tau.comp[2](0, 1) += QtScalar(1);
  CHECK_FALSE(pde_holds(tau, one_plus, one, 1));
  CHECK_THROWS(pde_check(one, one, 4, 3));
}

TEST_CASE("conjugation by Pi_G") {
  CHECK(conjugation_check(one_plus, one, 1, 3));
  CHECK(conjugation_check(ws({1, mpq_class(1, 2)}), one_plus, 2, 2));
  CHECK_FALSE(op_equal(conjugated_A(one_plus, one, 1, 3), A_cached(one, 1, 3), 3));
}

TEST_CASE("a-family") {
  CHECK(a_function(one, Partition{1}) == -e_fn(1));
  CHECK_FALSE(basis_det(one, 2).is_zero());
  for (const auto& F : {one, one_plus, ws({1, 1, 1})})
    for (int n = 1; n <= 3; ++n) {
      INFO(F.to_string() << " n=" << n);
      CHECK(specialized_basis_report(F, n).empty());
    }
}

TEST_CASE("tau from the equations") {
  for (const auto& [g1, g2] : std::vector<std::pair<WeightSpec, WeightSpec>>{
           {one, one}, {one_plus, one}, {ws({1, 2}), ws({1, mpq_class(-1, 3)})}})
    CHECK(tau_from_equations(g1, g2, 3) == tau_build(g1, g2, 3));
}

TEST_CASE("extended delta") {
  CHECK(ext_delta_sides(1, 1, 0).second == -e_fn(1));
  for (auto [n, k, l] : std::vector<std::tuple<int, int, int>>{{1, 1, 0}, {2, 1, 0}, {2, 2, 0}, {2, 1, 1}, {3, 2, 1}}) {
    INFO(n << " " << k << " " << l);
    auto [a, b] = ext_delta_sides(n, k, l);
    CHECK(a == b);
  }
  CHECK_THROWS(ext_delta_sides(2, 0, 0));
  CHECK_THROWS(ext_delta_sides(2, 3, 0));
}
