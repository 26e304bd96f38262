#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qtpaths/paths.hpp"
#include "qtpaths/weights.hpp"

namespace qtp {

// Truncated series sum_m z^m T_m(X, Y). comp[m](i, j) is the coefficient of
// p_{lambda_i}[X] p_{mu_j}[Y] with lambda_i, mu_j running over partitions(m).
struct TensorSeries {
  int zmax = 0;
  std::vector<QtMatrix> comp;

  friend bool operator==(const TensorSeries& a, const TensorSeries& b) {
    return a.zmax == b.zmax && a.comp == b.comp;
  }
  friend bool operator!=(const TensorSeries& a, const TensorSeries& b) { return !(a == b); }
};

// sum_lambda z^|lambda| H_lambda[X] H_lambda[Y] G(lambda) / norm_lambda with G = G1/G2.
TensorSeries tau_build(const WeightSpec& g1, const WeightSpec& g2, int zmax);

// A^(l)_F on source degrees <= window, cached per (F, l, window, engine).
const GradedOperator& A_cached(const WeightSpec& F, int ell, int window, AEngine engine = AEngine::commutator);

// z^l A^(l)_{G1}(X) tau = (A^(l)_{G2}(Y))^* tau, compared on every z-degree up to zmax.
bool pde_holds(const TensorSeries& tau, const WeightSpec& g1, const WeightSpec& g2, int ell);
bool pde_check(const WeightSpec& g1, const WeightSpec& g2, int ell, int zmax);

// Pi_G A^(l)_{G2} Pi_G^{-1} with G = G1/G2, on the given window.
GradedOperator conjugated_A(const WeightSpec& g1, const WeightSpec& g2, int ell, int window);
bool conjugation_check(const WeightSpec& g1, const WeightSpec& g2, int ell, int window);

// a_{F,lambda} = A^(lambda_1) ... A^(lambda_l) 1 for all lambda |- n, in partitions(n) order.
std::vector<SymFunc> a_family(const WeightSpec& F, int n);
SymFunc a_function(const WeightSpec& F, const Partition& lambda);
// Column j holds a_{F, lambda_j} in the given basis.
QtMatrix a_matrix(const WeightSpec& F, int n, Basis b);
QtScalar basis_det(const WeightSpec& F, int n);

// At q = t = 1 the e-basis matrix of the a_{F,lambda} is triangular for
// dominance with diagonal (-1)^n (sum_k a_k)^n. Returns an empty string when
// every part of that claim holds, otherwise a description of the first failure.
std::string specialized_basis_report(const WeightSpec& F, int n);

// tau rebuilt from the equations: sum z^|lambda| a_{G1,lambda}(X) b_{G2,lambda}(Y),
// with b the star-dual basis of a_{G2}.
TensorSeries tau_from_equations(const WeightSpec& g1, const WeightSpec& g2, int zmax);

// (-1)^n Delta_{h_l} Delta'_{e_{k-1}} e_n against the sum of R_beta 1 over
// beta = b + 1^{k+l} - (0, b'), b >= 0 of size n-k, b' in {0,1}^{k+l-1} of size l.
std::pair<SymFunc, SymFunc> ext_delta_sides(int n, int k, int l);
bool ext_delta_check(int n, int k, int l);

}  // namespace qtp
