#pragma once

#include <map>
#include <vector>

#include "qtpaths/linop.hpp"
#include "qtpaths/symfunc.hpp"
#include "qtpaths/weights.hpp"

namespace qtp {

// Modified Macdonald polynomials of one degree, indexed like partitions(n).
struct MacData {
  int n = 0;
  std::vector<Partition> lambdas;
  std::vector<SymFunc> htilde;  // s-basis, coefficient of s_(n) is 1
  std::vector<QtScalar> eigenvalue;  // of D_0: 1 - M B_lambda
  std::vector<QtScalar> norm;        // star(H_lambda, H_lambda)
  std::vector<QtScalar> b;           // B_lambda
  QtMatrix to_p;    // column j: H_lambda_j in the p-basis
  QtMatrix from_p;  // inverse of to_p, built from star orthogonality
};

// sum over cells (i, j) of q^(j-1) t^(i-1)
QtScalar b_stat(const Partition& lambda);
// The cell monomials q^(j-1) t^(i-1) of lambda.
std::vector<QtScalar> cell_weights(const Partition& lambda);

// Computed once per degree and cached.
const MacData& mac_basis(int n);
SymFunc htilde(const Partition& lambda);  // in the s-basis

// Coefficients of -e_1 H_mu in the degree |mu|+1 Macdonald basis. Throws if
// the support leaves the partitions obtained by adding one cell.
std::map<Partition, QtScalar> pieri_coeffs(const Partition& mu);

// Coefficients c_lambda with f = sum c_lambda H_lambda, via star orthogonality.
std::map<Partition, QtScalar> expand_in_mac(const SymFunc& f);

// Operator diagonal in the Macdonald basis with eigenvalue ev(lambda).
GradedOperator mac_diagonal_op(const std::function<QtScalar(const Partition&)>& ev, int window);

enum class DeltaKind { e, h, e_prime };
GradedOperator delta_op(DeltaKind kind, int n, int window);
QtScalar delta_eigenvalue(DeltaKind kind, int n, const Partition& lambda);

// Eigenvalue prod_cells G1(x)/G2(x). Throws naming the cell where G2 vanishes.
QtScalar pi_eigenvalue(const WeightSpec& g1, const WeightSpec& g2, const Partition& lambda);
GradedOperator pi_op(const WeightSpec& g1, const WeightSpec& g2, int window);

// Elementary and complete symmetric polynomials of a finite list of scalars.
QtScalar elementary_of(int n, const std::vector<QtScalar>& xs);
QtScalar complete_of(int n, const std::vector<QtScalar>& xs);

}  // namespace qtp
