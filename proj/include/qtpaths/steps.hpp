#pragma once

#include "qtpaths/linop.hpp"

namespace qtp {

// Step operators O(m): multiplication by (-1)^m e_m for m > 0, the skewing
// h_{-m}^perp[MX] for m < 0, identity for m = 0. Blocks are in the p-basis and
// cached; a null pointer means the block is zero (including a negative target).
const QtMatrix* step_block(int m, int d);
// D_k = sum_{m - n = k, m, n >= 0} (-1)^m e_m h_n^perp[MX].
const QtMatrix* D_block(int k, int d);

QtVector apply_step(int m, int d, const QtVector& v);
QtVector apply_D(int k, int d, const QtVector& v);
SymFunc apply_step(int m, const SymFunc& f);
SymFunc apply_D(int k, const SymFunc& f);

GradedOperator step_op(int m, int window);
GradedOperator D_op(int k, int window);
// Multiplication by a symmetric function g, homogeneous of degree k.
GradedOperator mult_op(const SymFunc& g, int k, int window);

}  // namespace qtp
