#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qtpaths/laurent_poly.hpp"
#include "qtpaths/linop.hpp"
#include "qtpaths/paths.hpp"

namespace qtp {

using LaurentSeries = LaurentPoly<QtScalar>;

// sum_{n=0}^{T} c^n (z_j/z_i)^n in nvars variables, 0-based i < j.
LaurentSeries geom_factor(const QtScalar& c, int i, int j, int T, int nvars);
// (1-x)(1-qtx)/((1-qx)(1-tx)) with x = z_j/z_i, truncated at x^T.
LaurentSeries omega_factor(int i, int j, int T, int nvars);

// Pairs (i, j), 1-based, that are not consecutive inside one block.
std::vector<std::pair<int, int>> non_consecutive_indices(const std::vector<IntSeq>& betas);

// Coefficient of z^beta in prod_{i<j} Omega[Mbar x - qt [NI] x] times
// prod_i Omega[-z_i X]. Without a cap the ratio expansions are cut only by the
// exponents that can still reach z^beta, which is exact; a cap T truncates
// every ratio series at x^T in addition.
SymFunc explicit_rhs(const std::vector<IntSeq>& betas, std::optional<int> cap = std::nullopt);
// The default cap sum_i max(beta_i, 0) + 1 for an input of degree 0.
int default_ratio_cap(const std::vector<IntSeq>& betas);

enum class Side { schur, monomial, elementary };
Side side_from_name(const std::string& s);
// [z^beta] g[z_1 + ... + z_l] times the ratio product, where g is s_{lambda'},
// e_lambda or m_lambda. Equals (-1)^n times the s/m/e coefficient of explicit_rhs.
QtScalar expansion_coeff(const std::vector<IntSeq>& betas, const Partition& lambda, Side side);

// [z^beta] D(z_1)...D(z_l) / prod over consecutive pairs inside a block of
// (1 - qt z_{i+1}/z_i), extracted one variable at a time from the left.
// Block from degree d to degree d + total size.
QtMatrix voa_block(const std::vector<IntSeq>& betas, int d);
GradedOperator voa_operator(const std::vector<IntSeq>& betas, int window);
SymFunc voa_apply(const std::vector<IntSeq>& betas, const SymFunc& f);

// Coefficient [z_1^a z_2^b] of the exchange relation for D(z), after both
// sides are multiplied by (1-q z_2/z_1)(1-t z_2/z_1)(1-q z_1/z_2)(1-t z_1/z_2).
// Returns (lhs, rhs) on source degrees 0..window.
std::pair<GradedOperator, GradedOperator> d_exchange_sides(int a, int b, int window);

}  // namespace qtp
