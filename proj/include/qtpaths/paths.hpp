#pragma once

#include <string>
#include <vector>

#include "qtpaths/linop.hpp"
#include "qtpaths/weights.hpp"

namespace qtp {

using IntSeq = std::vector<int>;

// Alternating path: odd steps go up (>= 0), even steps go down (<= 0).
struct AltPath {
  IntSeq steps;

  int half_length() const { return static_cast<int>(steps.size()) / 2; }
  // y-coordinates y_0 = 0, ..., y_{2n}.
  IntSeq heights() const;
  int valley(int j) const;  // y_{2j}
  int degree() const { return heights().back(); }
  friend bool operator==(const AltPath& a, const AltPath& b) { return a.steps == b.steps; }
  friend bool operator<(const AltPath& a, const AltPath& b) { return a.steps < b.steps; }
};

int seq_size(const IntSeq& s);
std::string seq_string(const IntSeq& s);

// The minimal path of beta: steps max(0, b_i), min(0, b_i).
AltPath gamma_of(const IntSeq& beta);
bool is_alternating(const AltPath& g);
// beta-height of the j-th valley, j = 1..l.
int beta_height(const AltPath& g, const IntSeq& beta, int j);
bool in_R(const AltPath& g, const IntSeq& beta);
// (qt)^(sum of valley beta-heights). Throws if g is not in R_beta.
QtScalar valley_weight(const AltPath& g, const IntSeq& beta);
SymFunc path_op_apply(const AltPath& g, const IntSeq& beta, const SymFunc& f);

// Every path of R_beta whose points stay at height <= |beta| + d, which are
// the only ones acting non-trivially on degree d.
std::vector<AltPath> enumerate_paths(const IntSeq& beta, int d);
// Increment tuples of VI_beta with partial sums <= |beta| + d.
std::vector<IntSeq> enumerate_increments(const IntSeq& beta, int d);

enum class Engine { paths, increments, voa };
std::string engine_name(Engine e);
Engine engine_from_name(const std::string& s);

// Block of R_beta from degree d to degree d + |beta| (p-basis).
QtMatrix R_block(const IntSeq& beta, int d, Engine engine);
SymFunc R_apply(const IntSeq& beta, const SymFunc& f, Engine engine);
GradedOperator R_op(const IntSeq& beta, int window, Engine engine);

IntSeq psi(const IntSeq& beta);
IntSeq psi_inv(const IntSeq& alpha);
bool valid_psi_domain(const IntSeq& beta);

SymFunc Q_apply(const IntSeq& alpha, const SymFunc& f, Engine engine);
GradedOperator Q_op(const IntSeq& alpha, int window, Engine engine = Engine::increments);
// Sum of Q over all l! orderings of alpha, with repetitions.
GradedOperator Q_sym_op(const IntSeq& alpha, int window);

// R_{betas[0]} ... R_{betas[m-1]} f, rightmost factor first.
SymFunc R_product_apply(const std::vector<IntSeq>& betas, const SymFunc& f, Engine engine);

// ad^i of D_0/(-M) applied to -e_1, for i = 0..n, on the given window.
std::vector<GradedOperator> ad_D0_e1(int n, int window);
GradedOperator A_F_op(const WeightSpec& F, int window);

enum class AEngine { commutator, pathsum };
GradedOperator A_op(const WeightSpec& F, int ell, int window, AEngine engine);

}  // namespace qtp
