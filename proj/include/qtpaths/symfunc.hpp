#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qtpaths/laurent_poly.hpp"
#include "qtpaths/matrix.hpp"
#include "qtpaths/partition.hpp"
#include "qtpaths/qtscalar.hpp"

namespace qtp {

enum class Basis { p, m, e, h, s, Htilde };

std::string basis_name(Basis b);
Basis basis_from_name(const std::string& name);

// Largest degree for which transition data may be built (default 12).
void set_degree_cap(int n);
int degree_cap();

class SymFunc {
 public:
  using Terms = std::map<Partition, QtScalar>;

  explicit SymFunc(Basis b = Basis::p) : basis_(b) {}
  static SymFunc one(Basis b = Basis::p) { return term(b, Partition(), QtScalar(1)); }
  static SymFunc term(Basis b, const Partition& lambda, const QtScalar& c = QtScalar(1));

  Basis basis() const { return basis_; }
  const Terms& terms() const { return terms_; }
  QtScalar coeff(const Partition& lambda) const;
  void add(const Partition& lambda, const QtScalar& c);
  bool is_zero() const { return terms_.empty(); }
  int max_degree() const;  // -1 for the zero function
  SymFunc homogeneous_part(int d) const;

  SymFunc operator-() const;
  // The right operand is converted to this basis.
  SymFunc& operator+=(const SymFunc& o);
  SymFunc& operator-=(const SymFunc& o);
  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  SymFunc scaled(const QtScalar& c) const;
  friend SymFunc operator*(const QtScalar& c, const SymFunc& f) { return f.scaled(c); }
  // Equality as symmetric functions (bases may differ).
  friend bool operator==(const SymFunc& a, const SymFunc& b);
  friend bool operator!=(const SymFunc& a, const SymFunc& b) { return !(a == b); }

  std::string to_string() const;

 private:
  Basis basis_;
  Terms terms_;
};

SymFunc convert(const SymFunc& f, Basis target);
// Product; stays in the common basis when both are p, e or h, otherwise p.
SymFunc mul(const SymFunc& f, const SymFunc& g);
QtScalar hall(const SymFunc& f, const SymFunc& g);
QtScalar star(const SymFunc& f, const SymFunc& g);
// Multiplies the coefficient of p_mu by prod_i scale(mu_i). Result in p-basis.
SymFunc pleth_diag(const SymFunc& f, const std::function<QtScalar(int)>& scale);
// g^perp f, adjoint to multiplication by g for the Hall product. Result in p-basis.
SymFunc skew_hall(const SymFunc& g, const SymFunc& f);

// A Laurent monomial coeff * z^exps.
using LaurentMonomial = std::pair<QtScalar, std::vector<int>>;
// f evaluated on the alphabet given by the monomials (p_k -> sum_j c_j^k z^{k e_j}).
LaurentPoly<QtScalar> eval_monomials(const SymFunc& f, const std::vector<LaurentMonomial>& args);

// Common plethystic scales.
QtScalar scale_M(int k);        // (1-q^k)(1-t^k)
QtScalar scale_minus_M(int k);  // -(1-q^k)(1-t^k)
// z_mu p_mu[-M], the star norm of p_mu.
QtScalar star_norm_p(const Partition& mu);

// Column j holds the j-th basis element of degree n (in partitions(n) order)
// expanded in the p-basis. from_p_matrix is the inverse.
const QtMatrix& to_p_matrix(Basis b, int n);
const QtMatrix& from_p_matrix(Basis b, int n);

// Degree-d component in the p-basis, indexed by partition_index.
QtVector p_vector(const SymFunc& f, int d);
SymFunc from_p_vector(const QtVector& v, int d);
// All non-zero homogeneous components in the p-basis.
std::map<int, QtVector> p_components(const SymFunc& f);

// Classical generators as SymFunc.
SymFunc e_fn(int k);
SymFunc h_fn(int k);
SymFunc p_fn(int k);

}  // namespace qtp
