#include <catch2/catch_amalgamated.hpp>

#include "gen.hpp"
#include "qtpaths/qtscalar.hpp"

using namespace qtp;
using testgen::nonzero_poly;
using testgen::small_poly;
using testgen::small_scalar;

namespace {
const QtScalar one(1);
const QtScalar q = QtScalar::q();
const QtScalar t = QtScalar::t();
}  // namespace

TEST_CASE("M plus Mbar is qt") { CHECK(QtScalar::M() + QtScalar::Mbar() == q * t); }

TEST_CASE("inverse and self division") {
  QtScalar x = (one - q) / (one - t);
  CHECK(x * x.inv() == one);
  CHECK(QtScalar::M() / QtScalar::M() == one);
  CHECK_THROWS_AS(one / QtScalar(), std::domain_error);
}

TEST_CASE("q-integers") {
  CHECK(qt_int(0, QBase::qt).is_zero());
  CHECK(qt_int(2, QBase::qt) == one + q * t);
  CHECK(qt_int(-2, QBase::qt) == -(one + q * t));
  CHECK(qt_int(3, QBase::q_over_t) == one + q / t + (q / t).pow(2));
  CHECK(qt_int(-1, QBase::t) == QtScalar(-1));
}

TEST_CASE("substitution") {
  CHECK(qt_substitute({one, one}, q * t) == one + q * t);
  CHECK(qt_substitute({QtScalar(), one}, q * q * t) == q * q * t);
  CHECK(qt_substitute({one}, q / (one - t)) == one);
}

TEST_CASE("canonical representation") {
  QtScalar a = QtScalar::fraction(IntPoly2(2) * IntPoly2::q(), IntPoly2(-4));
  CHECK(a == QtScalar::rational(Integer(-1), Integer(2)) * q);
  QtScalar b = QtScalar::fraction(IntPoly2(1) - IntPoly2::q().pow(2), IntPoly2(1) - IntPoly2::q());
  CHECK(b.is_polynomial());
  CHECK(b == one + q);
  QtScalar c = QtScalar::fraction(IntPoly2::q() - IntPoly2(1), IntPoly2(1) - IntPoly2::t());
  CHECK(c.den().terms()[0].c.sign() > 0);
}

TEST_CASE("large coefficients promote to GMP") {
  Integer big = pow(Integer(3), 60);
  CHECK(!big.is_small());
  CHECK(divexact(big * Integer(7), big) == Integer(7));
  QtScalar x = QtScalar(big) * q;
  CHECK(x / QtScalar(big) == q);
}

TEST_CASE("polynomial gcd") {
  for (int i = 0; i < 200; ++i) {
    IntPoly2 a = nonzero_poly(), b = nonzero_poly(), c = nonzero_poly();
    IntPoly2 g = gcd(a * c, b * c);
    IntPoly2 quo;
    REQUIRE(exact_divide(a * c, g, quo));
    REQUIRE(exact_divide(b * c, g, quo));
    REQUIRE(exact_divide(g, gcd(c, c), quo));
  }
}

TEST_CASE("equality matches cross multiplication") {
  for (int i = 0; i < 200; ++i) {
    IntPoly2 a = small_poly(), b = nonzero_poly(), c = small_poly(), d = nonzero_poly();
    if (testgen::uniform(0, 1)) {
      IntPoly2 k = nonzero_poly(2, 2);
      c = a * k;
      d = b * k;
    }
    bool eq = QtScalar::fraction(a, b) == QtScalar::fraction(c, d);
    CHECK(eq == (a * d - c * b).is_zero());
  }
}

TEST_CASE("field axioms on random inputs") {
  for (int i = 0; i < 150; ++i) {
    QtScalar x = small_scalar(), y = small_scalar(), z = small_scalar();
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x - x == QtScalar());
    if (!y.is_zero()) CHECK((x / y) * y == x);
  }
}

TEST_CASE("reduction is idempotent") {
  for (int i = 0; i < 100; ++i) {
    QtScalar x = small_scalar();
    CHECK(QtScalar::fraction(x.num(), x.den()) == x);
  }
}

TEST_CASE("rational evaluation") {
  QtScalar x = (one - q) / (one - t);
  CHECK(x.eval(mpq_class(1, 2), mpq_class(1, 3)) == mpq_class(3, 4));
  CHECK_THROWS_AS(x.eval(0, 1), std::domain_error);
}
