#include <catch2/catch_amalgamated.hpp>

#include "gen.hpp"
#include "qtpaths/json_io.hpp"
#include "qtpaths/verify.hpp"

using namespace qtp;

TEST_CASE("scalar round trip") {
  for (int k = 0; k < 30; ++k) {
    QtScalar x = testgen::small_scalar();
    CHECK(qtscalar_from_json(to_json(x)) == x);
    CHECK(qtscalar_from_json(Json::parse(to_json(x).dump())) == x);
  }
  QtScalar big = QtScalar(IntPoly2(Integer(std::string("123456789012345678901234567890"))));
  Json j = to_json(big);
  CHECK(j["num"][0][0].is_string());
  CHECK(qtscalar_from_json(j) == big);
  CHECK(qtscalar_from_json(Json("-3/6")) == QtScalar::rational(Integer(-1), Integer(2)));
  CHECK(qtscalar_from_json(Json(7)) == QtScalar(7));
}

TEST_CASE("symmetric function round trip") {
  SymFunc f = SymFunc::term(Basis::s, {2, 1}, QtScalar::q()) + SymFunc::term(Basis::s, {3}, QtScalar::M().inv());
  Json j = to_json(f);
  CHECK(j["basis"] == "s");
  CHECK(symfunc_from_json(j) == f);
  CHECK(symfunc_from_json(Json(1)) == SymFunc::one());
  CHECK(symfunc_from_json(Json::parse(R"({"basis":"e","terms":[{"partition":[1],"coeff":-1}]})")) == -e_fn(1));
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS(symfunc_from_json(Json::parse(R"({"terms":5})")));
  CHECK_THROWS(symfunc_from_json(Json::parse(R"({"basis":"x","terms":[]})")));
  CHECK_THROWS(symfunc_from_json(Json::parse(R"({"terms":[{"partition":[-1],"coeff":1}]})")));
  CHECK_THROWS(qtscalar_from_json(Json::parse(R"({"num":[[1,0,0]],"den":[]})")));
  CHECK_THROWS(qtscalar_from_json(Json::parse(R"({"num":[[1,-1,0]]})")));
}

TEST_CASE("reports") {
  CheckResult c = check_ext_delta(2, 1, 1);
  CHECK(c.pass);
  Json j = to_json(c, false);
  CHECK(j["status"] == "pass");
  CHECK_FALSE(j.contains("seconds"));
  CHECK(to_json(c, true).contains("seconds"));
  CHECK_THROWS(run_suite("nonsense", VerifyOptions{}));
  CHECK(suite_names().size() == 11);
}
