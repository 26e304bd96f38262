#include "qtpaths/json_io.hpp"

#include <stdexcept>

namespace qtp {

namespace {

Json integer_json(const Integer& c) {
  if (c.is_small()) return c.small_value();
  return c.to_string();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(static_cast<long long>(j.get<std::int64_t>()));
  if (j.is_string()) return Integer(j.get<std::string>());
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

QtScalar rational_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return QtScalar(IntPoly2(Integer(s)));
  return QtScalar::rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
}

}  // namespace

Json to_json(const IntPoly2& p) {
  Json a = Json::array();
  for (const auto& t : p.terms()) a.push_back(Json::array({integer_json(t.c), t.a, t.b}));
  return a;
}

Json to_json(const QtScalar& x) {
  Json j;
  j["num"] = to_json(x.num());
  j["den"] = to_json(x.den());
  return j;
}

Json to_json(const SymFunc& f) {
  Json j;
  j["basis"] = basis_name(f.basis());
  Json terms = Json::array();
  for (const auto& [la, c] : f.terms()) {
    Json t;
    t["partition"] = la.parts();
    t["coeff"] = to_json(c);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

Json to_json(const QtMatrix& m) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  Json e = Json::array();
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) e.push_back(Json::array({r, c, to_json(m(r, c))}));
  j["entries"] = std::move(e);
  return j;
}

Json to_json(const GradedOperator& op) {
  Json j;
  j["shift"] = op.shift();
  j["window"] = op.window();
  Json blocks = Json::array();
  for (const auto& [d, m] : op.blocks()) {
    Json b = to_json(m);
    b["source_degree"] = d;
    blocks.push_back(std::move(b));
  }
  j["blocks"] = std::move(blocks);
  return j;
}

Json to_json(const TensorSeries& tau) {
  Json j;
  j["zmax"] = tau.zmax;
  Json comps = Json::array();
  for (int m = 0; m <= tau.zmax; ++m) {
    Json c;
    c["degree"] = m;
    Json terms = Json::array();
    const auto& ps = partitions(m);
    for (int a = 0; a < static_cast<int>(ps.size()); ++a)
      for (int b = 0; b < static_cast<int>(ps.size()); ++b) {
        const QtScalar& x = tau.comp[m](a, b);
        if (x.is_zero()) continue;
        Json t;
        t["x"] = ps[a].parts();
        t["y"] = ps[b].parts();
        t["coeff"] = to_json(x);
        terms.push_back(std::move(t));
      }
    c["terms"] = std::move(terms);
    comps.push_back(std::move(c));
  }
  j["basis"] = "p";
  j["components"] = std::move(comps);
  return j;
}

IntPoly2 intpoly_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be an array of [c, a, b] terms");
  std::vector<IntPoly2::Term> ts;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3) throw std::invalid_argument("bad polynomial term " + t.dump());
    int a = t[1].get<int>(), b = t[2].get<int>();
    if (a < 0 || b < 0) throw std::invalid_argument("negative exponent in " + t.dump());
    ts.push_back({std::uint32_t(a), std::uint32_t(b), integer_from_json(t[0])});
  }
  return IntPoly2::from_terms(std::move(ts));
}

QtScalar qtscalar_from_json(const Json& j) {
  if (j.is_number_integer()) return QtScalar(IntPoly2(integer_from_json(j)));
  if (j.is_string()) return rational_from_string(j.get<std::string>());
  if (!j.is_object() || !j.contains("num")) throw std::invalid_argument("bad scalar " + j.dump());
  IntPoly2 num = intpoly_from_json(j.at("num"));
  IntPoly2 den = j.contains("den") ? intpoly_from_json(j.at("den")) : IntPoly2(1);
  if (den.is_zero()) throw std::invalid_argument("zero denominator in " + j.dump());
  return QtScalar::fraction(num, den);
}

SymFunc symfunc_from_json(const Json& j) {
  if (!j.is_object() || j.contains("num")) return SymFunc::one().scaled(qtscalar_from_json(j));
  SymFunc f(basis_from_name(j.value("basis", std::string("p"))));
  if (!j.contains("terms") || !j.at("terms").is_array()) throw std::invalid_argument("SymFunc needs a terms array");
  for (const auto& t : j.at("terms")) {
    std::vector<int> parts = t.at("partition").get<std::vector<int>>();
    f.add(Partition::from_unsorted(parts), qtscalar_from_json(t.at("coeff")));
  }
  return f;
}

}  // namespace qtp
