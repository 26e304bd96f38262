#pragma once

#include <json.hpp>

#include "qtpaths/linop.hpp"
#include "qtpaths/symfunc.hpp"
#include "qtpaths/tau.hpp"

namespace qtp {

using Json = nlohmann::ordered_json;

// {num: [[c, a, b], ...], den: [...]} for num/den with terms c q^a t^b. A
// coefficient that does not fit in 64 bits is written as a decimal string.
Json to_json(const IntPoly2& p);
Json to_json(const QtScalar& x);
// {basis: "s", terms: [{partition: [2, 1], coeff: <QtScalar>}, ...]}
Json to_json(const SymFunc& f);
// Sparse entries [[i, j, coeff], ...] with the shape.
Json to_json(const QtMatrix& m);
Json to_json(const GradedOperator& op);
Json to_json(const TensorSeries& tau);

// Accepts the forms above. Numbers and numeric strings are read as rational
// constants wherever a scalar is expected, and a bare scalar as a SymFunc
// means that multiple of 1.
IntPoly2 intpoly_from_json(const Json& j);
QtScalar qtscalar_from_json(const Json& j);
SymFunc symfunc_from_json(const Json& j);

}  // namespace qtp
