#pragma once

#include <json.hpp>

#include "matgeg/centralizer.hpp"
#include "matgeg/presented.hpp"

namespace matgeg {

using json = nlohmann::ordered_json;

// RatFunc travels as its text form, e.g. "(p + 1)/(n - 2*p)".
json to_json(const RatFunc& f);
RatFunc ratfunc_from_json(const json& j);

// [["f11","f12"],["f21","f22"]]
json to_json(const Mat& m);
Mat mat_from_json(const json& j);

// {"size":2,"coeffs":[Mat, ...]} with coeffs[j] the x^j coefficient.
json to_json(const MatPoly& p);
MatPoly matpoly_from_json(const json& j);

// {"order":s,"coeffs":[MatPoly, ...]}
json to_json(const DiffOp& d);
DiffOp diffop_from_json(const json& j);

json to_json(const UniPoly& p);
json to_json(const SpanDecomp& s);
json to_json(const CenterDecomp& c);
json to_json(const AlgElem& x);
json to_json(const Bindings& b);

}  // namespace matgeg
