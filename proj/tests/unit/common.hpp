#pragma once

#include <doctest.h>

#include "matgeg/verify.hpp"

namespace t {

using namespace matgeg;

inline RatFunc P() { return RatFunc::var(Var::p); }
inline RatFunc N() { return RatFunc::var(Var::n); }
inline RatFunc W() { return RatFunc::var(Var::w); }
inline RatFunc X() { return RatFunc::var(Var::x); }
inline RatFunc rf(const char* s) { return RatFunc::parse(s); }
inline MatPoly xI() { return MatPoly::monomial(Mat::identity(2), 1); }

}  // namespace t
