#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace matgeg {

// Arbitrary precision rational, always kept canonical (coprime, positive
// denominator).
using Rat = mpq_class;
using BigInt = mpz_class;

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

// Accepts "3", "-7", "3/4".
Rat parse_rat(std::string_view text);

std::string to_string(const Rat& r);

Rat factorial(unsigned k);
Rat binomial(unsigned n, unsigned k);

}  // namespace matgeg
