#include "matgeg/rational.hpp"

#include "matgeg/errors.hpp"

namespace matgeg {

Rat parse_rat(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty rational literal");
  Rat r;
  if (r.set_str(s, 10) != 0) throw ParseError("bad rational literal '" + s + "'");
  if (sgn(r.get_den()) == 0) throw DivisionByZero("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) { return r.get_str(10); }

Rat factorial(unsigned k) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return Rat(f);
}

Rat binomial(unsigned n, unsigned k) {
  if (k > n) return Rat(0);
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rat(b);
}

}  // namespace matgeg
