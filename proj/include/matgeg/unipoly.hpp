#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "matgeg/ratfunc.hpp"

namespace matgeg {

// Dense univariate polynomial with RatFunc coefficients; coeffs()[k]
// multiplies t^k. Trailing zeros are trimmed.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<RatFunc> coeffs);
  UniPoly(const RatFunc& c);  // NOLINT(google-explicit-constructor)
  UniPoly(long c) : UniPoly(RatFunc(c)) {}  // NOLINT(google-explicit-constructor)
  static UniPoly monomial(const RatFunc& c, unsigned k);
  static UniPoly t() { return monomial(RatFunc(1), 1); }
  // Reads f as a polynomial in v; the denominator of f must be free of v.
  static UniPoly from_ratfunc(const RatFunc& f, Var v);

  const std::vector<RatFunc>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return c_.empty() ? -1 : static_cast<int>(c_.size()) - 1; }
  RatFunc coeff(std::size_t k) const { return k < c_.size() ? c_[k] : RatFunc(); }
  const RatFunc& leading_coeff() const { return c_.back(); }

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly scaled(const RatFunc& c) const;
  UniPoly pow(unsigned k) const;

  // Back to a RatFunc in the variable v.
  RatFunc to_ratfunc(Var v) const;

  bool operator==(const UniPoly&) const = default;
  std::string to_string(std::string_view var = "t") const;

 private:
  void trim();
  std::vector<RatFunc> c_;
};

}  // namespace matgeg
