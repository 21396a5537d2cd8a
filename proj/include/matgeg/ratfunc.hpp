#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "matgeg/mpoly.hpp"

namespace matgeg {

// Element of Q(p, n, a, w, x, alpha) in canonical form: num and den coprime,
// den monic in the graded lexicographic order. Equal field elements have
// identical representations, so == is field equality.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Rat& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(MPoly poly) : num_(std::move(poly)), den_(1) {}  // NOLINT(google-explicit-constructor)

  static RatFunc var(Var v) { return RatFunc(MPoly::var(v)); }
  // Throws DivisionByZero when den is zero.
  static RatFunc fraction(MPoly num, MPoly den);
  static RatFunc parse(std::string_view text);

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }
  Rat constant_value() const { return num_.constant_value(); }
  bool involves(Var v) const { return num_.involves(v) || den_.involves(v); }
  std::size_t term_count() const { return num_.size() + den_.size(); }

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  RatFunc inverse() const;
  RatFunc pow(unsigned k) const;

  // Exact substitution; unbound variables stay symbolic. Throws
  // DivisionByZero when the bindings annihilate the denominator.
  RatFunc evaluate(const Bindings& b) const;

  bool operator==(const RatFunc&) const = default;

  // "num" or "(num)/(den)".
  std::string to_string() const;

 private:
  MPoly num_;
  MPoly den_;
};

std::ostream& operator<<(std::ostream& os, const RatFunc& f);

// base (base+1) ... (base+k-1); empty product is 1.
RatFunc pochhammer(const RatFunc& base, unsigned k);
// nu (nu-1) ... (nu-i+1); empty product is 1.
RatFunc falling_factorial(const RatFunc& nu, unsigned i);

}  // namespace matgeg
