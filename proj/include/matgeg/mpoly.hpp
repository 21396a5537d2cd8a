#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "matgeg/rational.hpp"

namespace matgeg {

// Indeterminates known to the engine. The enumeration order is the variable
// order of the monomial ordering: p < n < a < w < x < alpha.
enum class Var : std::uint8_t { p = 0, n, a, w, x, alpha };

inline constexpr unsigned kNumVars = 6;
inline constexpr std::array<Var, kNumVars> kAllVars = {Var::p, Var::n, Var::a,
                                                       Var::w, Var::x, Var::alpha};

std::string_view var_name(Var v);
std::optional<Var> var_from_name(std::string_view name);

// Exponent vector packed into one word: six 9-bit exponents (p in the low
// bits) under a 10-bit total degree, so unsigned comparison of the packed
// word is graded lexicographic order.
class Monomial {
 public:
  static constexpr unsigned kBits = 9;
  static constexpr unsigned kMaxExp = (1u << kBits) - 1;
  static constexpr unsigned kDegShift = kBits * kNumVars;

  constexpr Monomial() = default;

  static Monomial of(Var v, unsigned e = 1);

  unsigned exp(Var v) const {
    return static_cast<unsigned>(key_ >> (kBits * static_cast<unsigned>(v))) & kMaxExp;
  }
  unsigned degree() const { return static_cast<unsigned>(key_ >> kDegShift); }
  bool is_one() const { return key_ == 0; }
  std::uint8_t var_mask() const;

  bool divides(Monomial other) const;
  Monomial operator*(Monomial other) const;
  // Requires divides(num).
  Monomial quotient_of(Monomial num) const;
  Monomial without(Var v) const;

  std::uint64_t key() const { return key_; }
  auto operator<=>(const Monomial&) const = default;

 private:
  explicit constexpr Monomial(std::uint64_t key) : key_(key) {}
  std::uint64_t key_ = 0;
};

using Bindings = std::map<Var, Rat>;

// Sparse multivariate polynomial with rational coefficients. Terms are
// stored in strictly decreasing monomial order with no zero coefficients, so
// two polynomials are equal iff their term vectors are equal.
class MPoly {
 public:
  struct Term {
    Monomial mono;
    Rat coeff;
    bool operator==(const Term&) const = default;
  };

  MPoly() = default;
  MPoly(long c);  // NOLINT(google-explicit-constructor)
  MPoly(const Rat& c);  // NOLINT(google-explicit-constructor)
  MPoly(const Rat& c, Monomial m);

  static MPoly var(Var v);
  // Accepts terms in any order, possibly with duplicates and zeros.
  static MPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_one() const;
  Rat constant_value() const;  // requires is_constant()
  const Term& leading() const { return terms_.front(); }
  const Rat& leading_coeff() const { return terms_.front().coeff; }
  unsigned total_degree() const { return is_zero() ? 0 : terms_.front().mono.degree(); }
  unsigned degree_in(Var v) const;
  std::uint8_t var_mask() const;
  bool involves(Var v) const { return (var_mask() >> static_cast<unsigned>(v)) & 1u; }

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly scaled(const Rat& c) const;
  MPoly shifted(Monomial m) const;
  MPoly pow(unsigned k) const;

  // Quotient when `d` divides *this exactly, nullopt otherwise.
  std::optional<MPoly> exact_div(const MPoly& d) const;
  // Divide by the leading coefficient (zero stays zero).
  MPoly monic() const;

  // Coefficients as a polynomial in v: result[k] multiplies v^k and is free of v.
  std::vector<MPoly> coeffs_in(Var v) const;
  static MPoly from_coeffs_in(Var v, const std::vector<MPoly>& coeffs);

  MPoly substitute(const Bindings& b) const;
  MPoly derivative(Var v) const;

  bool operator==(const MPoly&) const = default;

  std::string to_string() const;

 private:
  void canonicalize();
  std::vector<Term> terms_;
};

// Monic gcd (leading coefficient 1); gcd(0, 0) = 0.
MPoly gcd(const MPoly& f, const MPoly& g);

}  // namespace matgeg
