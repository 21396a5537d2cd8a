#pragma once

#include <optional>

#include "matgeg/diffop.hpp"

namespace matgeg {

// The 2x2 Gegenbauer weight W_{p,n}(x) = (1-x^2)^{n/2-1} P(x). Only the
// polynomial factor P is carried; the scalar factor is tracked by its
// exponent n/2 - 1.
struct WeightSpec {
  Bindings bindings;  // empty for symbolic p, n
  MatPoly polynomial_part;
  RatFunc exponent;
};

WeightSpec weight(const Bindings& b = {});

// C_m^lambda(x) as a 1x1 matrix polynomial; zero for m < 0.
MatPoly gegenbauer_poly(int m, const RatFunc& lambda);

struct MonicMOP {
  unsigned w = 0;
  MatPoly poly;
};

// Q_w from the Gegenbauer combination.
MonicMOP monic_mop_closed(unsigned w);
// Q_w assembled directly from the closed forms of its coefficients B_i^w.
MonicMOP monic_mop_coeffs(unsigned w);
// B_i^w, the x^i coefficient of Q_w; zero for i > w.
Mat mop_coefficient(unsigned w, unsigned i);

struct Generators {
  DiffOp d1, d2, d3, d4;
  const DiffOp& operator[](int i) const;
};

// The four second-order operators spanning, with I, the order <= 2 part.
Generators build_generators();

// Lambda_w(D_i) as printed for the generators, polynomial in w.
EigenPoly expected_generator_eigenvalue(int i);

// When Q D = Lambda Q for a constant matrix Lambda, returns Lambda. Q must be monic.
std::optional<Mat> eigenvalue_if_eigenfunction(const MatPoly& q, const DiffOp& d);

// int_{-1}^{1} x^m (1 - x^2)^k dx.
Rat exact_moment(unsigned m, unsigned k);

// (Q_i, Q_j) = int_{-1}^{1} Q_i W Q_j^T dx at n = n_val (even, >= 4) and
// p = p_val with 0 < p_val < n_val / 2.
Mat gram_entry(unsigned i, unsigned j, long n_val, const Rat& p_val);

// Same integral for arbitrary matrix polynomials with the weight specialised
// at the given (n, p).
Mat weighted_inner_product(const MatPoly& lhs, const MatPoly& rhs, long n_val, const Rat& p_val);

}  // namespace matgeg
