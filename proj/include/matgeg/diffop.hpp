#pragma once

#include <string>
#include <vector>

#include "matgeg/matpoly.hpp"

namespace matgeg {

// Right-acting differential operator D = sum_i d^i F_i(x), acting on a matrix
// polynomial by P D = sum_i P^(i) F_i. Trailing zero coefficients are
// trimmed, so structural equality is operator equality.
class DiffOp {
 public:
  static constexpr int kZeroOrder = INT_MIN;

  DiffOp() = default;
  explicit DiffOp(std::size_t size) : size_(size) {}
  DiffOp(std::size_t size, std::vector<MatPoly> coeffs);
  static DiffOp identity(std::size_t size) { return scalar(size, RatFunc(1)); }
  static DiffOp scalar(std::size_t size, const RatFunc& c);
  static DiffOp multiplication(const MatPoly& f) { return DiffOp(f.size(), {f}); }
  // d^i F
  static DiffOp term(unsigned i, const MatPoly& f);

  std::size_t size() const { return size_; }
  int order() const { return c_.empty() ? kZeroOrder : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<MatPoly>& coeffs() const { return c_; }
  MatPoly coeff(std::size_t i) const;
  const MatPoly& leading_coeff() const { return c_.back(); }

  DiffOp operator-() const;
  DiffOp& operator+=(const DiffOp& o);
  DiffOp& operator-=(const DiffOp& o);
  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  DiffOp scaled(const RatFunc& c) const;
  friend DiffOp operator*(const RatFunc& c, const DiffOp& d) { return d.scaled(c); }
  friend DiffOp operator*(const DiffOp& d, const RatFunc& c) { return d.scaled(c); }
  // Algebra product: (D * E) means apply D first, P(DE) = (PD)E.
  friend DiffOp operator*(const DiffOp& d, const DiffOp& e);

  DiffOp evaluate(const Bindings& b) const;
  // Largest x-degree among the coefficients.
  int max_coeff_degree() const;
  std::size_t term_count() const;

  bool operator==(const DiffOp&) const = default;
  std::string to_string() const;

 private:
  void trim();

  std::size_t size_ = 0;
  std::vector<MatPoly> c_;
};

// Value of the eigenvalue map: N x N matrix whose entries are polynomials in
// the indeterminate w.
using EigenPoly = Mat;

MatPoly apply(const MatPoly& p, const DiffOp& d);
DiffOp compose(const DiffOp& d, const DiffOp& e);
DiffOp power(const DiffOp& d, unsigned k);
DiffOp commutator(const DiffOp& d, const DiffOp& e);
// sum_i (-1)^i T F_i(-x) T; size 2 only.
DiffOp tilde(const DiffOp& d);
// sum_i [w]_i F_i^i with F_i^i the x^i coefficient of F_i.
EigenPoly eigenvalue_map(const DiffOp& d);
// Largest w-degree among the entries; INT_MIN for the zero matrix.
int eigen_degree(const EigenPoly& m);
// Lambda(D) specialised at an integer w.
Mat eigenvalue_at(const DiffOp& d, unsigned w);

}  // namespace matgeg
