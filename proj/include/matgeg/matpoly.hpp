#pragma once

#include <climits>
#include <cstddef>
#include <string>
#include <vector>

#include "matgeg/ratfunc.hpp"

namespace matgeg {

// Square matrix with RatFunc entries, row-major.
class Mat {
 public:
  Mat() = default;
  explicit Mat(std::size_t size) : size_(size), e_(size * size) {}
  Mat(std::size_t size, std::vector<RatFunc> entries);
  // Row lists, e.g. Mat::rows({{1, 0}, {0, 1}}).
  static Mat rows(std::initializer_list<std::initializer_list<RatFunc>> rows);
  static Mat identity(std::size_t size);
  static Mat scalar(std::size_t size, const RatFunc& c);
  static Mat unit(std::size_t size, std::size_t r, std::size_t c);
  // T = diag(1, -1).
  static Mat reflection_T();

  std::size_t size() const { return size_; }
  const RatFunc& operator()(std::size_t r, std::size_t c) const { return e_[r * size_ + c]; }
  RatFunc& operator()(std::size_t r, std::size_t c) { return e_[r * size_ + c]; }
  const std::vector<RatFunc>& entries() const { return e_; }

  bool is_zero() const;
  bool is_diagonal() const;
  bool is_scalar() const;
  bool is_antidiagonal() const;

  Mat operator-() const;
  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(const Mat& a, const Mat& b);
  Mat scaled(const RatFunc& c) const;
  Mat transpose() const;
  Mat evaluate(const Bindings& b) const;

  bool operator==(const Mat&) const = default;
  std::string to_string() const;

 private:
  std::size_t size_ = 0;
  std::vector<RatFunc> e_;
};

// Constant matrix coefficient.
using ConstMat = Mat;

// N x N matrix-valued polynomial in x, coeffs()[j] multiplies x^j. Trailing
// zero coefficients are trimmed so degree() is exact.
class MatPoly {
 public:
  static constexpr int kZeroDegree = INT_MIN;

  MatPoly() = default;
  explicit MatPoly(std::size_t size) : size_(size) {}
  MatPoly(std::size_t size, std::vector<Mat> coeffs);
  static MatPoly constant(const Mat& m);
  static MatPoly identity(std::size_t size) { return constant(Mat::identity(size)); }
  // m * x^k
  static MatPoly monomial(const Mat& m, unsigned k);
  // Assemble from entry polynomials given as coefficient lists in x.
  static MatPoly from_entries(std::size_t size, const std::vector<std::vector<std::vector<RatFunc>>>& entries);

  std::size_t size() const { return size_; }
  int degree() const { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Mat>& coeffs() const { return c_; }
  // Coefficient of x^j; zero matrix when out of range.
  Mat coeff(std::size_t j) const;
  const Mat& leading_coeff() const { return c_.back(); }
  // (r, c) entry as coefficient list in x.
  std::vector<RatFunc> entry(std::size_t r, std::size_t c) const;

  MatPoly operator-() const;
  MatPoly& operator+=(const MatPoly& o);
  MatPoly& operator-=(const MatPoly& o);
  friend MatPoly operator+(MatPoly a, const MatPoly& b) { return a += b; }
  friend MatPoly operator-(MatPoly a, const MatPoly& b) { return a -= b; }
  // Noncommutative convolution product.
  friend MatPoly operator*(const MatPoly& a, const MatPoly& b);
  friend MatPoly operator*(const Mat& m, const MatPoly& p);
  friend MatPoly operator*(const MatPoly& p, const Mat& m);
  MatPoly scaled(const RatFunc& c) const;

  MatPoly derivative(unsigned order = 1) const;
  // x -> -x.
  MatPoly reflect() const;
  // T M T with T = diag(1, -1); size 2 only.
  MatPoly conjugate_by_T() const;
  MatPoly transpose() const;
  MatPoly evaluate(const Bindings& b) const;

  bool operator==(const MatPoly&) const = default;
  std::string to_string() const;

 private:
  void trim();
  void require_same_size(const MatPoly& o) const;

  std::size_t size_ = 0;
  std::vector<Mat> c_;
};

}  // namespace matgeg
