#include "matgeg/matpoly.hpp"

#include <sstream>

#include "matgeg/errors.hpp"

namespace matgeg {

// ---------------------------------------------------------------------------
// Mat

Mat::Mat(std::size_t size, std::vector<RatFunc> entries) : size_(size), e_(std::move(entries)) {
  if (e_.size() != size * size) throw SizeMismatch("matrix entry count does not match size");
}

Mat Mat::rows(std::initializer_list<std::initializer_list<RatFunc>> rows) {
  Mat m(rows.size());
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != rows.size()) throw SizeMismatch("matrix literal is not square");
    std::size_t c = 0;
    for (const auto& v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

Mat Mat::identity(std::size_t size) { return scalar(size, RatFunc(1)); }

Mat Mat::scalar(std::size_t size, const RatFunc& c) {
  Mat m(size);
  for (std::size_t i = 0; i < size; ++i) m(i, i) = c;
  return m;
}

Mat Mat::unit(std::size_t size, std::size_t r, std::size_t c) {
  Mat m(size);
  m(r, c) = RatFunc(1);
  return m;
}

Mat Mat::reflection_T() { return Mat::rows({{1, 0}, {0, -1}}); }

bool Mat::is_zero() const {
  for (const auto& v : e_)
    if (!v.is_zero()) return false;
  return true;
}

bool Mat::is_diagonal() const {
  for (std::size_t r = 0; r < size_; ++r)
    for (std::size_t c = 0; c < size_; ++c)
      if (r != c && !(*this)(r, c).is_zero()) return false;
  return true;
}

bool Mat::is_scalar() const {
  if (!is_diagonal()) return false;
  for (std::size_t i = 1; i < size_; ++i)
    if ((*this)(i, i) != (*this)(0, 0)) return false;
  return true;
}

bool Mat::is_antidiagonal() const {
  for (std::size_t r = 0; r < size_; ++r)
    for (std::size_t c = 0; c < size_; ++c)
      if (r + c != size_ - 1 && !(*this)(r, c).is_zero()) return false;
  return true;
}

Mat Mat::operator-() const {
  Mat m = *this;
  for (auto& v : m.e_) v = -v;
  return m;
}

Mat& Mat::operator+=(const Mat& o) {
  if (size_ != o.size_) throw SizeMismatch("matrix sizes differ");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  if (size_ != o.size_) throw SizeMismatch("matrix sizes differ");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
  return *this;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.size_ != b.size_) throw SizeMismatch("matrix sizes differ");
  const std::size_t n = a.size_;
  Mat m(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) {
      const RatFunc& ark = a(r, k);
      if (ark.is_zero()) continue;
      for (std::size_t c = 0; c < n; ++c) {
        const RatFunc& bkc = b(k, c);
        if (bkc.is_zero()) continue;
        m(r, c) += ark * bkc;
      }
    }
  return m;
}

Mat Mat::scaled(const RatFunc& c) const {
  Mat m = *this;
  for (auto& v : m.e_)
    if (!v.is_zero()) v *= c;
  return m;
}

Mat Mat::transpose() const {
  Mat m(size_);
  for (std::size_t r = 0; r < size_; ++r)
    for (std::size_t c = 0; c < size_; ++c) m(c, r) = (*this)(r, c);
  return m;
}

Mat Mat::evaluate(const Bindings& b) const {
  Mat m = *this;
  for (auto& v : m.e_) v = v.evaluate(b);
  return m;
}

std::string Mat::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < size_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < size_; ++c) os << (c ? ", " : "") << (*this)(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------
// MatPoly

MatPoly::MatPoly(std::size_t size, std::vector<Mat> coeffs) : size_(size), c_(std::move(coeffs)) {
  for (const auto& m : c_)
    if (m.size() != size_) throw SizeMismatch("matrix polynomial coefficient has wrong size");
  trim();
}

MatPoly MatPoly::constant(const Mat& m) { return MatPoly(m.size(), {m}); }

MatPoly MatPoly::monomial(const Mat& m, unsigned k) {
  std::vector<Mat> c(k + 1, Mat(m.size()));
  c[k] = m;
  return MatPoly(m.size(), std::move(c));
}

MatPoly MatPoly::from_entries(std::size_t size, const std::vector<std::vector<std::vector<RatFunc>>>& entries) {
  if (entries.size() != size) throw SizeMismatch("entry rows do not match size");
  std::size_t len = 0;
  for (const auto& row : entries) {
    if (row.size() != size) throw SizeMismatch("entry columns do not match size");
    for (const auto& e : row) len = std::max(len, e.size());
  }
  std::vector<Mat> c(len, Mat(size));
  for (std::size_t r = 0; r < size; ++r)
    for (std::size_t col = 0; col < size; ++col)
      for (std::size_t j = 0; j < entries[r][col].size(); ++j) c[j](r, col) = entries[r][col][j];
  return MatPoly(size, std::move(c));
}

void MatPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void MatPoly::require_same_size(const MatPoly& o) const {
  if (size_ != o.size_) throw SizeMismatch("matrix polynomial sizes differ");
}

Mat MatPoly::coeff(std::size_t j) const { return j < c_.size() ? c_[j] : Mat(size_); }

std::vector<RatFunc> MatPoly::entry(std::size_t r, std::size_t c) const {
  std::vector<RatFunc> out;
  out.reserve(c_.size());
  for (const auto& m : c_) out.push_back(m(r, c));
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

MatPoly MatPoly::operator-() const {
  MatPoly r = *this;
  for (auto& m : r.c_) m = -m;
  return r;
}

MatPoly& MatPoly::operator+=(const MatPoly& o) {
  require_same_size(o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Mat(size_));
  for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] += o.c_[j];
  trim();
  return *this;
}

MatPoly& MatPoly::operator-=(const MatPoly& o) {
  require_same_size(o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Mat(size_));
  for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] -= o.c_[j];
  trim();
  return *this;
}

MatPoly operator*(const MatPoly& a, const MatPoly& b) {
  a.require_same_size(b);
  if (a.is_zero() || b.is_zero()) return MatPoly(a.size_);
  std::vector<Mat> c(a.c_.size() + b.c_.size() - 1, Mat(a.size_));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      c[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return MatPoly(a.size_, std::move(c));
}

MatPoly operator*(const Mat& m, const MatPoly& p) {
  if (m.size() != p.size_) throw SizeMismatch("matrix and matrix polynomial sizes differ");
  std::vector<Mat> c;
  c.reserve(p.c_.size());
  for (const auto& pc : p.c_) c.push_back(m * pc);
  return MatPoly(p.size_, std::move(c));
}

MatPoly operator*(const MatPoly& p, const Mat& m) {
  if (m.size() != p.size_) throw SizeMismatch("matrix and matrix polynomial sizes differ");
  std::vector<Mat> c;
  c.reserve(p.c_.size());
  for (const auto& pc : p.c_) c.push_back(pc * m);
  return MatPoly(p.size_, std::move(c));
}

MatPoly MatPoly::scaled(const RatFunc& s) const {
  if (s.is_zero()) return MatPoly(size_);
  MatPoly r = *this;
  for (auto& m : r.c_) m = m.scaled(s);
  return r;
}

MatPoly MatPoly::derivative(unsigned order) const {
  if (order == 0) return *this;
  if (c_.size() <= order) return MatPoly(size_);
  std::vector<Mat> c;
  c.reserve(c_.size() - order);
  for (std::size_t j = order; j < c_.size(); ++j) {
    // j (j-1) ... (j-order+1)
    Rat f(1);
    for (unsigned t = 0; t < order; ++t) f *= static_cast<long>(j - t);
    c.push_back(c_[j].scaled(RatFunc(f)));
  }
  return MatPoly(size_, std::move(c));
}

MatPoly MatPoly::reflect() const {
  MatPoly r = *this;
  for (std::size_t j = 1; j < r.c_.size(); j += 2) r.c_[j] = -r.c_[j];
  return r;
}

MatPoly MatPoly::conjugate_by_T() const {
  if (size_ != 2) throw SizeMismatch("conjugation by T needs 2x2 matrices");
  MatPoly r = *this;
  for (auto& m : r.c_) {
    m(0, 1) = -m(0, 1);
    m(1, 0) = -m(1, 0);
  }
  return r;
}

MatPoly MatPoly::transpose() const {
  MatPoly r = *this;
  for (auto& m : r.c_) m = m.transpose();
  return r;
}

MatPoly MatPoly::evaluate(const Bindings& b) const {
  std::vector<Mat> c;
  c.reserve(c_.size());
  for (const auto& m : c_) c.push_back(m.evaluate(b));
  return MatPoly(size_, std::move(c));
}

std::string MatPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j].is_zero()) continue;
    if (os.tellp() > 0) os << " + ";
    os << c_[j].to_string();
    if (j == 1) os << "*x";
    if (j > 1) os << "*x^" << j;
  }
  return os.str();
}

}  // namespace matgeg
