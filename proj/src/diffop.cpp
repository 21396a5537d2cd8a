#include "matgeg/diffop.hpp"

#include <algorithm>
#include <sstream>

#include "matgeg/errors.hpp"

namespace matgeg {

DiffOp::DiffOp(std::size_t size, std::vector<MatPoly> coeffs) : size_(size), c_(std::move(coeffs)) {
  for (auto& f : c_) {
    if (f.size() == 0) f = MatPoly(size_);
    if (f.size() != size_) throw SizeMismatch("operator coefficient has wrong size");
  }
  trim();
}

DiffOp DiffOp::scalar(std::size_t size, const RatFunc& c) {
  return DiffOp(size, {MatPoly::constant(Mat::scalar(size, c))});
}

DiffOp DiffOp::term(unsigned i, const MatPoly& f) {
  std::vector<MatPoly> c(i + 1, MatPoly(f.size()));
  c[i] = f;
  return DiffOp(f.size(), std::move(c));
}

void DiffOp::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

MatPoly DiffOp::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : MatPoly(size_); }

DiffOp DiffOp::operator-() const {
  DiffOp r = *this;
  for (auto& f : r.c_) f = -f;
  return r;
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
  if (size_ != o.size_) throw SizeMismatch("operator sizes differ");
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), MatPoly(size_));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
  if (size_ != o.size_) throw SizeMismatch("operator sizes differ");
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), MatPoly(size_));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

DiffOp DiffOp::scaled(const RatFunc& c) const {
  if (c.is_zero()) return DiffOp(size_);
  DiffOp r = *this;
  for (auto& f : r.c_) f = f.scaled(c);
  return r;
}

DiffOp operator*(const DiffOp& d, const DiffOp& e) { return compose(d, e); }

DiffOp DiffOp::evaluate(const Bindings& b) const {
  std::vector<MatPoly> c;
  c.reserve(c_.size());
  for (const auto& f : c_) c.push_back(f.evaluate(b));
  return DiffOp(size_, std::move(c));
}

int DiffOp::max_coeff_degree() const {
  int d = MatPoly::kZeroDegree;
  for (const auto& f : c_) d = std::max(d, f.degree());
  return d;
}

std::size_t DiffOp::term_count() const {
  std::size_t n = 0;
  for (const auto& f : c_)
    for (const auto& m : f.coeffs())
      for (const auto& v : m.entries()) n += v.term_count();
  return n;
}

std::string DiffOp::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 1) os << "d*";
    if (i > 1) os << "d^" << i << "*";
    os << "(" << c_[i].to_string() << ")";
  }
  return os.str();
}

MatPoly apply(const MatPoly& p, const DiffOp& d) {
  if (p.size() != d.size()) throw SizeMismatch("operand and operator sizes differ");
  MatPoly r(p.size());
  for (std::size_t i = 0; i < d.coeffs().size(); ++i) {
    if (d.coeffs()[i].is_zero()) continue;
    MatPoly di = p.derivative(static_cast<unsigned>(i));
    if (di.is_zero()) break;
    r += di * d.coeffs()[i];
  }
  return r;
}

// Leibniz expansion: H_m = sum_{i+k=m} sum_{j>=k} C(j,k) F_i^(j-k) G_j.
DiffOp compose(const DiffOp& d, const DiffOp& e) {
  if (d.size() != e.size()) throw SizeMismatch("operator sizes differ");
  const std::size_t n = d.size();
  if (d.is_zero() || e.is_zero()) return DiffOp(n);
  const auto& F = d.coeffs();
  const auto& G = e.coeffs();
  std::vector<MatPoly> H(F.size() + G.size() - 1, MatPoly(n));
  for (std::size_t i = 0; i < F.size(); ++i) {
    if (F[i].is_zero()) continue;
    // Derivatives of F_i up to the order of e.
    std::vector<MatPoly> dF{F[i]};
    for (std::size_t t = 1; t < G.size(); ++t) {
      dF.push_back(dF.back().derivative());
      if (dF.back().is_zero()) break;
    }
    for (std::size_t j = 0; j < G.size(); ++j) {
      if (G[j].is_zero()) continue;
      for (std::size_t k = 0; k <= j; ++k) {
        std::size_t t = j - k;
        if (t >= dF.size() || dF[t].is_zero()) continue;
        MatPoly term = dF[t] * G[j];
        if (t != 0) {
          Rat b = binomial(static_cast<unsigned>(j), static_cast<unsigned>(k));
          term = term.scaled(RatFunc(b));
        }
        H[i + k] += term;
      }
    }
  }
  return DiffOp(n, std::move(H));
}

DiffOp power(const DiffOp& d, unsigned k) {
  DiffOp r = DiffOp::identity(d.size());
  for (unsigned i = 0; i < k; ++i) r = compose(r, d);
  return r;
}

DiffOp commutator(const DiffOp& d, const DiffOp& e) { return compose(d, e) - compose(e, d); }

DiffOp tilde(const DiffOp& d) {
  if (d.size() != 2) throw SizeMismatch("tilde involution needs 2x2 operators");
  std::vector<MatPoly> c;
  c.reserve(d.coeffs().size());
  for (std::size_t i = 0; i < d.coeffs().size(); ++i) {
    MatPoly f = d.coeffs()[i].reflect().conjugate_by_T();
    c.push_back(i % 2 ? -f : f);
  }
  return DiffOp(2, std::move(c));
}

EigenPoly eigenvalue_map(const DiffOp& d) {
  const RatFunc w = RatFunc::var(Var::w);
  Mat r(d.size());
  for (std::size_t i = 0; i < d.coeffs().size(); ++i) {
    Mat fi = d.coeffs()[i].coeff(i);
    if (fi.is_zero()) continue;
    r += fi.scaled(falling_factorial(w, static_cast<unsigned>(i)));
  }
  return r;
}

int eigen_degree(const EigenPoly& m) {
  int d = INT_MIN;
  for (const auto& v : m.entries()) {
    if (v.is_zero()) continue;
    if (v.den().involves(Var::w)) throw DomainError("eigenvalue entry is not polynomial in w");
    d = std::max(d, static_cast<int>(v.num().degree_in(Var::w)));
  }
  return d;
}

Mat eigenvalue_at(const DiffOp& d, unsigned w) {
  Mat r(d.size());
  for (std::size_t i = 0; i < d.coeffs().size() && i <= w; ++i) {
    Mat fi = d.coeffs()[i].coeff(i);
    if (fi.is_zero()) continue;
    r += fi.scaled(falling_factorial(RatFunc(static_cast<long>(w)), static_cast<unsigned>(i)));
  }
  return r;
}

}  // namespace matgeg
