#include "matgeg/unipoly.hpp"

#include <sstream>

#include "matgeg/errors.hpp"

namespace matgeg {

UniPoly::UniPoly(std::vector<RatFunc> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(const RatFunc& c) {
  if (!c.is_zero()) c_.push_back(c);
}

UniPoly UniPoly::monomial(const RatFunc& c, unsigned k) {
  std::vector<RatFunc> v(k + 1);
  v[k] = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::from_ratfunc(const RatFunc& f, Var v) {
  if (f.den().involves(v)) throw DomainError("not a polynomial in " + std::string(var_name(v)) + ": " + f.to_string());
  auto parts = f.num().coeffs_in(v);
  std::vector<RatFunc> c;
  c.reserve(parts.size());
  for (auto& part : parts) c.push_back(RatFunc::fraction(std::move(part), f.den()));
  return UniPoly(std::move(c));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<RatFunc> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      if (!b.c_[j].is_zero()) c[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(c));
}

UniPoly UniPoly::scaled(const RatFunc& s) const {
  if (s.is_zero()) return UniPoly();
  UniPoly r = *this;
  for (auto& v : r.c_) v *= s;
  return r;
}

UniPoly UniPoly::pow(unsigned k) const {
  UniPoly r(1);
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

RatFunc UniPoly::to_ratfunc(Var v) const {
  RatFunc r;
  const RatFunc t = RatFunc::var(v);
  for (std::size_t k = c_.size(); k-- > 0;) r = r * t + c_[k];
  return r;
}

std::string UniPoly::to_string(std::string_view var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << '(' << c_[k] << ')';
    if (k == 1) os << '*' << var;
    if (k > 1) os << '*' << var << '^' << k;
  }
  return os.str();
}

}  // namespace matgeg
