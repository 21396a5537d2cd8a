#include "matgeg/ratfunc.hpp"

#include <cctype>
#include <ostream>

#include "matgeg/errors.hpp"

namespace matgeg {

namespace {

void make_den_monic(MPoly& num, MPoly& den) {
  const Rat& lc = den.leading_coeff();
  if (lc == 1) return;
  Rat inv = 1 / lc;
  num = num.scaled(inv);
  den = den.scaled(inv);
}

MPoly divide(const MPoly& f, const MPoly& g) {
  if (g.is_one()) return f;
  return f.exact_div(g).value();
}

}  // namespace

RatFunc RatFunc::fraction(MPoly num, MPoly den) {
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  RatFunc r;
  if (num.is_zero()) return r;
  if (!den.is_constant()) {
    MPoly g = gcd(num, den);
    if (!g.is_one()) {
      num = divide(num, g);
      den = divide(den, g);
    }
  }
  make_den_monic(num, den);
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  return r;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

// Henrici-style addition: with a/b, c/d reduced and g = gcd(b, d), the sum
// t / (b d / g) can only be reduced by factors of g.
RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  if (o.den_.is_one()) {
    num_ += o.num_ * den_;
    return *this;
  }
  if (den_.is_one()) {
    num_ = num_ * o.den_ + o.num_;
    den_ = o.den_;
    return *this;
  }
  if (den_ == o.den_) {
    MPoly t = num_ + o.num_;
    return *this = fraction(std::move(t), den_);
  }
  MPoly g = gcd(den_, o.den_);
  if (g.is_one()) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    return *this;
  }
  MPoly b1 = divide(den_, g);
  MPoly d1 = divide(o.den_, g);
  MPoly t = num_ * d1 + o.num_ * b1;
  if (t.is_zero()) return *this = RatFunc();
  MPoly h = gcd(t, g);
  num_ = divide(t, h);
  den_ = b1 * d1 * divide(g, h);
  make_den_monic(num_, den_);
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) return *this = RatFunc();
  if (o.is_constant()) {
    num_ = num_.scaled(o.num_.constant_value());
    return *this;
  }
  if (is_constant()) {
    Rat c = num_.constant_value();
    *this = o;
    num_ = num_.scaled(c);
    return *this;
  }
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    return *this;
  }
  MPoly a = num_, b = den_;
  MPoly c = o.num_, d = o.den_;
  if (!d.is_one()) {
    MPoly g1 = gcd(a, d);
    if (!g1.is_one()) {
      a = divide(a, g1);
      d = divide(d, g1);
    }
  }
  if (!b.is_one()) {
    MPoly g2 = gcd(c, b);
    if (!g2.is_one()) {
      c = divide(c, g2);
      b = divide(b, g2);
    }
  }
  num_ = a * c;
  den_ = b * d;
  make_den_monic(num_, den_);
  return *this;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero rational function");
  RatFunc r;
  r.num_ = den_;
  r.den_ = num_;
  make_den_monic(r.num_, r.den_);
  return r;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::pow(unsigned k) const {
  RatFunc r;
  r.num_ = num_.pow(k);
  r.den_ = den_.pow(k);
  return r;
}

RatFunc RatFunc::evaluate(const Bindings& b) const {
  MPoly d = den_.substitute(b);
  if (d.is_zero()) throw DivisionByZero("binding annihilates the denominator of " + to_string());
  return fraction(num_.substitute(b), std::move(d));
}

std::string RatFunc::to_string() const {
  if (den_.is_one()) return num_.to_string();
  std::string n = num_.to_string();
  if (num_.size() > 1) n = "(" + n + ")";
  std::string d = den_.to_string();
  if (den_.size() > 1 || d.find('*') != std::string::npos) d = "(" + d + ")";
  return n + "/" + d;
}

std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.to_string(); }

RatFunc pochhammer(const RatFunc& base, unsigned k) {
  RatFunc r(1);
  for (unsigned j = 0; j < k; ++j) r *= base + RatFunc(static_cast<long>(j));
  return r;
}

RatFunc falling_factorial(const RatFunc& nu, unsigned i) {
  RatFunc r(1);
  for (unsigned j = 0; j < i; ++j) r *= nu - RatFunc(static_cast<long>(j));
  return r;
}

// ---------------------------------------------------------------------------
// Parser: expr := term (('+'|'-') term)* ; term := unary (('*'|'/') unary)* ;
// unary := ('+'|'-') unary | power ; power := atom ('^' integer)? ;
// atom := integer | identifier | '(' expr ')'

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  RatFunc parse_all() {
    RatFunc r = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RatFunc expr() {
    RatFunc r = term();
    for (;;) {
      if (accept('+'))
        r += term();
      else if (accept('-'))
        r -= term();
      else
        return r;
    }
  }

  RatFunc term() {
    RatFunc r = unary();
    for (;;) {
      if (accept('*')) {
        r *= unary();
      } else if (accept('/')) {
        RatFunc d = unary();
        if (d.is_zero()) fail("division by zero");
        r /= d;
      } else {
        return r;
      }
    }
  }

  RatFunc unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RatFunc power() {
    RatFunc base = atom();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected integer exponent");
      unsigned long e = std::stoul(std::string(s_.substr(start, pos_ - start)));
      if (e > Monomial::kMaxExp) fail("exponent too large");
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  RatFunc atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RatFunc r = expr();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return RatFunc(Rat(BigInt(std::string(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      auto name = s_.substr(start, pos_ - start);
      auto v = var_from_name(name);
      if (!v) fail("unknown indeterminate '" + std::string(name) + "'");
      return RatFunc::var(*v);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

RatFunc RatFunc::parse(std::string_view text) { return Parser(text).parse_all(); }

}  // namespace matgeg
