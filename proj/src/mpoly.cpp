#include "matgeg/mpoly.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <utility>

#include "matgeg/errors.hpp"

namespace matgeg {

namespace {

constexpr std::array<std::string_view, kNumVars> kVarNames = {"p", "n", "a", "w", "x", "alpha"};

unsigned shift_of(Var v) { return Monomial::kBits * static_cast<unsigned>(v); }

bool mono_greater(const MPoly::Term& a, const MPoly::Term& b) { return a.mono > b.mono; }

}  // namespace

std::string_view var_name(Var v) { return kVarNames[static_cast<unsigned>(v)]; }

std::optional<Var> var_from_name(std::string_view name) {
  for (Var v : kAllVars)
    if (kVarNames[static_cast<unsigned>(v)] == name) return v;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::of(Var v, unsigned e) {
  if (e > kMaxExp) throw ResourceLimit("exponent exceeds monomial capacity");
  return Monomial((std::uint64_t{e} << shift_of(v)) | (std::uint64_t{e} << kDegShift));
}

std::uint8_t Monomial::var_mask() const {
  std::uint8_t m = 0;
  for (Var v : kAllVars)
    if (exp(v) != 0) m |= static_cast<std::uint8_t>(1u << static_cast<unsigned>(v));
  return m;
}

bool Monomial::divides(Monomial other) const {
  if (degree() > other.degree()) return false;
  for (Var v : kAllVars)
    if (exp(v) > other.exp(v)) return false;
  return true;
}

Monomial Monomial::operator*(Monomial other) const {
  for (Var v : kAllVars)
    if (exp(v) + other.exp(v) > kMaxExp) throw ResourceLimit("exponent overflow in monomial product");
  if (degree() + other.degree() >= (1u << (64 - kDegShift)))
    throw ResourceLimit("total degree overflow in monomial product");
  return Monomial(key_ + other.key_);
}

Monomial Monomial::quotient_of(Monomial num) const { return Monomial(num.key_ - key_); }

Monomial Monomial::without(Var v) const {
  unsigned e = exp(v);
  return Monomial(key_ - (std::uint64_t{e} << shift_of(v)) - (std::uint64_t{e} << kDegShift));
}

// ---------------------------------------------------------------------------
// MPoly

MPoly::MPoly(long c) {
  if (c != 0) terms_.push_back({Monomial(), Rat(c)});
}

MPoly::MPoly(const Rat& c) {
  if (!matgeg::is_zero(c)) terms_.push_back({Monomial(), c});
}

MPoly::MPoly(const Rat& c, Monomial m) {
  if (!matgeg::is_zero(c)) terms_.push_back({m, c});
}

MPoly MPoly::var(Var v) { return MPoly(Rat(1), Monomial::of(v)); }

MPoly MPoly::from_terms(std::vector<Term> terms) {
  MPoly r;
  r.terms_ = std::move(terms);
  r.canonicalize();
  return r;
}

void MPoly::canonicalize() {
  std::sort(terms_.begin(), terms_.end(), mono_greater);
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms_.size();) {
    std::size_t j = i + 1;
    Rat c = std::move(terms_[i].coeff);
    while (j < terms_.size() && terms_[j].mono == terms_[i].mono) {
      c += terms_[j].coeff;
      ++j;
    }
    if (!matgeg::is_zero(c)) {
      terms_[out].mono = terms_[i].mono;
      terms_[out].coeff = std::move(c);
      ++out;
    }
    i = j;
  }
  terms_.resize(out);
}

bool MPoly::is_one() const { return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff == 1; }

Rat MPoly::constant_value() const {
  if (terms_.empty()) return Rat(0);
  if (!is_constant()) throw DomainError("polynomial is not constant: " + to_string());
  return terms_[0].coeff;
}

unsigned MPoly::degree_in(Var v) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exp(v));
  return d;
}

std::uint8_t MPoly::var_mask() const {
  std::uint8_t m = 0;
  for (const auto& t : terms_) m |= t.mono.var_mask();
  return m;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

// Merge two canonical term lists; sign = +1 or -1 applied to b.
std::vector<MPoly::Term> merge_terms(const std::vector<MPoly::Term>& a, const std::vector<MPoly::Term>& b,
                                     bool subtract) {
  std::vector<MPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].mono > b[j].mono) {
      out.push_back(a[i++]);
    } else if (b[j].mono > a[i].mono) {
      out.push_back(subtract ? MPoly::Term{b[j].mono, -b[j].coeff} : b[j]);
      ++j;
    } else {
      Rat c = subtract ? Rat(a[i].coeff - b[j].coeff) : Rat(a[i].coeff + b[j].coeff);
      if (!is_zero(c)) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(subtract ? MPoly::Term{b[j].mono, -b[j].coeff} : b[j]);
  return out;
}

}  // namespace

MPoly& MPoly::operator+=(const MPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  terms_ = merge_terms(terms_, o.terms_, false);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  if (o.is_zero()) return *this;
  terms_ = merge_terms(terms_, o.terms_, true);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return MPoly();
  if (a.size() == 1) return b.shifted(a.terms_[0].mono).scaled(a.terms_[0].coeff);
  if (b.size() == 1) return a.shifted(b.terms_[0].mono).scaled(b.terms_[0].coeff);
  std::vector<MPoly::Term> prods;
  prods.reserve(a.size() * b.size());
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) prods.push_back({ta.mono * tb.mono, ta.coeff * tb.coeff});
  return MPoly::from_terms(std::move(prods));
}

MPoly MPoly::scaled(const Rat& c) const {
  if (matgeg::is_zero(c)) return MPoly();
  if (c == 1) return *this;
  MPoly r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

MPoly MPoly::shifted(Monomial m) const {
  if (m.is_one()) return *this;
  MPoly r = *this;
  for (auto& t : r.terms_) t.mono = t.mono * m;
  return r;
}

MPoly MPoly::pow(unsigned k) const {
  MPoly result(1);
  MPoly base = *this;
  while (k != 0) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k != 0) base = base * base;
  }
  return result;
}

std::optional<MPoly> MPoly::exact_div(const MPoly& d) const {
  if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (is_zero()) return MPoly();
  if (d.is_constant()) return scaled(1 / d.constant_value());
  for (Var v : kAllVars)
    if (d.degree_in(v) > degree_in(v)) return std::nullopt;
  const Term& lead = d.leading();
  std::vector<Term> quotient;
  MPoly rem = *this;
  while (!rem.is_zero()) {
    const Term& lt = rem.leading();
    if (!lead.mono.divides(lt.mono)) return std::nullopt;
    Monomial m = lead.mono.quotient_of(lt.mono);
    Rat c = lt.coeff / lead.coeff;
    rem -= d.shifted(m).scaled(c);
    quotient.push_back({m, std::move(c)});
  }
  MPoly q;
  q.terms_ = std::move(quotient);
  return q;
}

MPoly MPoly::monic() const {
  if (is_zero() || leading_coeff() == 1) return *this;
  return scaled(1 / leading_coeff());
}

std::vector<MPoly> MPoly::coeffs_in(Var v) const {
  std::vector<MPoly> out(degree_in(v) + 1);
  // Stripping v from terms with equal v-exponent preserves their relative order.
  for (const auto& t : terms_) out[t.mono.exp(v)].terms_.push_back({t.mono.without(v), t.coeff});
  return out;
}

MPoly MPoly::from_coeffs_in(Var v, const std::vector<MPoly>& coeffs) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    Monomial m = k == 0 ? Monomial() : Monomial::of(v, static_cast<unsigned>(k));
    for (const auto& t : coeffs[k].terms_) terms.push_back({t.mono * m, t.coeff});
  }
  return from_terms(std::move(terms));
}

MPoly MPoly::substitute(const Bindings& b) const {
  if (b.empty()) return *this;
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    Rat c = t.coeff;
    Monomial m = t.mono;
    for (const auto& [v, val] : b) {
      unsigned e = m.exp(v);
      if (e == 0) continue;
      Rat pw;
      mpz_pow_ui(pw.get_num_mpz_t(), val.get_num_mpz_t(), e);
      mpz_pow_ui(pw.get_den_mpz_t(), val.get_den_mpz_t(), e);
      c *= pw;
      m = m.without(v);
    }
    terms.push_back({m, std::move(c)});
  }
  return from_terms(std::move(terms));
}

MPoly MPoly::derivative(Var v) const {
  std::vector<Term> terms;
  Monomial one_v = Monomial::of(v);
  for (const auto& t : terms_) {
    unsigned e = t.mono.exp(v);
    if (e == 0) continue;
    terms.push_back({one_v.quotient_of(t.mono), t.coeff * e});
  }
  return from_terms(std::move(terms));
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rat c = t.coeff;
    bool neg = sgn(c) < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool unit = c == 1;
    if (!unit || t.mono.is_one()) os << c.get_str();
    bool need_star = !unit;
    for (Var v : kAllVars) {
      unsigned e = t.mono.exp(v);
      if (e == 0) continue;
      if (need_star) os << '*';
      os << var_name(v);
      if (e > 1) os << '^' << e;
      need_star = true;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// gcd: recursive content / primitive-part reduction with a primitive
// pseudo-remainder sequence in the highest variable.

namespace {

MPoly leading_coeff_in(const MPoly& f, Var v) { return f.coeffs_in(v).back(); }

MPoly content_in(const MPoly& f, Var v) {
  auto coeffs = f.coeffs_in(v);
  MPoly g;
  // Start from the smallest coefficients; they tend to end the loop early.
  std::sort(coeffs.begin(), coeffs.end(), [](const MPoly& a, const MPoly& b) { return a.size() < b.size(); });
  for (const auto& c : coeffs) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) return MPoly(1);
  }
  return g;
}

MPoly primitive_part_in(const MPoly& f, Var v) {
  if (f.is_zero()) return f;
  MPoly c = content_in(f, v);
  if (c.is_constant()) return f.monic();
  return f.exact_div(c).value().monic();
}

MPoly pseudo_remainder(MPoly a, const MPoly& b, Var v) {
  unsigned db = b.degree_in(v);
  MPoly lb = leading_coeff_in(b, v);
  while (!a.is_zero() && a.degree_in(v) >= db) {
    unsigned da = a.degree_in(v);
    MPoly la = leading_coeff_in(a, v);
    Monomial shift = da == db ? Monomial() : Monomial::of(v, da - db);
    a = a * lb - (b * la).shifted(shift);
  }
  return a;
}

MPoly univariate_remainder(MPoly a, const MPoly& b) {
  const auto& lb = b.leading();
  while (!a.is_zero() && lb.mono.divides(a.leading().mono)) {
    Monomial m = lb.mono.quotient_of(a.leading().mono);
    Rat c = a.leading_coeff() / lb.coeff;
    a -= b.shifted(m).scaled(c);
  }
  return a;
}

Var highest_var(std::uint8_t mask) { return static_cast<Var>(std::bit_width(static_cast<unsigned>(mask)) - 1); }

}  // namespace

MPoly gcd(const MPoly& f, const MPoly& g) {
  if (f.is_zero()) return g.monic();
  if (g.is_zero()) return f.monic();
  if (f.is_constant() || g.is_constant()) return MPoly(1);
  if (f == g) return f.monic();

  const std::uint8_t mf = f.var_mask();
  const std::uint8_t mg = g.var_mask();
  if ((mf & mg) == 0) {
    // Disjoint variable sets: any common factor would be a constant.
    return MPoly(1);
  }
  const MPoly& small = f.size() <= g.size() ? f : g;
  const MPoly& large = f.size() <= g.size() ? g : f;
  if (large.exact_div(small)) return small.monic();

  const std::uint8_t mask = mf | mg;
  Var v = highest_var(mask);
  if (!f.involves(v)) return gcd(f, content_in(g, v));
  if (!g.involves(v)) return gcd(content_in(f, v), g);

  if (std::popcount(static_cast<unsigned>(mask)) == 1) {
    MPoly a = f.monic(), b = g.monic();
    if (a.total_degree() < b.total_degree()) std::swap(a, b);
    while (!b.is_zero()) {
      MPoly r = univariate_remainder(a, b);
      a = std::move(b);
      b = r.monic();
    }
    return a.monic();
  }

  MPoly cf = content_in(f, v);
  MPoly cg = content_in(g, v);
  MPoly a = cf.is_constant() ? f : f.exact_div(cf).value();
  MPoly b = cg.is_constant() ? g : g.exact_div(cg).value();
  MPoly c = gcd(cf, cg);
  if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
  MPoly h;
  for (;;) {
    MPoly r = pseudo_remainder(a, b, v);
    if (r.is_zero()) {
      h = primitive_part_in(b, v);
      break;
    }
    if (r.degree_in(v) == 0) {
      h = MPoly(1);
      break;
    }
    a = std::move(b);
    b = primitive_part_in(r, v);
  }
  return (c * h).monic();
}

}  // namespace matgeg
