#include "matgeg/gegenbauer.hpp"

#include "matgeg/errors.hpp"

namespace matgeg {

namespace {

const RatFunc& P() {
  static const RatFunc v = RatFunc::var(Var::p);
  return v;
}
const RatFunc& N() {
  static const RatFunc v = RatFunc::var(Var::n);
  return v;
}

RatFunc rat_const(const Rat& r) { return RatFunc(r); }

RatFunc pow2(int e) {
  Rat r(1);
  if (e >= 0)
    mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<unsigned>(e));
  else
    mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<unsigned>(-e));
  return RatFunc(r);
}

using Entry = std::vector<RatFunc>;

MatPoly mp(Entry e11, Entry e12, Entry e21, Entry e22) {
  return MatPoly::from_entries(2, {{std::move(e11), std::move(e12)}, {std::move(e21), std::move(e22)}});
}

DiffOp order2(MatPoly f2, MatPoly f1, MatPoly f0) { return DiffOp(2, {std::move(f0), std::move(f1), std::move(f2)}); }

}  // namespace

WeightSpec weight(const Bindings& b) {
  const RatFunc& p = P();
  const RatFunc& n = N();
  // [[p x^2 + n - p, -n x], [-n x, (n - p) x^2 + p]]
  MatPoly part = mp({n - p, 0, p}, {0, -n}, {0, -n}, {p, 0, n - p});
  RatFunc exponent = n / RatFunc(2) - RatFunc(1);
  if (!b.empty()) {
    part = part.evaluate(b);
    exponent = exponent.evaluate(b);
  }
  return WeightSpec{b, std::move(part), std::move(exponent)};
}

MatPoly gegenbauer_poly(int m, const RatFunc& lambda) {
  if (m < 0) return MatPoly(1);
  const unsigned um = static_cast<unsigned>(m);
  std::vector<Mat> c(um + 1, Mat(1));
  for (unsigned k = 0; 2 * k <= um; ++k) {
    // (-1)^k (lambda)_{m-k} 2^{m-2k} / (k! (m-2k)!)
    RatFunc coef = pochhammer(lambda, um - k) * pow2(static_cast<int>(um - 2 * k)) /
                   rat_const(factorial(k) * factorial(um - 2 * k));
    if (k % 2) coef = -coef;
    c[um - 2 * k](0, 0) = coef;
  }
  return MatPoly(1, std::move(c));
}

MonicMOP monic_mop_closed(unsigned w) {
  const RatFunc& p = P();
  const RatFunc& n = N();
  const RatFunc lambda = (n + RatFunc(1)) / RatFunc(2);
  const RatFunc mu = (n + RatFunc(3)) / RatFunc(2);
  const RatFunc wr(static_cast<long>(w));
  const int iw = static_cast<int>(w);

  auto entry = [](const MatPoly& g) { return g.entry(0, 0); };
  auto scale = [](std::vector<RatFunc> e, const RatFunc& s) {
    for (auto& v : e) v *= s;
    return e;
  };
  auto add = [](std::vector<RatFunc> a, const std::vector<RatFunc>& b) {
    if (b.size() > a.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return a;
  };

  const RatFunc up = (n + RatFunc(1)) / (p + wr);
  const RatFunc down = (n + RatFunc(1)) / (n - p + wr);
  const auto cw = entry(gegenbauer_poly(iw, lambda));
  const auto cw1 = entry(gegenbauer_poly(iw - 1, mu));
  const auto cw2 = entry(gegenbauer_poly(iw - 2, mu));

  MatPoly q = MatPoly::from_entries(2, {{add(cw, scale(cw2, up)), scale(cw1, up)},
                                        {scale(cw1, down), add(cw, scale(cw2, down))}});
  const RatFunc prefactor = rat_const(factorial(w)) / (pow2(iw) * pochhammer(lambda, w));
  return MonicMOP{w, q.scaled(prefactor)};
}

Mat mop_coefficient(unsigned w, unsigned i) {
  if (i > w) return Mat(2);
  const RatFunc& p = P();
  const RatFunc& n = N();
  const RatFunc wr(static_cast<long>(w));
  const RatFunc half_n1 = (n + RatFunc(1)) / RatFunc(2);
  const unsigned gap = w - i;
  const unsigned k = gap / 2;
  // w! (-1)^k 2^{-2k} / (((n+1)/2 + w - k)_k k! i!)
  RatFunc s = rat_const(factorial(w)) * pow2(-2 * static_cast<int>(k)) /
              (pochhammer(half_n1 + RatFunc(static_cast<long>(w - k)), k) * rat_const(factorial(k) * factorial(i)));
  if (k % 2) s = -s;
  Mat m(2);
  if (gap % 2 == 0) {
    const RatFunc shift(static_cast<long>(w - 2 * k));
    m(0, 0) = s * (p + shift) / (p + wr);
    m(1, 1) = s * (n - p + shift) / (n - p + wr);
  } else {
    m(0, 1) = s / (p + wr);
    m(1, 0) = s / (n - p + wr);
  }
  return m;
}

MonicMOP monic_mop_coeffs(unsigned w) {
  std::vector<Mat> c;
  c.reserve(w + 1);
  for (unsigned i = 0; i <= w; ++i) c.push_back(mop_coefficient(w, i));
  return MonicMOP{w, MatPoly(2, std::move(c))};
}

const DiffOp& Generators::operator[](int i) const {
  switch (i) {
    case 1:
      return d1;
    case 2:
      return d2;
    case 3:
      return d3;
    case 4:
      return d4;
    default:
      throw DomainError("generator index must be 1..4");
  }
}

Generators build_generators() {
  const RatFunc& p = P();
  const RatFunc& n = N();
  const RatFunc one(1);
  const RatFunc two(2);
  Generators g;
  g.d1 = order2(mp({0, 0, 1}, {0, 1}, {0, -1}, {-1}),                   //
                mp({0, n + two}, {n - p + two}, {-p}, {}),               //
                mp({p * (n - p + one)}, {}, {}, {}));
  g.d2 = order2(mp({-1}, {0, -1}, {0, 1}, {0, 0, 1}),                   //
                mp({}, {p - n}, {p + two}, {0, n + two}),                //
                mp({}, {}, {}, {(p + one) * (n - p)}));
  g.d3 = order2(mp({0, -1}, {-1}, {0, 0, 1}, {0, 1}),                   //
                mp({-p}, {}, {0, two * (p + one)}, {p + two}),           //
                mp({}, {}, {p * (p + one)}, {}));
  g.d4 = order2(mp({0, 1}, {0, 0, 1}, {-1}, {0, -1}),                   //
                mp({n - p + two}, {0, two * (n - p + one)}, {}, {p - n}),  //
                mp({}, {(n - p) * (n - p + one)}, {}, {}));
  return g;
}

EigenPoly expected_generator_eigenvalue(int i) {
  const RatFunc& p = P();
  const RatFunc& n = N();
  const RatFunc w = RatFunc::var(Var::w);
  const RatFunc one(1);
  Mat m(2);
  switch (i) {
    case 1:
      m(0, 0) = (w + p) * (w + n - p + one);
      break;
    case 2:
      m(1, 1) = (w + p + one) * (w + n - p);
      break;
    case 3:
      m(1, 0) = (w + p) * (w + p + one);
      break;
    case 4:
      m(0, 1) = (w + n - p) * (w + n - p + one);
      break;
    default:
      throw DomainError("generator index must be 1..4");
  }
  return m;
}

std::optional<Mat> eigenvalue_if_eigenfunction(const MatPoly& q, const DiffOp& d) {
  if (q.is_zero()) throw DomainError("eigenfunction test on the zero polynomial");
  if (q.leading_coeff() != Mat::identity(q.size())) throw DomainError("eigenfunction test needs a monic polynomial");
  MatPoly r = apply(q, d);
  if (r.degree() > q.degree()) return std::nullopt;
  Mat lambda = r.coeff(static_cast<std::size_t>(q.degree()));
  if (lambda * q != r) return std::nullopt;
  return lambda;
}

Rat exact_moment(unsigned m, unsigned k) {
  if (m % 2) return Rat(0);
  Rat total(0);
  for (unsigned j = 0; j <= k; ++j) {
    Rat term = binomial(k, j) * Rat(2, m + 2 * j + 1);
    if (j % 2)
      total -= term;
    else
      total += term;
  }
  return total;
}

namespace {

void check_gram_parameters(long n_val, const Rat& p_val) {
  if (n_val % 2 != 0) throw DomainError("exact orthogonality needs an even n");
  if (n_val < 4) throw DomainError("exact orthogonality needs n >= 4");
  if (sgn(p_val) <= 0 || p_val >= Rat(n_val, 2)) throw DomainError("parameters must satisfy 0 < p < n/2");
}

}  // namespace

Mat weighted_inner_product(const MatPoly& lhs, const MatPoly& rhs, long n_val, const Rat& p_val) {
  check_gram_parameters(n_val, p_val);
  const Bindings b{{Var::p, p_val}, {Var::n, Rat(n_val)}};
  const unsigned k = static_cast<unsigned>(n_val / 2 - 1);
  MatPoly integrand = lhs.evaluate(b) * weight(b).polynomial_part * rhs.evaluate(b).transpose();
  Mat out(lhs.size());
  for (std::size_t m = 0; m < integrand.coeffs().size(); ++m) {
    Rat mom = exact_moment(static_cast<unsigned>(m), k);
    if (is_zero(mom)) continue;
    out += integrand.coeffs()[m].scaled(RatFunc(mom));
  }
  return out;
}

Mat gram_entry(unsigned i, unsigned j, long n_val, const Rat& p_val) {
  return weighted_inner_product(monic_mop_coeffs(i).poly, monic_mop_coeffs(j).poly, n_val, p_val);
}

}  // namespace matgeg
