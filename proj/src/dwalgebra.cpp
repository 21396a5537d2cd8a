#include "matgeg/dwalgebra.hpp"

#include "matgeg/errors.hpp"

namespace matgeg {

bool BridgeReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

DWAlgebra::DWAlgebra(Bindings bindings) : bindings_(std::move(bindings)), cache_(std::make_shared<SpanCache>()) {
  gens_ = build_generators();
  if (!bindings_.empty()) {
    gens_.d1 = gens_.d1.evaluate(bindings_);
    gens_.d2 = gens_.d2.evaluate(bindings_);
    gens_.d3 = gens_.d3.evaluate(bindings_);
    gens_.d4 = gens_.d4.evaluate(bindings_);
  }
  shift_ = bind(RatFunc::var(Var::n) - RatFunc(2) * RatFunc::var(Var::p));
  if (shift_.is_zero()) throw DivisionByZero("n - 2p vanishes at the given bindings");
  id_ = DiffOp::identity(2);
  const RatFunc inv = shift_.inverse();
  a_ = (gens_.d1 + gens_.d2).scaled(inv);
  b_ = (gens_.d3 + gens_.d4).scaled(inv);
  const DiffOp s34 = gens_.d3 + gens_.d4;
  c1_ = s34 * s34;
  c2_ = gens_.d3 * gens_.d1 * gens_.d4 + gens_.d4 * (gens_.d2 - id_.scaled(shift_)) * gens_.d3;
  p1_ = UniPoly::from_ratfunc(eigenvalue_map(c1_)(0, 0), Var::w);
  p2_ = UniPoly::from_ratfunc(eigenvalue_map(c2_)(0, 0), Var::w);
}

DiffOp DWAlgebra::span_element(unsigned i, int j) const {
  if (j < 1 || j > 4) throw DomainError("span index j must be 1..4");
  std::lock_guard lock(cache_->mu);
  auto& rows = cache_->rows;
  if (rows.empty()) rows.push_back({gens_.d1, gens_.d2, gens_.d3, gens_.d4});
  const DiffOp s = gens_.d1 + gens_.d2;
  while (rows.size() <= i) {
    const auto& last = rows.back();
    rows.push_back({s * last[0], s * last[1], s * last[2], s * last[3]});
  }
  return rows[i][static_cast<std::size_t>(j - 1)];
}

SpanDecomp DWAlgebra::decompose(const DiffOp& d) const {
  if (d.size() != 2) throw NonMember("only 2x2 operators can belong to D(W)");
  SpanDecomp out;
  DiffOp r = d;
  while (!r.is_zero()) {
    const int s = r.order();
    const MatPoly& top = r.leading_coeff();
    if (s == 0) {
      if (top.degree() != 0 || !top.coeff(0).is_scalar())
        throw NonMember("order-0 residual is not a scalar matrix: " + top.to_string());
      out.const_term += top.coeff(0)(0, 0);
      break;
    }
    if (s % 2 != 0) throw NonMember("residual has odd order " + std::to_string(s));
    if (top.degree() != s)
      throw NonMember("leading coefficient of the order-" + std::to_string(s) + " residual has degree " +
                      std::to_string(top.degree()));
    const Mat lead = top.coeff(static_cast<std::size_t>(s));
    const unsigned k = static_cast<unsigned>(s / 2 - 1);
    // (F_s^s)_11 D1 + (F_s^s)_22 D2 + (F_s^s)_21 D3 + (F_s^s)_12 D4
    const std::array<RatFunc, 4> c = {lead(0, 0), lead(1, 1), lead(1, 0), lead(0, 1)};
    DiffOp strip(2);
    for (int j = 1; j <= 4; ++j) {
      const RatFunc& cj = c[static_cast<std::size_t>(j - 1)];
      if (cj.is_zero()) continue;
      out.table[{k, j}] = cj;
      strip += span_element(k, j).scaled(cj);
    }
    r -= strip;
    if (!r.is_zero() && r.order() >= s)
      throw NonMember("order-" + std::to_string(s) + " part is not spanned by (D1+D2)^k D_j");
  }
  return out;
}

DiffOp DWAlgebra::reassemble(const SpanDecomp& s) const {
  DiffOp r = id_.scaled(s.const_term);
  for (const auto& [key, c] : s.table) r += span_element(key.first, key.second).scaled(c);
  return r;
}

bool DWAlgebra::is_member(const DiffOp& d) const {
  try {
    decompose(d);
    return true;
  } catch (const NonMember&) {
    return false;
  }
}

bool DWAlgebra::is_central(const DiffOp& d) const {
  for (int j = 1; j <= 4; ++j)
    if (!commutator(d, gens_[j]).is_zero()) return false;
  return true;
}

// Greedy reduction of the scalar eigenvalue polynomial: a degree-s leading
// term is matched by p1^{s1} p2^{s2} with 4 s1 + 6 s2 = s, s2 in {0, 1}.
CenterDecomp DWAlgebra::center_decompose(const DiffOp& d) const {
  if (!is_central(d)) throw NotCentral("operator does not commute with D1..D4");
  const EigenPoly lam = eigenvalue_map(d);
  if (!lam.is_scalar()) throw DecompositionFailure("eigenvalue of a central operator is not scalar");
  UniPoly rest = UniPoly::from_ratfunc(lam(0, 0), Var::w);
  std::vector<RatFunc> pc, qc;
  auto add_at = [](std::vector<RatFunc>& v, unsigned k, const RatFunc& c) {
    if (v.size() <= k) v.resize(k + 1);
    v[k] += c;
  };
  while (!rest.is_zero()) {
    const int s = rest.degree();
    if (s == 0) {
      add_at(pc, 0, rest.coeff(0));
      break;
    }
    if (s % 2 != 0 || s == 2)
      throw DecompositionFailure("eigenvalue residual of degree " + std::to_string(s) + " is not in C[p1, p2]");
    unsigned s1 = 0, s2 = 0;
    if (s % 4 == 0) {
      s1 = static_cast<unsigned>(s / 4);
    } else {
      s1 = static_cast<unsigned>((s - 6) / 4);
      s2 = 1;
    }
    UniPoly basis = p1_.pow(s1);
    if (s2) basis = basis * p2_;
    const RatFunc c = rest.leading_coeff() / basis.leading_coeff();
    add_at(s2 ? qc : pc, s1, c);
    rest -= basis.scaled(c);
    if (rest.degree() >= s) throw DecompositionFailure("leading term did not cancel");
  }
  CenterDecomp out{UniPoly(std::move(pc)), UniPoly(std::move(qc))};
  if (reassemble(out) != d)
    throw DecompositionFailure("p(C1) + q(C1) C2 does not reproduce the operator; it is not in the center of D(W)");
  return out;
}

DiffOp DWAlgebra::reassemble(const CenterDecomp& c) const {
  auto eval = [&](const UniPoly& poly) {
    DiffOp r(2);
    DiffOp pw = id_;
    for (std::size_t k = 0; k < poly.coeffs().size(); ++k) {
      if (k > 0) pw = pw * c1_;
      if (!poly.coeffs()[k].is_zero()) r += pw.scaled(poly.coeffs()[k]);
    }
    return r;
  };
  DiffOp r = eval(c.p_poly);
  if (!c.q_poly.is_zero()) r += eval(c.q_poly) * c2_;
  return r;
}

const DWAlgebra& symbolic_algebra() {
  static const DWAlgebra alg;
  return alg;
}

ABPair build_AB() { return {symbolic_algebra().A(), symbolic_algebra().B()}; }

CenterPair build_center() { return {symbolic_algebra().C1(), symbolic_algebra().C2()}; }

BridgeReport hermite_bridge_check() {
  const DWAlgebra& alg = symbolic_algebra();
  const DiffOp& A = alg.A();
  const DiffOp& B = alg.B();
  const DiffOp& I = alg.identity();
  const RatFunc a = RatFunc::var(Var::a);
  const RatFunc a2 = a * a;
  const RatFunc a4 = a2 * a2;
  auto k = [](long v) { return RatFunc(v); };

  const DiffOp E = A - I.scaled(k(2) / a2);
  const DiffOp F = B.scaled(k(4) + a4) + commutator(B, A).scaled(k(4) - a4);
  const DiffOp EF = E * F;
  const DiffOp K = EF - F * E;  // [E, F]
  const DiffOp E2 = E * E;
  const DiffOp F2 = F * F;

  BridgeReport report;

  // phi(A) = E + 2I/|a|^2 must give back A.
  {
    DiffOp res = E + I.scaled(k(2) / a2) - A;
    report.checks.push_back({"phi_xi_round_trip_A", res.is_zero(), res});
  }

  // Corrected relation (112).
  {
    const RatFunc c1 = k(4) * a * (a - k(4));
    const RatFunc c2 = k(8) * (a - k(2));
    DiffOp rel = F2 * F + F2 * K - (E2 * F).scaled(k(4) * a2) - (E2 * K).scaled(k(4) * a2) + EF.scaled(c1) +
                 (E * K).scaled(c1) + F.scaled(c2) + K.scaled(c2);
    report.checks.push_back({"hermite_relation_112", rel.is_zero(), rel});
  }

  // Corrected relation (110).
  {
    const DiffOp E3 = E2 * E;
    const DiffOp E4 = E3 * E;
    DiffOp rel = (F2 * F2).scaled(RatFunc(Rat(1, 16))) - (F2 * E2).scaled(a2 / k(2)) - (F2 * E).scaled(k(2) * a) -
                 F2.scaled(k(2)) + E4.scaled(a4) + E3.scaled(k(8) * a2 * a) - E2.scaled(a2 * (a2 - k(24))) -
                 E.scaled(k(4) * a * (a2 - k(8))) - I.scaled(k(4) * (a2 - k(4)));
    report.checks.push_back({"hermite_relation_110", rel.is_zero(), rel});
  }
  return report;
}

}  // namespace matgeg
