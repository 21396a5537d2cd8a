#include "common.hpp"

using namespace t;

namespace {
const Generators& G() {
  static const Generators g = build_generators();
  return g;
}
DiffOp d_dx() { return DiffOp::term(1, MatPoly::identity(2)); }
}  // namespace

TEST_CASE("apply") {
  const MatPoly q = monic_mop_closed(3).poly;
  CHECK(apply(q, DiffOp::identity(2)) == q);
  const DiffOp& D = G().d3;
  CHECK(apply(MatPoly::identity(2), D) == D.coeff(0));
  const MatPoly q1 = monic_mop_closed(1).poly;
  const Mat lam = Mat::rows({{(RatFunc(1) + P()) * (N() - P() + RatFunc(2)), RatFunc(0)}, {RatFunc(0), RatFunc(0)}});
  CHECK(apply(q1, G().d1) == lam * q1);
  // right action: P (d F) = P' F
  CHECK(apply(xI(), DiffOp::term(1, xI())) == xI());
}

TEST_CASE("composition") {
  const MatPoly F = MatPoly::constant(Mat::rows({{P(), RatFunc(1)}, {RatFunc(0), N()}}));
  const MatPoly Gm = MatPoly::constant(Mat::rows({{RatFunc(1), RatFunc(0)}, {X(), RatFunc(2)}}));
  CHECK(DiffOp::multiplication(F) * DiffOp::multiplication(Gm) == DiffOp::multiplication(F * Gm));
  CHECK((G().d1 * G().d2).is_zero());
  const RatFunc s = N() - RatFunc(2) * P();
  CHECK(G().d4 * G().d3 == G().d1 * G().d1 + G().d1.scaled(s));
  // (D E) acts as D first
  const MatPoly q = monic_mop_closed(2).poly;
  CHECK(apply(q, G().d4 * G().d3) == apply(apply(q, G().d4), G().d3));
  CHECK(compose(G().d2, G().d3) == G().d2 * G().d3);
  CHECK(power(G().d1, 3) == G().d1 * G().d1 * G().d1);
}

TEST_CASE("tilde") {
  CHECK(tilde(G().d1) == G().d1);
  CHECK(tilde(G().d2) == G().d2);
  CHECK(tilde(G().d3) == -G().d3);
  CHECK(tilde(G().d4) == -G().d4);
  const DiffOp D = G().d3 * G().d1 + d_dx() + DiffOp::multiplication(xI());
  CHECK(tilde(tilde(D)) == D);
}

TEST_CASE("eigenvalue map") {
  CHECK(eigenvalue_map(DiffOp::identity(2)) == Mat::identity(2));
  const Mat e1 = Mat::rows({{(W() + P()) * (W() + N() - P() + RatFunc(1)), RatFunc(0)}, {RatFunc(0), RatFunc(0)}});
  CHECK(eigenvalue_map(G().d1) == e1);
  const CenterPair c = build_center();
  const RatFunc l1 = (W() + P()) * (W() + P() + RatFunc(1)) * (W() + N() - P() + RatFunc(1)) * (W() + N() - P());
  CHECK(eigenvalue_map(c.C1) == Mat::scalar(2, l1));
  CHECK(eigenvalue_at(G().d1, 1) == e1.evaluate({{Var::w, 1}}));
  CHECK(eigen_degree(eigenvalue_map(c.C1)) == 4);
}

TEST_CASE("commutator") {
  CHECK(commutator(G().d2, G().d2).is_zero());
  const CenterPair c = build_center();
  CHECK(commutator(c.C1, G().d3).is_zero());
  const RatFunc s = N() - RatFunc(2) * P();
  // D1 D3 = 0 and D3 D1 = D2 D3 - (n-2p) D3
  CHECK(commutator(G().d1, G().d3) == G().d1 * G().d3 - G().d3 * G().d1);
  CHECK(commutator(G().d1, G().d3) == -(G().d2 * G().d3) + G().d3.scaled(s));
  CHECK(!commutator(d_dx(), DiffOp::multiplication(xI())).is_zero());
}

TEST_CASE("order and degree bookkeeping") {
  for (int i = 1; i <= 4; ++i) {
    CHECK(G()[i].order() == 2);
    CHECK(G()[i].max_coeff_degree() <= 2);
  }
  CHECK(DiffOp(2).order() == DiffOp::kZeroOrder);
}
