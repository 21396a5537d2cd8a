#include <random>

#include "common.hpp"
#include "matgeg/errors.hpp"

using namespace t;

namespace {
const DWAlgebra& alg() { return symbolic_algebra(); }
RatFunc S() { return N() - RatFunc(2) * P(); }
}  // namespace

TEST_CASE("A and B reconstruct the generators") {
  const DiffOp& A = alg().A();
  const DiffOp& B = alg().B();
  CHECK((B * B - A * A + A).scaled(S() / RatFunc(2)) == alg().generator(1));
  CHECK((B * A - A * B + B).scaled(S() / RatFunc(2)) == alg().generator(4));
  CHECK((B * B * A - A * B * B).is_zero());
  CHECK((B * A * A + A * A * B - (A * B * A).scaled(2) - B).is_zero());
  CHECK((B * A * B + A * A * A - (A * B * B).scaled(2) - A).is_zero());
  // The cubic relation A and B satisfy.
  CHECK(B * B * B == A * B * A);
}

TEST_CASE("decompose") {
  const SpanDecomp d = alg().decompose(alg().generator(3) * alg().generator(4));
  CHECK(d.const_term.is_zero());
  CHECK(d.table.size() == 2);
  CHECK(d.table.at({1, 2}) == RatFunc(1));
  CHECK(d.table.at({0, 2}) == -S());
  const SpanDecomp id = alg().decompose(alg().identity());
  CHECK(id.const_term == RatFunc(1));
  CHECK(id.table.empty());
  CHECK_THROWS_AS(alg().decompose(DiffOp::term(1, MatPoly::identity(2))), NonMember);
  CHECK_THROWS_AS(alg().decompose(DiffOp::multiplication(xI())), NonMember);
}

TEST_CASE("decompose round-trips on random words") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 30; ++k) {
    const auto word = random_generator_word(rng, 1 + k % 4);
    const DiffOp d = evaluate_generator_word(word) + alg().generator(1 + k % 4).scaled(P());
    CHECK(alg().reassemble(alg().decompose(d)) == d);
  }
}

TEST_CASE("center") {
  const DiffOp& C1 = alg().C1();
  const DiffOp& C2 = alg().C2();
  CHECK((C1 * C1 * C1 - C2 * C2 - (C1 * C2).scaled(S())).is_zero());
  CHECK(alg().is_central(C2));
  CHECK(alg().is_central(alg().identity()));
  CHECK(!alg().is_central(alg().generator(1)));
  const UniPoly tt = UniPoly::t();
  CHECK(alg().center_decompose(C2) == CenterDecomp{UniPoly(), UniPoly(1)});
  CHECK(alg().center_decompose(C1 * C1) == CenterDecomp{tt * tt, UniPoly()});
  CHECK(alg().center_decompose(C1 * C2 + C1) == CenterDecomp{tt, tt});
  CHECK_THROWS_AS(alg().center_decompose(alg().generator(3)), NotCentral);
}

TEST_CASE("eigenvalue of C2 as defined") {
  const RatFunc one(1);
  const RatFunc computed = (W() + P()).pow(2) * (W() + P() + one) * (W() + N() - P()) * (W() + N() - P() + one).pow(2);
  CHECK(eigenvalue_map(alg().C2()) == Mat::scalar(2, computed));
  CHECK(alg().center_eigen2().to_ratfunc(Var::w) == computed);
}

TEST_CASE("center decomposition is unique") {
  const DiffOp& C1 = alg().C1();
  const DiffOp D = C1 * alg().C2() + C1;
  CenterDecomp c = alg().center_decompose(D);
  c.q_poly += UniPoly::monomial(RatFunc(1), 2);
  CHECK(alg().reassemble(c) != D);
}

TEST_CASE("specialised algebra agrees with the symbolic one") {
  const Bindings b{{Var::p, Rat(1, 2)}, {Var::n, Rat(7)}};
  const DWAlgebra num(b);
  CHECK(num.C1() == alg().C1().evaluate(b));
  CHECK(num.decompose(num.generator(3) * num.generator(4)).table.at({0, 2}) == RatFunc(-6));
}

TEST_CASE("bridge report shape") {
  const BridgeReport rep = hermite_bridge_check();
  REQUIRE(rep.checks.size() == 3);
  CHECK(rep.checks[0].name == "phi_xi_round_trip_A");
  CHECK(rep.checks[0].passed);
  for (const auto& c : rep.checks) CHECK(c.passed == c.residual.is_zero());
}
