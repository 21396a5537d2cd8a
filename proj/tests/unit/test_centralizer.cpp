#include "common.hpp"
#include "matgeg/errors.hpp"

using namespace t;

namespace {
const DWAlgebra& alg() { return symbolic_algebra(); }

std::vector<DiffOp> span_to_order(unsigned s) {
  std::vector<DiffOp> v{alg().identity()};
  for (unsigned i = 0; 2 * (i + 1) <= s; ++i)
    for (int j = 1; j <= 4; ++j) v.push_back(alg().span_element(i, j));
  return v;
}
}  // namespace

TEST_CASE("nullspace") {
  std::vector<std::vector<Rat>> m{{1, 2, 3}, {2, 4, 6}};
  const auto ns = nullspace(m);
  CHECK(ns.size() == 2);
  for (const auto& v : ns) CHECK(v[0] + 2 * v[1] + 3 * v[2] == 0);
  std::vector<std::vector<RatFunc>> s{{P(), N()}, {P() * P(), P() * N()}};
  const auto ns2 = nullspace(s);
  REQUIRE(ns2.size() == 1);
  CHECK(P() * ns2[0][0] + N() * ns2[0][1] == RatFunc(0));
}

TEST_CASE("everything commutes with the identity") {
  const SolutionSpace sol = centralizer_truncated({DiffOp::identity(2)}, 0, 0);
  CHECK(sol.dimension == 4);
  CHECK(!sol.numeric_specialized);
}

TEST_CASE("order 2 part is spanned by I, D1..D4") {
  const SolutionSpace sol = centralizer_truncated({alg().C1()}, 2, 6);
  CHECK(sol.dimension == 5);
  std::vector<DiffOp> both = span_to_order(2);
  CHECK(rank(both) == 5);
  both.insert(both.end(), sol.basis.begin(), sol.basis.end());
  CHECK(rank(both) == 5);
  for (unsigned d : {2u, 4u}) CHECK(centralizer_truncated({alg().C1()}, 2, d).dimension == 5);
}

TEST_CASE("order 4 against the spanning-set rank") {
  const std::size_t oracle = rank(span_to_order(4));
  CHECK(oracle == 9);
  const SolutionSpace sol = centralizer_truncated({alg().C1()}, 4, 8);
  CHECK(sol.dimension == oracle);
  for (const auto& b : sol.basis) CHECK(alg().is_member(b));
  CHECK(centralizer_truncated({alg().C1(), alg().C2()}, 4, 8).dimension == oracle);
}

TEST_CASE("resource guard and numeric fallback") {
  CentralizerOptions strict;
  strict.term_limit = 1;
  strict.allow_fallback = false;
  CHECK_THROWS_AS(centralizer_truncated({alg().C1()}, 2, 4, strict), ResourceLimit);

  CentralizerOptions fb;
  fb.term_limit = 1;
  const SolutionSpace sol = centralizer_truncated({alg().C1()}, 2, 4, fb);
  CHECK(sol.numeric_specialized);
  CHECK(sol.dimension == 5);
  CHECK(sol.specialized_dims.size() >= 3);
  const Rat p = sol.bindings.at(Var::p), n = sol.bindings.at(Var::n);
  CHECK(p > 0);
  CHECK(2 * p < n);
  const DiffOp c1 = alg().C1().evaluate(sol.bindings);
  for (const auto& b : sol.basis) CHECK(commutator(b, c1).is_zero());
}

TEST_CASE("membership cross-check") {
  const MembershipReport d3 = membership_cross_check(alg().generator(3), 6);
  CHECK(d3.agree());
  CHECK(d3.decompose_member);
  const MembershipReport dx = membership_cross_check(DiffOp::term(1, MatPoly::identity(2)), 6);
  CHECK(dx.agree());
  CHECK(!dx.decompose_member);
  const MembershipReport xi = membership_cross_check(DiffOp::multiplication(xI()), 6);
  CHECK(xi.agree());
  CHECK(!xi.commutes_with_center);
}
