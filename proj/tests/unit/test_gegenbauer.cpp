#include "common.hpp"
#include "matgeg/errors.hpp"

using namespace t;

TEST_CASE("gegenbauer polynomials") {
  const RatFunc lam = (N() + RatFunc(1)) / RatFunc(2);
  CHECK(gegenbauer_poly(-1, lam).is_zero());
  CHECK(gegenbauer_poly(0, lam) == MatPoly::identity(1));
  const RatFunc c2 = RatFunc(2) * lam * (lam + RatFunc(1));
  CHECK(gegenbauer_poly(2, lam) == MatPoly::from_entries(1, {{{-lam, RatFunc(0), c2}}}));
}

TEST_CASE("monic polynomials Q_w") {
  CHECK(monic_mop_closed(0).poly == MatPoly::identity(2));
  const MatPoly q1 = MatPoly::from_entries(
      2, {{{RatFunc(0), RatFunc(1)}, {RatFunc(1) / (P() + RatFunc(1))}},
          {{RatFunc(1) / (N() - P() + RatFunc(1))}, {RatFunc(0), RatFunc(1)}}});
  CHECK(monic_mop_closed(1).poly == q1);
  CHECK(monic_mop_coeffs(1).poly == q1);
  CHECK(monic_mop_closed(5).poly.leading_coeff() == Mat::identity(2));
  CHECK(mop_coefficient(0, 0) == Mat::identity(2));
  CHECK(mop_coefficient(1, 0) == Mat::rows({{RatFunc(0), RatFunc(1) / (P() + RatFunc(1))},
                                            {RatFunc(1) / (N() - P() + RatFunc(1)), RatFunc(0)}}));
  CHECK(mop_coefficient(2, 5).is_zero());
}

TEST_CASE("parity structure of Q_w") {
  for (unsigned w = 0; w <= 8; ++w) {
    const MatPoly q = monic_mop_closed(w).poly;
    for (unsigned k = 0; k <= w; ++k) {
      const Mat c = q.coeff(k);
      if ((w - k) % 2 == 0)
        CHECK(c.is_diagonal());
      else
        CHECK(c.is_antidiagonal());
    }
  }
}

TEST_CASE("generator eigenvalues") {
  const Generators g = build_generators();
  const Mat e2 = Mat::rows({{RatFunc(0), RatFunc(0)}, {RatFunc(0), (W() + P() + RatFunc(1)) * (W() + N() - P())}});
  CHECK(eigenvalue_map(g.d2) == e2);
  for (int i = 1; i <= 4; ++i) CHECK(eigenvalue_map(g[i]) == expected_generator_eigenvalue(i));
  CHECK(tilde(g.d4) == -g.d4);
  for (unsigned w = 0; w <= 4; ++w) {
    const MatPoly q = monic_mop_closed(w).poly;
    for (int i = 1; i <= 4; ++i) {
      auto lam = eigenvalue_if_eigenfunction(q, g[i]);
      REQUIRE(lam.has_value());
      CHECK(*lam == eigenvalue_at(g[i], w));
    }
  }
  CHECK(!eigenvalue_if_eigenfunction(monic_mop_closed(2).poly, DiffOp::term(1, MatPoly::identity(2))).has_value());
}

TEST_CASE("moments and Gram blocks") {
  CHECK(exact_moment(1, 3) == 0);
  CHECK(exact_moment(0, 1) == Rat(4, 3));
  CHECK(exact_moment(2, 1) == Rat(4, 15));
  CHECK(exact_moment(0, 0) == 2);
  CHECK(gram_entry(0, 1, 4, Rat(1)).is_zero());
  CHECK(gram_entry(1, 0, 4, Rat(1)).is_zero());
  const Mat g = gram_entry(0, 0, 4, Rat(1));
  CHECK(g(0, 0).constant_value() > 0);
  CHECK((g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0)).constant_value() > 0);
  CHECK(gram_entry(2, 3, 6, Rat(3, 2)).is_zero());
  CHECK_THROWS_AS(gram_entry(0, 0, 5, Rat(1)), DomainError);
  CHECK_THROWS_AS(gram_entry(0, 0, 4, Rat(2)), DomainError);
}
