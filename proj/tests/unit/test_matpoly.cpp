#include "common.hpp"
#include "matgeg/errors.hpp"

using namespace t;

TEST_CASE("products") {
  const MatPoly Pm = MatPoly::from_entries(2, {{{P(), X()}, {RatFunc(1)}}, {{RatFunc(0)}, {N(), RatFunc(0), X()}}});
  CHECK(Pm * MatPoly::identity(2) == Pm);
  CHECK(xI() * xI() == MatPoly::monomial(Mat::identity(2), 2));
  const MatPoly e12 = MatPoly::constant(Mat::unit(2, 0, 1));
  const MatPoly e21 = MatPoly::constant(Mat::unit(2, 1, 0));
  CHECK(e12 * e21 == MatPoly::constant(Mat::unit(2, 0, 0)));
  CHECK(e21 * e12 == MatPoly::constant(Mat::unit(2, 1, 1)));
  CHECK_THROWS_AS(Pm + MatPoly::identity(3), SizeMismatch);
}

TEST_CASE("derivative") {
  const Mat M = Mat::rows({{P(), RatFunc(1)}, {RatFunc(2), N()}});
  CHECK(MatPoly::monomial(Mat::identity(2), 2).derivative(1) == MatPoly::monomial(Mat::scalar(2, RatFunc(2)), 1));
  CHECK(MatPoly::constant(M).derivative(1).is_zero());
  CHECK(MatPoly::monomial(M, 3).derivative(2) == MatPoly::monomial(M.scaled(RatFunc(6)), 1));
}

TEST_CASE("reflection and conjugation by T") {
  const Mat M = Mat::rows({{P(), RatFunc(1)}, {RatFunc(2), N()}});
  CHECK(xI().reflect() == -xI());
  const MatPoly even = MatPoly::monomial(M, 2) + MatPoly::constant(M.transpose());
  CHECK(even.reflect() == even);
  const MatPoly any = MatPoly::monomial(M, 3) + xI() + even;
  CHECK(any.reflect().reflect() == any);
  CHECK(MatPoly::identity(2).conjugate_by_T() == MatPoly::identity(2));
  const Mat J = Mat::rows({{RatFunc(0), RatFunc(1)}, {RatFunc(1), RatFunc(0)}});
  CHECK(MatPoly::constant(J).conjugate_by_T() == MatPoly::constant(-J));
}

TEST_CASE("weight symmetry W(-x) = T W(x) T") {
  const MatPoly Wp = weight().polynomial_part;
  CHECK(Wp.reflect().conjugate_by_T() == Wp);
  CHECK(Wp == Wp.transpose());
}
