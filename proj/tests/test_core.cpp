#include <doctest.h>

#include "arrlog/exterior.hpp"
#include "arrlog/field.hpp"
#include "arrlog/linalg.hpp"
#include "arrlog/polynomial.hpp"

using namespace arrlog;

namespace {
using FR = Ring<FpField>;

FR smallRing(int nvars, std::uint32_t p = 32003) {
  return FR{FpField(p), nvars, MonomialOrder::grevlex()};
}
}  // namespace

TEST_SUITE_BEGIN("core");

TEST_CASE("prime field arithmetic") {
  FpField f(101);
  CHECK(f.characteristic() == 101);
  for (std::uint32_t a = 1; a < 101; ++a) CHECK(f.mul(a, f.inv(a)) == f.one());
  CHECK(f.fromInt(-1) == 100);
  CHECK(f.fromRational(1, 2) == f.inv(2));
  CHECK(f.add(100, 2) == 1);
  CHECK_THROWS_AS(f.inv(0), std::domain_error);
  CHECK_THROWS_AS(FpField(100), std::invalid_argument);
}

TEST_CASE("rational field arithmetic") {
  QField f;
  CHECK(f.characteristic() == 0);
  auto half = f.fromRational(2, 4);
  CHECK(half == f.fromRational(1, 2));
  CHECK(f.isOne(f.mul(half, f.fromInt(2))));
  CHECK_THROWS_AS(f.fromRational(1, 0), std::domain_error);
}

TEST_CASE("field spec parsing") {
  CHECK(FieldSpec::parse("q").kind == FieldKind::Rational);
  CHECK(FieldSpec::parse("fp:7").prime == 7);
  CHECK(FieldSpec::parse("fp:32003").str() == "fp:32003");
  CHECK(FieldSpec::parse("q").str() == "q");
  CHECK_THROWS_AS(FieldSpec::parse("gf:4"), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec::parse("fp:0"), std::invalid_argument);
}

TEST_CASE("monomial arithmetic") {
  Monomial x = Monomial::var(3, 0), y = Monomial::var(3, 1);
  Monomial x2y = x.mul(x).mul(y);
  CHECK(x2y.deg == 3);
  CHECK(x.divides(x2y));
  CHECK_FALSE(x2y.divides(x));
  CHECK(x2y.div(x).deg == 2);
  Monomial l = x2y.lcm(y.mul(y));
  CHECK(l.e[0] == 2);
  CHECK(l.e[1] == 2);
  CHECK(Monomial::one(3).deg == 0);
}

TEST_CASE("polynomial ring operations") {
  FR R = smallRing(2);
  auto x = polyMonomial(R, R.var(0), R.field.one());
  auto y = polyMonomial(R, R.var(1), R.field.one());
  auto s = polyAdd(R, x, y);
  auto sq = polyMultiply(R, s, s);
  CHECK(sq.terms().size() == 3);  // x^2 + 2xy + y^2
  bool sawCross = false;
  for (const auto& t : sq.terms())
    if (t.m.e[0] == 1 && t.m.e[1] == 1) {
      sawCross = true;
      CHECK(t.c == 2);
    }
  CHECK(sawCross);

  auto back = exactDivide(R, sq, s);
  CHECK(polySub(R, back, s).isZero());
  CHECK_THROWS_AS(exactDivide(R, x, y), std::domain_error);

  auto d = derivative(R, polyMultiply(R, x, polyMultiply(R, x, y)), 0);  // d/dx x^2 y
  REQUIRE(d.terms().size() == 1);
  CHECK(d.terms()[0].c == 2);
  CHECK(d.terms()[0].m.e[0] == 1);
  CHECK(d.terms()[0].m.e[1] == 1);
}

TEST_CASE("dense linear algebra") {
  FpField f(32003);
  DenseMatrix<FpField> M(3, 3, f);
  // rows (1,2,3), (4,5,6), (7,8,9): rank 2, det 0
  long long vals[3][3] = {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) M.at(i, j) = f.fromInt(vals[i][j]);
  CHECK(matrixRank(f, M) == 2);
  CHECK(f.isZero(determinant(f, M)));
  auto ns = nullspaceBasis(f, M);
  CHECK(ns.size() == 1);

  DenseMatrix<FpField> I(2, 2, f);
  I.at(0, 0) = f.one();
  I.at(1, 1) = f.fromInt(2);
  CHECK(determinant(f, I) == f.fromInt(2));
  auto sol = solveExact(f, I, {f.fromInt(3), f.fromInt(4)});
  REQUIRE(sol.has_value());
  CHECK((*sol)[0] == f.fromInt(3));
  CHECK((*sol)[1] == f.fromRational(4, 2));
}

TEST_CASE("exterior index and signs") {
  ExteriorIndex i42(4, 2);
  CHECK(i42.rank() == 6);
  CHECK(subsetMasks(5, 3).size() == 10);
  CHECK(i42.indexOf(i42.masks[3]) == 3);
  CHECK_THROWS_AS(ExteriorIndex(3, 1).indexOf(1u << 2 | 1u), std::logic_error);

  // e_0 ^ e_1 = -(e_1 ^ e_0)
  CHECK(wedgeSign(1u << 0, 1u << 1) == -wedgeSign(1u << 1, 1u << 0));
  CHECK(wedgeSign((1u << 0) | (1u << 2), 1u << 1) == -1);
  // inserting below one set bit flips sign once
  CHECK(insertSign(1u << 0, 1) == -1);
  CHECK(insertSign(1u << 1, 0) == 1);
}

TEST_CASE("wedge and contraction") {
  FR R = smallRing(3);
  ExteriorIndex i1(3, 1), i2(3, 2);
  FreeVector<FpField> u(i1.rank()), v(i1.rank());
  u.component(0) = polyConst(R, R.field.one());
  v.component(1) = polyConst(R, R.field.one());
  FreeVector<FpField> w = wedge(R, i1, u, i1, v, i2);
  // e_0 ^ e_1 = +e_{01}
  int idx01 = i2.indexOf((1u << 0) | (1u << 1));
  REQUIRE(!w.component(idx01).isZero());
  CHECK(w.component(idx01).terms()[0].c == R.field.one());

  // contraction of e_{01} against c = (a, b, 0): a e_1 - b e_0
  std::vector<Polynomial<FpField>> c(3);
  c[0] = polyConst(R, R.field.fromInt(5));
  c[1] = polyConst(R, R.field.fromInt(7));
  FreeVector<FpField> z = contract(R, c, i2, w, i1);
  CHECK(z.component(i1.indexOf(1u << 1)).terms()[0].c == R.field.fromInt(5));
  CHECK(z.component(i1.indexOf(1u << 0)).terms()[0].c == R.field.fromInt(32003 - 7));
}

TEST_SUITE_END();
