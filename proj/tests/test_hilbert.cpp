#include <doctest.h>

#include "arrlog/groebner.hpp"
#include "arrlog/hilbert.hpp"

using namespace arrlog;

namespace {
using FR = Ring<FpField>;

FR ring(int n) { return FR{FpField(32003), n, MonomialOrder::grevlex()}; }

FreeVector<FpField> scalarVec(const Polynomial<FpField>& p) {
  FreeVector<FpField> v(1);
  v.component(0) = p;
  return v;
}
}  // namespace

TEST_SUITE_BEGIN("hilbert");

TEST_CASE("series of a free module") {
  GradedFreeModule M(2, {0, 2});  // S + S(-2)
  HilbertSeries h = hilbertSeriesOfFree(M, 3);
  CHECK(h.valueAt(0) == 1);
  CHECK(h.valueAt(1) == 3);
  CHECK(h.valueAt(2) == 6 + 1);
  CHECK(h.valueAt(3) == 10 + 3);
  CHECK(h.supportDimension() == 3);
}

TEST_CASE("series operations") {
  HilbertSeries a;
  a.pole = 1;
  a.addTerm(0, 1);
  a.addTerm(1, -1);  // (1 - t)/(1 - t)
  a.canonicalize();
  HilbertSeries one;
  one.pole = 0;
  one.addTerm(0, 1);
  CHECK(a.equals(one));

  HilbertSeries b;
  b.pole = 0;
  b.addTerm(0, 1);
  b.shift(3);
  CHECK(b.valueAt(3) == 1);
  CHECK(b.valueAt(0) == 0);
  b.shift(-5);
  CHECK(b.valueAt(-2) == 1);

  HilbertSeries c = one;
  c.add(b);
  CHECK(c.valueAt(0) == 1);
  CHECK(c.valueAt(-2) == 1);
  c.sub(b);
  CHECK(c.equals(one));
}

TEST_CASE("artinian quotient length") {
  FR R = ring(2);
  GradedFreeModule M(1, {0});
  auto x2 = polyMonomial(R, R.var(0, 2), R.field.one());
  auto xy = polyMonomial(R, R.var(0).mul(R.var(1)), R.field.one());
  auto y2 = polyMonomial(R, R.var(1, 2), R.field.one());
  GroebnerBasis<FpField> G =
      buchberger(R, M, {scalarVec(x2), scalarVec(xy), scalarVec(y2)});
  HilbertSeries h = hilbertSeriesOfQuotient(R, G);
  h.canonicalize();
  CHECK(h.pole == 0);
  CHECK(h.valueAt(0) == 1);
  CHECK(h.valueAt(1) == 2);
  CHECK(h.valueAt(2) == 0);
  CHECK(h.supportDimension() == 0);
  CHECK(h.length() == 3);
}

TEST_CASE("length is undefined for positive dimension") {
  FR R = ring(2);
  GradedFreeModule M(1, {0});
  auto x = polyMonomial(R, R.var(0), R.field.one());
  GroebnerBasis<FpField> G = buchberger(R, M, {scalarVec(x)});
  HilbertSeries h = hilbertSeriesOfQuotient(R, G);  // S/(x), dimension 1
  CHECK(h.supportDimension() == 1);
  CHECK_THROWS_AS(h.length(), std::domain_error);

  HilbertSeries s = hilbertSeriesOfSubmodule(R, G);  // the ideal (x)
  CHECK(s.valueAt(0) == 0);
  CHECK(s.valueAt(1) == 1);
  CHECK(s.valueAt(4) == 4);
}

TEST_CASE("series string rendering") {
  HilbertSeries h;
  h.pole = 2;
  h.addTerm(0, 3);
  h.addTerm(1, -1);
  std::string s = h.str();
  CHECK(s.find('t') != std::string::npos);
  CHECK(s.find('3') != std::string::npos);
}

TEST_SUITE_END();
