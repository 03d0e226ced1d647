#include <doctest.h>

#include "arrlog/ext.hpp"
#include "arrlog/resolution.hpp"

using namespace arrlog;

namespace {
using FR = Ring<FpField>;

FR ring(int n) { return FR{FpField(32003), n, MonomialOrder::grevlex()}; }

FreeVector<FpField> scalarVec(const Polynomial<FpField>& p) {
  FreeVector<FpField> v(1);
  v.component(0) = p;
  return v;
}

Presentation<FpField> residueField(const FR& R) {
  Presentation<FpField> P{GradedFreeModule(1, {0}), {}};
  for (int i = 0; i < R.nvars; ++i)
    P.relations.push_back(scalarVec(polyMonomial(R, R.var(i), R.field.one())));
  return P;
}
}  // namespace

TEST_SUITE_BEGIN("homalg");

TEST_CASE("koszul resolution of the residue field") {
  FR R = ring(3);
  FreeResolution<FpField> res = minimalFreeResolution(R, residueField(R));
  REQUIRE(res.length() == 3);
  CHECK_FALSE(res.truncated);
  CHECK(res.frees[0].rank == 1);
  CHECK(res.frees[1].rank == 3);
  CHECK(res.frees[2].rank == 3);
  CHECK(res.frees[3].rank == 1);
  CHECK(projectiveDimension(R, residueField(R)) == 3);
}

TEST_CASE("resolution truncation") {
  FR R = ring(3);
  FreeResolution<FpField> res = minimalFreeResolution(R, residueField(R), 1);
  CHECK(res.truncated);
  CHECK(res.length() == 1);
  CHECK_THROWS_AS(extModule(R, res, 1), std::invalid_argument);
  CHECK_THROWS_AS(isSpherical(R, res, 1), std::invalid_argument);
}

TEST_CASE("ext against the ring detects depth") {
  FR R = ring(3);
  FreeResolution<FpField> res = minimalFreeResolution(R, residueField(R));
  CHECK(extModule(R, res, 0).isZero());
  CHECK(extModule(R, res, 1).isZero());
  CHECK(extModule(R, res, 2).isZero());
  ExtModule<FpField> top = extModule(R, res, 3);
  CHECK_FALSE(top.isZero());
  CHECK(top.artinian());
  CHECK(top.length() == 1);
  CHECK(isSpherical(R, res, 3));
  CHECK_FALSE(isSpherical(R, res, 2));
}

TEST_CASE("dualization grading") {
  // 0 -> S(-1) -> S -> k -> 0 over one variable: Ext^1(k, S) lives in degree -1
  FR R = ring(1);
  FreeResolution<FpField> res = minimalFreeResolution(R, residueField(R));
  REQUIRE(res.length() == 1);
  ExtModule<FpField> e = extModule(R, res, 1);
  REQUIRE_FALSE(e.isZero());
  HilbertSeries expect;
  expect.pole = 0;
  expect.addTerm(-1, 1);
  CHECK(e.series.equals(expect));
  CHECK(e.length() == 1);
}

TEST_CASE("free modules have projective dimension zero") {
  FR R = ring(2);
  Presentation<FpField> P{GradedFreeModule(2, {0, 3}), {}};
  CHECK(projectiveDimension(R, P) == 0);
  CHECK(extModule(R, P, 0).isZero() == false);
  CHECK(extModule(R, P, 1).isZero());
}

TEST_CASE("pruning removes unit relations") {
  FR R = ring(2);
  Presentation<FpField> P{GradedFreeModule(2, {0, 0}), {}};
  FreeVector<FpField> rel(2);
  rel.component(0) = polyConst(R, R.field.one());
  rel.component(1) = polyConst(R, R.field.neg(R.field.one()));
  P.relations.push_back(rel);
  Presentation<FpField> Q = prunePresentation(R, P);
  CHECK(Q.gens.rank == 1);
  CHECK(Q.relations.empty());
  HilbertSeries h = hilbertSeriesOfCokernel(R, Q);
  h.canonicalize();
  CHECK(h.valueAt(0) == 1);
  CHECK(h.valueAt(1) == 2);
}

TEST_SUITE_END();
