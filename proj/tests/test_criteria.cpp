#include <doctest.h>

#include "arrlog/criteria.hpp"

using namespace arrlog;

namespace {
Arrangement<FpField> braidRank3(std::uint32_t p = 32003) {
  FpField f(p);
  // x, y, z, x-y, x-z, y-z
  std::vector<std::vector<FpField::Elt>> rows = {
      {1, 0, 0},          {0, 1, 0},          {0, 0, 1},
      {1, f.fromInt(-1), 0}, {1, 0, f.fromInt(-1)}, {0, 1, f.fromInt(-1)}};
  return makeArrangement(f, 3, rows);
}

// five generic rank-3 forms lifted to 4-space plus the new coordinate: the
// localization at the rank-3 center is not free, so the cone cannot be free
// at every point of the punctured spectrum
Arrangement<FpField> coneOverGeneric() {
  FpField f(32003);
  Arrangement<FpField> G = genericArrangement(f, 5, 3);
  std::vector<std::vector<FpField::Elt>> rows;
  for (const auto& r : G.rows) rows.push_back({r[0], r[1], r[2], 0});
  rows.push_back({0, 0, 0, 1});
  return makeArrangement(f, 4, rows);
}
}  // namespace

TEST_SUITE_BEGIN("criteria");

TEST_CASE("boolean arrangement is free with zero exponents") {
  FpField f(32003);
  FreenessReport rep = isFree(booleanArrangement(f, 3));
  CHECK(rep.free);
  CHECK(rep.exponents == std::vector<int>{0, 0, 0});
  CHECK(rep.saitoDeterminantChecked);
}

TEST_CASE("braid arrangement is free with exponents 0,1,2") {
  FreenessReport rep = isFree(braidRank3());
  CHECK(rep.free);
  CHECK(rep.exponents == std::vector<int>{0, 1, 2});
  CHECK(rep.saitoDeterminantChecked);
}

TEST_CASE("generic arrangements beyond boolean are not free") {
  FpField f(32003);
  for (int n = 4; n <= 6; ++n) {
    FreenessReport rep = isFree(genericArrangement(f, n, 3));
    CHECK_FALSE(rep.free);
    CHECK(rep.exponents.empty());
  }
}

TEST_CASE("rank-three arrangements are tame") {
  FpField f(32003);
  CHECK(isTame(genericArrangement(f, 5, 3)));
  CHECK(isTame(braidRank3()));
  CHECK(isTame(genericArrangement(f, 5, 4), 1));
}

TEST_CASE("freeness outside the origin") {
  FpField f(32003);
  CHECK(isFreeOutsidePoints(genericArrangement(f, 5, 3)));
  CHECK(isFreeOutsidePoints(braidRank3()));
  CHECK_FALSE(isFreeOutsidePoints(coneOverGeneric()));
}

TEST_CASE("generic jacobian quotients have embedded primes") {
  FpField f(32003);
  CHECK(jacobianPurity(genericArrangement(f, 5, 3)) == Purity::embeddedPrimes);
  CHECK(purityStr(Purity::embeddedPrimes) == std::string("embedded-primes"));
  CHECK(purityStr(Purity::pure) == std::string("pure"));
}

TEST_CASE("freeness predictor on rank-three inputs") {
  FpField f(32003);
  WakefieldVerdict v = wakefieldPredictor(genericArrangement(f, 5, 3));
  CHECK(v.eulerOK);
  CHECK(v.freeOutsidePointsOK);
  CHECK(v.pdAtMostOneOK);
  CHECK_FALSE(v.purityOK);
  CHECK(v.prediction == Prediction::notFree);
  CHECK_FALSE(v.actual);

  WakefieldVerdict w = wakefieldPredictor(braidRank3());
  CHECK(w.prediction == Prediction::free);
  CHECK(w.actual);
}

TEST_CASE("predictor handles bad characteristic") {
  // over F_3 the braid lattice has flats of size divisible by 3
  WakefieldVerdict v = wakefieldPredictor(braidRank3(3));
  CHECK_FALSE(v.eulerOK);
  CHECK(v.prediction == Prediction::inapplicable);
  CHECK(predictionStr(v.prediction) == std::string("inapplicable"));
}

TEST_CASE("comparison map is an isomorphism in the allowed range") {
  FpField f(32003);
  Arrangement<FpField> A = genericArrangement(f, 4, 3);
  ComparisonModule<FpField> c0 = comparisonModule(A, 0);
  CHECK(c0.jIsIso);
  // pd Omega^1 = 1 and 1*1 < ell-1 = 2
  ComparisonModule<FpField> c1 = comparisonModule(A, 1);
  CHECK(c1.jIsInjective);
  CHECK(c1.jIsIso);
}

TEST_SUITE_END();
