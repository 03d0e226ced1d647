#include <doctest.h>

#include <optional>
#include <random>

#include "arrlog/oracle.hpp"
#include "arrlog/verify.hpp"

using namespace arrlog;

namespace {
void requireAllPass(const std::vector<CheckResult>& results) {
  for (const auto& r : results) {
    CAPTURE(r.name);
    CAPTURE(r.detail);
    CHECK(r.pass);
  }
}
}  // namespace

TEST_SUITE_BEGIN("verify");

TEST_CASE("generic family theorem at the smallest sizes") {
  FpField f(32003);
  requireAllPass(verifyGenericTheorem(f, 4, 3));
  requireAllPass(verifyGenericTheorem(f, 5, 3));
  requireAllPass(verifyGenericTheorem(f, 5, 4));
  QField q;
  requireAllPass(verifyGenericTheorem(q, 4, 3));
}

TEST_CASE("generic family theorem input validation") {
  FpField f(32003);
  CHECK_THROWS_WITH_AS(verifyGenericTheorem(f, 3, 3), doctest::Contains("Boolean"),
                       std::invalid_argument);
  CHECK_THROWS_AS(verifyGenericTheorem(f, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(verifyGenericTheorem(f, 4, 2), std::invalid_argument);
}

TEST_CASE("relative forms additivity requires rank at least four") {
  FpField f(32003);
  Arrangement<FpField> A43 = genericArrangement(f, 4, 3);
  CHECK_THROWS_AS(relativeFormsAdditivity(A43, 3, 0), std::invalid_argument);

  Arrangement<FpField> A54 = genericArrangement(f, 5, 4);
  CheckResult r = relativeFormsAdditivity(A54, 4, 0);
  CAPTURE(r.detail);
  CHECK(r.pass);
  CHECK_THROWS_AS(relativeFormsAdditivity(A54, 4, 2), std::invalid_argument);
}

TEST_CASE("derivation and top-form sequences for generic arrangements") {
  FpField f(32003);
  for (int n = 4; n <= 6; ++n) {
    Arrangement<FpField> A = genericArrangement(f, n, 3);
    CheckResult d = relativeDerivationsAdditivity(A, n - 1);
    CAPTURE(d.detail);
    CHECK(d.pass);
    CheckResult t = topFormsSequenceCheck(A, n - 1);
    CAPTURE(t.detail);
    CHECK(t.pass);
  }
}

TEST_CASE("composite deletion-restriction driver") {
  FpField f(32003);
  Arrangement<FpField> A = genericArrangement(f, 5, 4);
  requireAllPass(verifyDeletionRestriction(A, 4, 0));
  CHECK_THROWS_AS(verifyDeletionRestriction(booleanArrangement(f, 3), 0, std::nullopt),
                  std::invalid_argument);
  CHECK_THROWS_AS(verifyDeletionRestriction(A, 9, std::nullopt), std::invalid_argument);
}

TEST_CASE("derivations split off the euler part") {
  FpField f(32003);
  CheckResult a = eulerSplitCheck(genericArrangement(f, 4, 3));
  CHECK(a.pass);
  CheckResult b = eulerSplitCheck(genericArrangement(f, 6, 3));
  CHECK(b.pass);
}

TEST_CASE("forms split off the relative part") {
  FpField f(32003);
  Arrangement<FpField> A = genericArrangement(f, 4, 3);
  for (int p = 1; p <= 3; ++p) {
    CheckResult r = formsSplitCheck(A, p);
    CAPTURE(p);
    CAPTURE(r.detail);
    CHECK(r.pass);
  }
  CHECK_THROWS_AS(formsSplitCheck(A, 0), std::invalid_argument);
}

TEST_CASE("relative derivations and forms are dual along series") {
  FpField f(32003);
  Arrangement<FpField> A = genericArrangement(f, 4, 3);
  for (int p = 1; p <= 2; ++p) {
    CheckResult r = dualitySeriesCheck(A, p);
    CAPTURE(r.detail);
    CHECK(r.pass);
  }
}

TEST_CASE("degree shift under a linear non-zerodivisor") {
  using FR = Ring<FpField>;
  FR R{FpField(32003), 1, MonomialOrder::grevlex()};
  Presentation<FpField> k{GradedFreeModule(1, {0}), {}};
  FreeVector<FpField> x(1);
  x.component(0) = polyMonomial(R, R.var(0), R.field.one());
  k.relations.push_back(x);
  requireAllPass(shiftLemmaCheck(R, k));

  FR R2{FpField(32003), 2, MonomialOrder::grevlex()};
  Presentation<FpField> m{GradedFreeModule(1, {0}), {}};
  for (int i = 0; i < 2; ++i) {
    FreeVector<FpField> v(1);
    v.component(0) = polyMonomial(R2, R2.var(i, 2), R2.field.one());
    m.relations.push_back(v);
  }
  requireAllPass(shiftLemmaCheck(R2, m));
}

TEST_CASE("ext length pairing on locally free instances") {
  FpField f(32003);
  requireAllPass(propExtCheck(genericArrangement(f, 4, 3)));
}

TEST_CASE("double-ext vanishing matches localization freeness") {
  FpField f(32003);
  CheckResult r = locallyFreeCheck(genericArrangement(f, 4, 3));
  CAPTURE(r.detail);
  CHECK(r.pass);
  CheckResult s = locallyFreeCheck(genericArrangement(f, 5, 3));
  CHECK(s.pass);
}

TEST_CASE("comparison maps are isomorphisms in the spherical range") {
  FpField f(32003);
  std::vector<CheckResult> rs = wedgeIsoRangeCheck(genericArrangement(f, 4, 3));
  requireAllPass(rs);
}

TEST_CASE("random arrangements are reduced and reproducible") {
  FpField f(32003);
  std::mt19937 g1(7), g2(7);
  Arrangement<FpField> A = randomArrangement(f, 3, 5, g1);
  Arrangement<FpField> B = randomArrangement(f, 3, 5, g2);
  CHECK(A.n() == 5);
  CHECK(A.ell() == 3);
  REQUIRE(B.n() == 5);
  for (int i = 0; i < 5; ++i) CHECK(A.rows[i] == B.rows[i]);
}

TEST_CASE("oracle equivalence on random instances") {
  FpField f(32003);
  std::mt19937 gen(11);
  for (int trial = 0; trial < 3; ++trial) {
    Arrangement<FpField> A = randomArrangement(f, 3, 4, gen);
    auto rows = compareOracle(A, -2, 2, 1);
    for (const auto& r : rows) {
      CAPTURE(trial);
      CAPTURE(r.degree);
      CHECK(r.match);
    }
  }
}

TEST_CASE("exact binomial values") {
  CHECK(binomialExact(6, 3) == 20);
  CHECK(binomialExact(4, 0) == 1);
  CHECK(binomialExact(3, 5) == 0);
  CHECK(binomialExact(40, 20) == 137846528820ll);
}

TEST_SUITE_END();
