#include <doctest.h>

#include "arrlog/genfun.hpp"
#include "arrlog/verify.hpp"

using namespace arrlog;

namespace {
LaurentPoly mkLp(std::vector<std::pair<int, long long>> terms) {
  LaurentPoly out;
  for (auto [e, c] : terms) out.add(e, c);
  return out;
}

LaurentPoly seriesToLaurent(const HilbertSeries& h) {
  HilbertSeries c = h;
  c.canonicalize();
  REQUIRE(c.pole == 0);
  LaurentPoly out;
  for (const auto& [e, v] : c.numer) out.add(e, v);
  return out;
}

long long coeffSum(const LaurentPoly& p) {
  long long s = 0;
  for (const auto& [e, c] : p.coeff) s += c;
  return s;
}
}  // namespace

TEST_SUITE_BEGIN("genfun");

TEST_CASE("rank-three closed form at small counts") {
  CHECK(seriesToLaurent(qRank3(4)) == mkLp({{-1, 1}}));
  CHECK(seriesToLaurent(qRank3(5)) == mkLp({{-1, 2}, {0, 2}}));
  CHECK(seriesToLaurent(qRank3(6)) == mkLp({{-1, 3}, {0, 4}, {1, 3}}));
  CHECK_THROWS_AS(qRank3(3), std::invalid_argument);
}

TEST_CASE("rank-three total mass is a binomial coefficient") {
  for (int n = 4; n <= 20; ++n) {
    long long expect = (long long)(n - 1) * (n - 2) * (n - 3) / 6;
    CHECK(coeffSum(seriesToLaurent(qRank3(n))) == expect);
  }
}

TEST_CASE("one-variable expansion matches the rank-three family") {
  RationalGF q31 = closedFormGF(GFKind::Q, 3, 1);
  for (int n = 4; n <= 10; ++n)
    CHECK(expandCoefficient(q31, n) == seriesToLaurent(qRank3(n)));
  // below the first interesting count the coefficient vanishes
  CHECK(expandCoefficient(q31, 3).isZero());
}

TEST_CASE("closed form parameter validation") {
  CHECK_THROWS_AS(closedFormGF(GFKind::Q, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(closedFormGF(GFKind::Q, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(closedFormGF(GFKind::Q, 4, 3), std::invalid_argument);
  CHECK_THROWS_AS(closedFormGF(GFKind::P, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(expandCoefficient(closedFormGF(GFKind::T), -1, 0, 0),
                  std::invalid_argument);
}

TEST_CASE("coefficient mass for higher ranks") {
  // each s^n coefficient of Q(l, p) has total mass C(n-1, l)
  for (int ell = 3; ell <= 5; ++ell)
    for (int p = 1; p <= ell - 2; ++p) {
      RationalGF q = closedFormGF(GFKind::Q, ell, p);
      for (int n = ell + 1; n <= 8; ++n) {
        long long expect = binomialExact(n - 1, ell);
        CHECK(coeffSum(expandCoefficient(q, n)) == expect);
      }
    }
}

TEST_CASE("two-variable form re-expands to the one-variable family") {
  for (int p = 1; p <= 2; ++p) {
    RationalGF P = closedFormGF(GFKind::P, 0, p);
    TruncSeries ts = expandGF(P, 10, 8, 0);
    for (int ell = std::max(3, p + 2); ell <= 6; ++ell) {
      RationalGF q = closedFormGF(GFKind::Q, ell, p);
      for (int n = ell + 1; n <= 9; ++n) CHECK(ts.at(n, ell, 0) == expandCoefficient(q, n));
    }
  }
}

TEST_CASE("three-variable form restricts to every smaller family") {
  RationalGF T = closedFormGF(GFKind::T);
  TruncSeries ts = expandGF(T, 8, 6, 4);

  CHECK(ts.at(5, 3, 1) == mkLp({{-1, 2}, {0, 2}}));

  for (int ell = 3; ell <= 5; ++ell)
    for (int p = 1; p <= ell - 2; ++p) {
      RationalGF q = closedFormGF(GFKind::Q, ell, p);
      for (int n = ell + 1; n <= 8; ++n) {
        CAPTURE(n);
        CAPTURE(ell);
        CAPTURE(p);
        CHECK(ts.at(n, ell, p) == expandCoefficient(q, n));
      }
    }

  // no constant-in-v part and no negative coefficients anywhere
  for (int is = 0; is <= 8; ++is)
    for (int iu = 0; iu <= 6; ++iu) {
      CHECK(ts.at(is, iu, 0).isZero());
      for (int iv = 0; iv <= 4; ++iv)
        for (const auto& [e, c] : ts.at(is, iu, iv).coeff) CHECK(c > 0);
    }
}

TEST_CASE("deletion-restriction recurrence for the closed forms") {
  // [s^n] Q(l, p) = t [s^(n-1)] Q(l, p) + [s^(n-1)] Q(l-1, p)
  for (int ell = 4; ell <= 8; ++ell)
    for (int p = 1; p <= ell - 3; ++p) {
      RationalGF q = closedFormGF(GFKind::Q, ell, p);
      RationalGF qd = closedFormGF(GFKind::Q, ell - 1, p);
      for (int n = ell + 2; n <= 10; ++n) {
        LaurentPoly lhs = expandCoefficient(q, n);
        LaurentPoly prev = expandCoefficient(q, n - 1);
        LaurentPoly rhs = expandCoefficient(qd, n - 1);
        for (const auto& [e, c] : prev.coeff) rhs.add(e + 1, c);  // multiply by t
        CAPTURE(n);
        CAPTURE(ell);
        CAPTURE(p);
        CHECK(lhs == rhs);
      }
    }
}

TEST_SUITE_END();
