#include <doctest.h>

#include <string>

#include "arrlog/arrangement.hpp"
#include "arrlog/lattice.hpp"

using namespace arrlog;

namespace {
Arrangement<FpField> fromText(const std::string& text, std::uint32_t p = 32003) {
  ArrangementInput in = parseArrangementText(text);
  return materializeArrangement(FpField(p), in);
}
}  // namespace

TEST_SUITE_BEGIN("arrangement");

TEST_CASE("text format round trip") {
  ArrangementInput in = parseArrangementText("field fp 101\nvars 2\n1 0\n1 -1/2\n");
  CHECK(in.field.prime == 101);
  CHECK(in.nvars == 2);
  REQUIRE(in.rows.size() == 2);
  CHECK(in.rows[1][1] == std::make_pair(-1ll, 2ll));

  ArrangementInput defaulted = parseArrangementText("vars 2\n1 0\n0 1\n# comment\n");
  CHECK(defaulted.field.prime == 32003);
}

TEST_CASE("parse errors carry line numbers") {
  try {
    parseArrangementText("field fp 101\nvars 2\n1 0\n0 z\n");
    FAIL("expected a parse error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }
  CHECK_THROWS_AS(parseArrangementText("vars 2\n1 0 0\n"), std::invalid_argument);
  CHECK_THROWS_AS(parseArrangementText("1 0\n"), std::invalid_argument);
  CHECK_THROWS_AS(parseArrangementText("vars 2\n"), std::invalid_argument);
}

TEST_CASE("proportional and zero rows are rejected") {
  CHECK_THROWS_WITH_AS(fromText("vars 2\n1 0\n2 0\n"),
                       doctest::Contains("proportional"), std::invalid_argument);
  CHECK_THROWS_AS(fromText("vars 2\n1 0\n0 0\n"), std::invalid_argument);
}

TEST_CASE("standard constructions") {
  FpField f(32003);
  Arrangement<FpField> B = booleanArrangement(f, 4);
  CHECK(B.n() == 4);
  CHECK(B.ell() == 4);

  Arrangement<FpField> G = genericArrangement(f, 6, 3);
  CHECK(G.n() == 6);
  CHECK(G.ell() == 3);
  // every 3x3 minor of the moment-curve matrix is invertible
  DenseMatrix<FpField> M(3, 3, f);
  for (int j = 0; j < 3; ++j) {
    M.at(0, j) = G.rows[0][j];
    M.at(1, j) = G.rows[2][j];
    M.at(2, j) = G.rows[5][j];
  }
  CHECK_FALSE(f.isZero(determinant(f, M)));
  CHECK_THROWS_AS(genericArrangement(f, 2, 3), std::invalid_argument);
}

TEST_CASE("deletion and restriction") {
  FpField f(32003);
  Arrangement<FpField> A = genericArrangement(f, 4, 3);
  Arrangement<FpField> Ad = deletion(A, 3);
  CHECK(Ad.n() == 3);
  CHECK(Ad.ell() == 3);

  Arrangement<FpField> Ar = restriction(A, 3);
  CHECK(Ar.ell() == 2);
  CHECK(Ar.n() == 3);  // generic traces stay distinct

  // restricting the Boolean arrangement merges nothing but drops rank
  Arrangement<FpField> Br = restriction(booleanArrangement(f, 3), 0);
  CHECK(Br.ell() == 2);
  CHECK(Br.n() == 2);
}

TEST_CASE("subarrangement and essentialization") {
  FpField f(32003);
  Arrangement<FpField> B = booleanArrangement(f, 3);
  Arrangement<FpField> S = subarrangement(B, (1u << 0) | (1u << 2));
  CHECK(S.n() == 2);
  CHECK(S.ell() == 3);
  Arrangement<FpField> E = essentialize(S);
  CHECK(E.ell() == 2);
  CHECK(E.n() == 2);
  // already essential: unchanged shape
  CHECK(essentialize(B).ell() == 3);
}

TEST_CASE("intersection lattice of the boolean arrangement") {
  FpField f(32003);
  Arrangement<FpField> B = booleanArrangement(f, 3);
  std::vector<Flat> flats = intersectionLattice(B);
  int byRank[4] = {0, 0, 0, 0};
  for (const Flat& fl : flats) {
    REQUIRE(fl.rank <= 3);
    ++byRank[fl.rank];
  }
  CHECK(byRank[0] == 1);
  CHECK(byRank[1] == 3);
  CHECK(byRank[2] == 3);
  CHECK(byRank[3] == 1);
}

TEST_CASE("characteristic quality") {
  Arrangement<FpField> B3 = fromText("vars 3\n1 0 0\n0 1 0\n0 0 1\n", 32003);
  CHECK(isGoodCharacteristic(B3));
  // the origin lies on all three hyperplanes, and 3 | 3
  Arrangement<FpField> bad = fromText("vars 3\n1 0 0\n0 1 0\n0 0 1\n", 3);
  CHECK_FALSE(isGoodCharacteristic(bad));

  QField q;
  CHECK(isGoodCharacteristic(genericArrangement(q, 5, 3)));
}

TEST_SUITE_END();
