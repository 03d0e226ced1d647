#pragma once

// Central hyperplane arrangements over an exact field: a list of pairwise
// non-proportional nonzero linear forms in ell variables, kept as coefficient
// rows. Includes the standard constructions (Boolean, generic via the moment
// curve), deletion/restriction, localization and essentialization, and a
// small text format for input files.

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "arrlog/field.hpp"
#include "arrlog/linalg.hpp"
#include "arrlog/monomial.hpp"
#include "arrlog/polynomial.hpp"

namespace arrlog {

template <class F>
struct Arrangement {
  Ring<F> ring;
  std::vector<std::vector<typename F::Elt>> rows;  // one coefficient row per hyperplane

  int n() const { return static_cast<int>(rows.size()); }
  int ell() const { return ring.nvars; }
};

namespace detail {

// Scales a row so its first nonzero entry is 1; all-zero rows untouched.
template <class F>
std::vector<typename F::Elt> normalizeRow(const F& field, std::vector<typename F::Elt> row) {
  for (const auto& c : row) {
    if (field.isZero(c)) continue;
    auto inv = field.inv(c);
    for (auto& x : row) x = field.mul(x, inv);
    break;
  }
  return row;
}

template <class F>
bool rowIsZero(const F& field, const std::vector<typename F::Elt>& row) {
  for (const auto& c : row)
    if (!field.isZero(c)) return false;
  return true;
}

}  // namespace detail

template <class F>
Arrangement<F> makeArrangement(const F& field, int ell,
                               std::vector<std::vector<typename F::Elt>> rows,
                               MonomialOrder order = MonomialOrder::grevlex()) {
  if (ell < 1 || ell > kMaxVars)
    throw std::invalid_argument("arrangement: number of variables out of range");
  std::vector<std::vector<typename F::Elt>> canon;
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != ell)
      throw std::invalid_argument("arrangement: row length mismatch");
    if (detail::rowIsZero(field, r)) throw std::invalid_argument("arrangement: zero linear form");
    canon.push_back(detail::normalizeRow(field, r));
  }
  for (std::size_t i = 0; i < canon.size(); ++i)
    for (std::size_t j = i + 1; j < canon.size(); ++j) {
      bool same = true;
      for (int k = 0; k < ell && same; ++k) same = field.eq(canon[i][k], canon[j][k]);
      if (same) throw std::invalid_argument("arrangement: proportional linear forms");
    }
  return Arrangement<F>{Ring<F>{field, ell, order}, std::move(rows)};
}

template <class F>
Polynomial<F> linearForm(const Arrangement<F>& A, int i) {
  std::vector<Term<F>> ts;
  for (int j = 0; j < A.ell(); ++j)
    if (!A.ring.field.isZero(A.rows[i][j])) ts.push_back(Term<F>{A.ring.var(j), A.rows[i][j]});
  return normalized(A.ring, std::move(ts));
}

template <class F>
Polynomial<F> definingPolynomial(const Arrangement<F>& A) {
  Polynomial<F> f = polyConst(A.ring, A.ring.field.one());
  for (int i = 0; i < A.n(); ++i) f = polyMultiply(A.ring, f, linearForm(A, i));
  return f;
}

template <class F>
DenseMatrix<F> coefficientMatrix(const Arrangement<F>& A) {
  DenseMatrix<F> M(A.n(), A.ell(), A.ring.field);
  for (int i = 0; i < A.n(); ++i)
    for (int j = 0; j < A.ell(); ++j) M.at(i, j) = A.rows[i][j];
  return M;
}

template <class F>
int arrangementRank(const Arrangement<F>& A) {
  return matrixRank(A.ring.field, coefficientMatrix(A));
}

// The coordinate hyperplanes x_1, ..., x_ell.
template <class F>
Arrangement<F> booleanArrangement(const F& field, int ell) {
  std::vector<std::vector<typename F::Elt>> rows(ell,
                                                 std::vector<typename F::Elt>(ell, field.zero()));
  for (int i = 0; i < ell; ++i) rows[i][i] = field.one();
  return makeArrangement(field, ell, std::move(rows));
}

// n points on the moment curve: row i is (1, i, i^2, ..., i^(ell-1)) with
// i = 1..n. Throws when some ell of the forms are dependent over the field
// (possible over small prime fields), so a successful return is generic.
template <class F>
Arrangement<F> genericArrangement(const F& field, int n, int ell) {
  if (n < ell) throw std::invalid_argument("genericArrangement: need n >= ell");
  if (n > 24) throw std::invalid_argument("genericArrangement: n too large for the minor check");
  std::vector<std::vector<typename F::Elt>> rows;
  for (int i = 1; i <= n; ++i) {
    std::vector<typename F::Elt> row(ell);
    auto v = field.one();
    for (int j = 0; j < ell; ++j) {
      row[j] = v;
      v = field.mul(v, field.fromInt(i));
    }
    rows.push_back(std::move(row));
  }
  Arrangement<F> A = makeArrangement(field, ell, std::move(rows));
  std::vector<int> pick(ell);
  for (int j = 0; j < ell; ++j) pick[j] = j;
  while (true) {
    DenseMatrix<F> M(ell, ell, field);
    for (int r = 0; r < ell; ++r)
      for (int c = 0; c < ell; ++c) M.at(r, c) = A.rows[pick[r]][c];
    if (field.isZero(determinant(field, M)))
      throw std::invalid_argument("genericArrangement: degenerate over this field");
    int k = ell - 1;
    while (k >= 0 && pick[k] == n - ell + k) --k;
    if (k < 0) break;
    ++pick[k];
    for (int j = k + 1; j < ell; ++j) pick[j] = pick[j - 1] + 1;
  }
  return A;
}

template <class F>
Arrangement<F> deletion(const Arrangement<F>& A, int k) {
  std::vector<std::vector<typename F::Elt>> rows;
  for (int i = 0; i < A.n(); ++i)
    if (i != k) rows.push_back(A.rows[i]);
  return makeArrangement(A.ring.field, A.ell(), std::move(rows), A.ring.order);
}

// Restriction to the k-th hyperplane: solve the form for a pivot variable,
// substitute into the other forms, drop that coordinate, and keep one copy
// of each resulting hyperplane. Lives in ell-1 variables.
template <class F>
Arrangement<F> restriction(const Arrangement<F>& A, int k) {
  const F& field = A.ring.field;
  const int ell = A.ell();
  if (ell < 2) throw std::invalid_argument("restriction: rank too small");
  int piv = -1;
  for (int j = 0; j < ell; ++j)
    if (!field.isZero(A.rows[k][j])) {
      piv = j;
      break;
    }
  auto pivInv = field.inv(A.rows[k][piv]);
  std::vector<std::vector<typename F::Elt>> rows;
  for (int i = 0; i < A.n(); ++i) {
    if (i == k) continue;
    std::vector<typename F::Elt> r = A.rows[i];
    auto factor = field.mul(r[piv], pivInv);
    for (int j = 0; j < ell; ++j) r[j] = field.sub(r[j], field.mul(factor, A.rows[k][j]));
    std::vector<typename F::Elt> shortRow;
    for (int j = 0; j < ell; ++j)
      if (j != piv) shortRow.push_back(r[j]);
    if (detail::rowIsZero(field, shortRow)) continue;  // hyperplane containing H_k
    shortRow = detail::normalizeRow(field, shortRow);
    bool dup = false;
    for (const auto& prev : rows) {
      bool same = true;
      for (int j = 0; j < ell - 1 && same; ++j) same = field.eq(prev[j], shortRow[j]);
      if (same) {
        dup = true;
        break;
      }
    }
    if (!dup) rows.push_back(std::move(shortRow));
  }
  return makeArrangement(field, ell - 1, std::move(rows), A.ring.order);
}

// Forms indexed by the set bits of mask, in the same ambient space.
template <class F>
Arrangement<F> subarrangement(const Arrangement<F>& A, std::uint32_t mask) {
  std::vector<std::vector<typename F::Elt>> rows;
  for (int i = 0; i < A.n(); ++i)
    if (mask & (1u << i)) rows.push_back(A.rows[i]);
  return makeArrangement(A.ring.field, A.ell(), std::move(rows), A.ring.order);
}

// Rewrites the forms in coordinates of the span of the rows, so the result
// has full rank in rank(A) variables.
template <class F>
Arrangement<F> essentialize(const Arrangement<F>& A) {
  const F& field = A.ring.field;
  DenseMatrix<F> M = coefficientMatrix(A);
  std::vector<int> pivots = rowReduce(field, M);
  const int r = static_cast<int>(pivots.size());
  if (r == A.ell())
    return makeArrangement(field, A.ell(), A.rows, A.ring.order);
  DenseMatrix<F> Bt(A.ell(), r, field);  // transposed basis of the row space
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < A.ell(); ++j) Bt.at(j, i) = M.at(i, j);
  std::vector<std::vector<typename F::Elt>> rows;
  for (int i = 0; i < A.n(); ++i) {
    auto c = solveExact(field, Bt, A.rows[i]);
    if (!c) throw std::logic_error("essentialize: form outside its own row space");
    rows.push_back(std::move(*c));
  }
  return makeArrangement(field, r, std::move(rows), A.ring.order);
}

// ---------------------------------------------------------------------------
// Text format:
//   field q            (or: field fp 32003)
//   vars 3
//   1 0 0
//   0 1 -1/2
// Comment lines start with '#'. Coefficients are integers or fractions.

struct ArrangementInput {
  FieldSpec field;
  int nvars = 0;
  std::vector<std::vector<std::pair<long long, long long>>> rows;  // (num, den)
};

inline ArrangementInput parseArrangementText(const std::string& text) {
  ArrangementInput out;
  bool haveField = false, haveVars = false;
  std::istringstream in(text);
  std::string line;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    std::string_view sv(line);
    auto pos = sv.find('#');
    if (pos != std::string_view::npos) sv = sv.substr(0, pos);
    std::istringstream ls{std::string(sv)};
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "field") {
      std::string kind;
      if (!(ls >> kind)) throw std::invalid_argument("arrangement file: missing field kind");
      if (kind == "q" || kind == "Q") {
        out.field = FieldSpec::rationals();
      } else if (kind == "fp") {
        long long p = 0;
        if (!(ls >> p) || p < 2) throw std::invalid_argument("arrangement file: bad prime");
        out.field = FieldSpec::primeField(static_cast<std::uint32_t>(p));
      } else {
        throw std::invalid_argument("arrangement file: unknown field '" + kind + "'");
      }
      haveField = true;
      continue;
    }
    if (tok == "vars") {
      if (!(ls >> out.nvars) || out.nvars < 1)
        throw std::invalid_argument("arrangement file: bad vars line");
      haveVars = true;
      continue;
    }
    if (!haveVars)
      throw std::invalid_argument("arrangement file: coefficients before vars line");
    std::vector<std::pair<long long, long long>> row;
    std::string first = tok;
    auto parseCoeff = [lineNo](const std::string& s) {
      long long num = 0, den = 1;
      auto slash = s.find('/');
      try {
        if (slash == std::string::npos) {
          num = std::stoll(s);
        } else {
          num = std::stoll(s.substr(0, slash));
          den = std::stoll(s.substr(slash + 1));
        }
      } catch (const std::exception&) {
        throw std::invalid_argument("arrangement file: bad coefficient '" + s + "' on line " +
                                    std::to_string(lineNo));
      }
      if (den == 0)
        throw std::invalid_argument("arrangement file: zero denominator on line " +
                                    std::to_string(lineNo));
      return std::make_pair(num, den);
    };
    row.push_back(parseCoeff(first));
    while (ls >> tok) row.push_back(parseCoeff(tok));
    if (static_cast<int>(row.size()) != out.nvars)
      throw std::invalid_argument("arrangement file: expected " + std::to_string(out.nvars) +
                                  " coefficients on line " + std::to_string(lineNo));
    out.rows.push_back(std::move(row));
  }
  if (!haveField) out.field = FieldSpec::primeField(32003);
  if (!haveVars) throw std::invalid_argument("arrangement file: missing vars line");
  if (out.rows.empty()) throw std::invalid_argument("arrangement file: no hyperplanes");
  return out;
}

template <class F>
Arrangement<F> materializeArrangement(const F& field, const ArrangementInput& in) {
  std::vector<std::vector<typename F::Elt>> rows;
  for (const auto& r : in.rows) {
    std::vector<typename F::Elt> row;
    for (const auto& [num, den] : r) row.push_back(field.fromRational(num, den));
    rows.push_back(std::move(row));
  }
  return makeArrangement(field, in.nvars, std::move(rows));
}

}  // namespace arrlog
