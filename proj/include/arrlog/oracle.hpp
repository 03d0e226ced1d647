#pragma once

// From-scratch degreewise dimension counts for the logarithmic modules,
// used to cross-check the Groebner machinery. For a fixed degree the
// defining conditions are finite-dimensional linear algebra: enumerate the
// monomial basis, reduce modulo each linear form by substituting out its
// pivot variable, and take ranks of dense condition matrices. Nothing here
// shares code with the Groebner path beyond the condition coefficients.

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "arrlog/arrangement.hpp"
#include "arrlog/exterior.hpp"
#include "arrlog/hilbert.hpp"
#include "arrlog/linalg.hpp"
#include "arrlog/logmodules.hpp"
#include "arrlog/monomial.hpp"

namespace arrlog {

// The four graded module families, named by their avatars: D_p and D^0_p
// carry their own grading, fOmega_p / fOmega0_p are the f-multiples of
// Omega^p and Omega^p_0. Dimensions are always reported in actual degrees.
enum class LogRole { D, fOmega, fOmega0, D0 };

inline const char* logRoleStr(LogRole r) {
  switch (r) {
    case LogRole::D: return "D";
    case LogRole::fOmega: return "fOmega";
    case LogRole::fOmega0: return "fOmega0";
    default: return "D0";
  }
}

namespace detail {

inline std::vector<Monomial> monomialsOfDegree(int nv, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  if (d > 255) throw std::invalid_argument("monomialsOfDegree: degree too large");
  if (nv == 0) {
    if (d == 0) out.push_back(Monomial::one(0));
    return out;
  }
  Monomial cur = Monomial::one(nv);
  std::function<void(int, int)> rec = [&](int v, int rem) {
    if (v == nv - 1) {
      cur.e[v] = static_cast<std::uint8_t>(rem);
      cur.deg = static_cast<std::uint16_t>(d);
      out.push_back(cur);
      cur.e[v] = 0;
      return;
    }
    for (int k = rem; k >= 0; --k) {
      cur.e[v] = static_cast<std::uint8_t>(k);
      rec(v + 1, rem - k);
    }
    cur.e[v] = 0;
  };
  rec(0, d);
  return out;
}

struct MonoIndex {
  std::vector<Monomial> list;
  std::map<std::array<std::uint8_t, kMaxVars>, int> pos;

  MonoIndex() = default;
  explicit MonoIndex(std::vector<Monomial> l) : list(std::move(l)) {
    for (int i = 0; i < static_cast<int>(list.size()); ++i) pos[list[i].e] = i;
  }
  int size() const { return static_cast<int>(list.size()); }
  int indexOf(const std::array<std::uint8_t, kMaxVars>& e) const {
    auto it = pos.find(e);
    if (it == pos.end()) throw std::logic_error("MonoIndex: unknown monomial");
    return it->second;
  }
};

// Coefficients of mono modulo alpha (row of the arrangement), expressed over
// the degree-|mono| monomials with zero exponent at the pivot variable.
template <class F>
std::vector<typename F::Elt> reduceModForm(const F& field, int nv,
                                           const std::vector<typename F::Elt>& row, int piv,
                                           const Monomial& mono, const MonoIndex& reduced) {
  std::vector<typename F::Elt> subCoef(nv, field.zero());
  auto pivInv = field.inv(row[piv]);
  for (int k = 0; k < nv; ++k)
    if (k != piv) subCoef[k] = field.neg(field.mul(row[k], pivInv));

  std::map<std::array<std::uint8_t, kMaxVars>, typename F::Elt> work;
  work.emplace(mono.e, field.one());
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = work.begin(); it != work.end(); ++it) {
      if (it->first[piv] == 0) continue;
      auto key = it->first;
      auto c = it->second;
      work.erase(it);
      key[piv] -= 1;
      for (int k = 0; k < nv; ++k) {
        if (field.isZero(subCoef[k])) continue;
        auto k2 = key;
        k2[k] += 1;
        auto& slot = work[k2];
        slot = field.add(slot, field.mul(c, subCoef[k]));
        if (field.isZero(slot)) work.erase(k2);
      }
      changed = true;
      break;
    }
  }
  std::vector<typename F::Elt> out(reduced.list.size(), field.zero());
  for (const auto& [e, c] : work) out[reduced.indexOf(e)] = c;
  return out;
}

// Dense matrix of the defining conditions on Lambda^p-coefficients of
// polynomial degree m. wedgeStyle picks the form conditions (d alpha ^ -)
// over the derivation conditions (contraction); eulerRows appends the exact
// Euler-contraction equations cutting out the relative forms.
template <class F>
DenseMatrix<F> oracleConditions(const Arrangement<F>& A, int p, int m, bool wedgeStyle,
                                bool eulerRows) {
  const F& field = A.ring.field;
  const int ell = A.ell();
  const int n = A.n();
  ExteriorIndex ip(ell, p);
  ExteriorIndex ic(ell, wedgeStyle ? p + 1 : p - 1);
  MonoIndex monos(monomialsOfDegree(ell, m));
  const int nm = monos.size();

  std::vector<int> pivot(n);
  std::vector<MonoIndex> reduced(n);
  std::vector<std::vector<std::vector<typename F::Elt>>> red(n);
  for (int i = 0; i < n; ++i) {
    int piv = 0;
    while (field.isZero(A.rows[i][piv])) ++piv;
    pivot[i] = piv;
    std::vector<Monomial> keep;
    for (const auto& mo : monos.list)
      if (mo[piv] == 0) keep.push_back(mo);
    reduced[i] = MonoIndex(std::move(keep));
    red[i].reserve(nm);
    for (const auto& mo : monos.list)
      red[i].push_back(reduceModForm(field, ell, A.rows[i], piv, mo, reduced[i]));
  }

  const int perHyp = ic.rank() * (n ? reduced[0].size() : 0);
  MonoIndex monosUp;
  ExteriorIndex ie(ell, p - 1);
  int eulerCount = 0;
  if (eulerRows && p >= 1) {
    monosUp = MonoIndex(monomialsOfDegree(ell, m + 1));
    eulerCount = ie.rank() * monosUp.size();
  }
  DenseMatrix<F> M(n * perHyp + eulerCount, ip.rank() * nm, field);

  for (int tIdx = 0; tIdx < ip.rank(); ++tIdx) {
    const std::uint32_t T = ip.masks[tIdx];
    for (int mIdx = 0; mIdx < nm; ++mIdx) {
      const int col = tIdx * nm + mIdx;
      for (int i = 0; i < n; ++i) {
        const auto& r = red[i][mIdx];
        const int nr = reduced[i].size();
        auto emit = [&](int uIdx, typename F::Elt c) {
          const int base = i * perHyp + uIdx * nr;
          for (int k = 0; k < nr; ++k) {
            if (field.isZero(r[k])) continue;
            auto& cell = M.at(base + k, col);
            cell = field.add(cell, field.mul(c, r[k]));
          }
        };
        if (wedgeStyle) {
          for (int j = 0; j < ell; ++j) {
            if (T & (1u << j)) continue;
            if (field.isZero(A.rows[i][j])) continue;
            auto c = A.rows[i][j];
            if (insertSign(T, j) < 0) c = field.neg(c);
            emit(ic.indexOf(T | (1u << j)), c);
          }
        } else {
          std::uint32_t rest = T;
          while (rest) {
            const int j = std::countr_zero(rest);
            rest &= rest - 1;
            if (field.isZero(A.rows[i][j])) continue;
            auto c = A.rows[i][j];
            if (insertSign(T & ~(1u << j), j) < 0) c = field.neg(c);
            emit(ic.indexOf(T & ~(1u << j)), c);
          }
        }
      }
      if (eulerCount) {
        std::uint32_t rest = T;
        while (rest) {
          const int j = std::countr_zero(rest);
          rest &= rest - 1;
          auto key = monos.list[mIdx].e;
          key[j] += 1;
          const int row = n * perHyp + ie.indexOf(T & ~(1u << j)) * monosUp.size() +
                          monosUp.indexOf(key);
          auto c = field.one();
          if (insertSign(T & ~(1u << j), j) < 0) c = field.neg(c);
          M.at(row, col) = field.add(M.at(row, col), c);
        }
      }
    }
  }
  return M;
}

inline long long polynomialPieceDim(int nv, int d) {
  if (d < 0) return 0;
  long long b = 1;
  for (int i = 1; i <= nv - 1; ++i) b = b * (d + i) / i;
  return b;
}

}  // namespace detail

// Dimension of the degree-d graded piece (actual degrees) by direct rank
// computation.
template <class F>
long long oracleDimension(const Arrangement<F>& A, LogRole role, int p, int d) {
  const F& field = A.ring.field;
  const int ell = A.ell();
  const int n = A.n();
  if (p < 0 || p > ell) return 0;

  switch (role) {
    case LogRole::D: {
      if (p == 0) return detail::polynomialPieceDim(ell, d);
      const int m = d + p;
      if (m < 0) return 0;
      DenseMatrix<F> M = detail::oracleConditions(A, p, m, false, false);
      return M.cols - matrixRank(field, std::move(M));
    }
    case LogRole::fOmega:
    case LogRole::fOmega0: {
      const int m = d + n - p;
      if (m < 0) return 0;
      const bool euler = role == LogRole::fOmega0 && p >= 1;
      DenseMatrix<F> M = detail::oracleConditions(A, p, m, true, euler);
      return M.cols - matrixRank(field, std::move(M));
    }
    case LogRole::D0: {
      if (p == 0) return detail::polynomialPieceDim(ell, d);
      long long full = oracleDimension(A, LogRole::D, p, d);
      const int m = d + p - 1;
      if (m < 0) return full;
      // subtract dim of chi ^ D_(p-1) in this degree: map a nullspace basis
      // of the D_(p-1) conditions through the Euler wedge and take its rank
      DenseMatrix<F> C = detail::oracleConditions(A, p - 1, m, false, false);
      ExteriorIndex iq(ell, p - 1), ip(ell, p);
      detail::MonoIndex monos(detail::monomialsOfDegree(ell, m));
      detail::MonoIndex monosUp(detail::monomialsOfDegree(ell, m + 1));
      auto basis = nullspaceBasis(field, std::move(C));
      DenseMatrix<F> W(static_cast<int>(basis.size()), ip.rank() * monosUp.size(), field);
      for (int b = 0; b < static_cast<int>(basis.size()); ++b)
        for (int uIdx = 0; uIdx < iq.rank(); ++uIdx) {
          const std::uint32_t U = iq.masks[uIdx];
          for (int mIdx = 0; mIdx < monos.size(); ++mIdx) {
            const auto& c = basis[b][uIdx * monos.size() + mIdx];
            if (field.isZero(c)) continue;
            for (int j = 0; j < ell; ++j) {
              if (U & (1u << j)) continue;
              auto key = monos.list[mIdx].e;
              key[j] += 1;
              const int col = ip.indexOf(U | (1u << j)) * monosUp.size() + monosUp.indexOf(key);
              auto v = insertSign(U, j) < 0 ? field.neg(c) : c;
              W.at(b, col) = field.add(W.at(b, col), v);
            }
          }
        }
      return full - matrixRank(field, std::move(W));
    }
  }
  return 0;
}

// Groebner-side Hilbert series for the same role, in actual degrees.
template <class F>
HilbertSeries roleSeries(const Arrangement<F>& A, LogRole role, int p) {
  const Ring<F>& R = A.ring;
  switch (role) {
    case LogRole::D: return logModuleSeries(R, logDerivations(A, p));
    case LogRole::fOmega: return logModuleSeries(R, logForms(A, p));
    case LogRole::fOmega0: return logModuleSeries(R, relativeLogForms(A, p));
    default: {
      if (p == 0) return logModuleSeries(R, logDerivations(A, 0));
      return quotientModuleSeries(R, relativeDerivations(A, p));
    }
  }
}

struct OracleRow {
  LogRole role = LogRole::D;
  int p = 0;
  int degree = 0;
  long long oracleDim = 0;
  long long gbDim = 0;
  bool match = false;
};

// Degree-by-degree comparison over all four roles for 1 <= p <= maxP.
template <class F>
std::vector<OracleRow> compareOracle(const Arrangement<F>& A, int degreeLow, int degreeHigh,
                                     int maxP = 1) {
  std::vector<OracleRow> out;
  for (LogRole role : {LogRole::D, LogRole::fOmega, LogRole::fOmega0, LogRole::D0})
    for (int p = 1; p <= maxP; ++p) {
      if (p > A.ell()) continue;
      HilbertSeries h = roleSeries(A, role, p);
      for (int d = degreeLow; d <= degreeHigh; ++d) {
        OracleRow row;
        row.role = role;
        row.p = p;
        row.degree = d;
        row.oracleDim = oracleDimension(A, role, p, d);
        row.gbDim = h.valueAt(d);
        row.match = row.oracleDim == row.gbDim;
        out.push_back(row);
      }
    }
  return out;
}

}  // namespace arrlog
