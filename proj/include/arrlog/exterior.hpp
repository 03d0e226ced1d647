#pragma once

// Indexing and multilinear operations for exterior powers of S^n. Basis
// elements of the p-th power are p-subsets of {0..n-1}, stored as bitmasks
// and enumerated in increasing mask value (colex order on subsets). Signs
// follow the convention e_T = e_{t1} ^ ... ^ e_{tp} with t1 < ... < tp.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "arrlog/freemodule.hpp"
#include "arrlog/polynomial.hpp"

namespace arrlog {

inline std::vector<std::uint32_t> subsetMasks(int n, int p) {
  if (p < 0 || p > n) return {};
  std::vector<std::uint32_t> out;
  if (p == 0) {
    out.push_back(0);
    return out;
  }
  for (std::uint32_t m = 0; m < (1u << n); ++m)
    if (std::popcount(m) == p) out.push_back(m);
  return out;  // ascending mask value
}

// Lookup structure for one exterior power.
struct ExteriorIndex {
  int n = 0, p = 0;
  std::vector<std::uint32_t> masks;  // index -> mask

  ExteriorIndex() = default;
  ExteriorIndex(int n_, int p_) : n(n_), p(p_), masks(subsetMasks(n_, p_)) {}

  int rank() const { return static_cast<int>(masks.size()); }

  int indexOf(std::uint32_t mask) const {
    auto it = std::lower_bound(masks.begin(), masks.end(), mask);
    if (it == masks.end() || *it != mask) throw std::logic_error("ExteriorIndex: unknown subset");
    return static_cast<int>(it - masks.begin());
  }
};

// Sign of inserting index j into the sorted subset encoded by mask (j absent
// from mask): (-1)^(number of elements below j).
inline int insertSign(std::uint32_t mask, int j) {
  return std::popcount(mask & ((1u << j) - 1)) % 2 == 0 ? 1 : -1;
}

// Sign of e_T ^ e_U for disjoint T, U: parity of the inversions between the
// two sorted sequences.
inline int wedgeSign(std::uint32_t maskT, std::uint32_t maskU) {
  int inv = 0;
  std::uint32_t u = maskU;
  while (u) {
    int j = std::countr_zero(u);
    u &= u - 1;
    inv += std::popcount(maskT >> (j + 1));  // elements of T above j
  }
  return inv % 2 == 0 ? 1 : -1;
}

// The free module Lambda^p(S^n) with the uniform twist carried by the basis
// covectors or vectors (+p for forms, -p for derivations).
inline GradedFreeModule exteriorModule(int n, int p, int twistPerFactor) {
  ExteriorIndex ix(n, p);
  return GradedFreeModule::uniform(ix.rank(), p * twistPerFactor);
}

// Wedge u ^ v of u in Lambda^a, v in Lambda^b (same n), landing in
// Lambda^(a+b). Polynomial coefficients multiply.
template <class F>
FreeVector<F> wedge(const Ring<F>& R, const ExteriorIndex& ia, const FreeVector<F>& u,
                    const ExteriorIndex& ib, const FreeVector<F>& v, const ExteriorIndex& iout) {
  FreeVector<F> out(iout.rank());
  for (int s = 0; s < ia.rank(); ++s) {
    if (u.component(s).isZero()) continue;
    for (int t = 0; t < ib.rank(); ++t) {
      if (v.component(t).isZero()) continue;
      std::uint32_t mt = ia.masks[s], mu = ib.masks[t];
      if (mt & mu) continue;
      int sign = wedgeSign(mt, mu);
      Polynomial<F> prod = polyMultiply(R, u.component(s), v.component(t));
      if (sign < 0) prod = polyNeg(R, prod);
      int o = iout.indexOf(mt | mu);
      out.component(o) = polyAdd(R, out.component(o), prod);
    }
  }
  return out;
}

// Contraction of w in Lambda^p against a covector with polynomial entries
// c[0..n-1] (interior product in the first slot): lands in Lambda^(p-1).
template <class F>
FreeVector<F> contract(const Ring<F>& R, const std::vector<Polynomial<F>>& c,
                       const ExteriorIndex& ip, const FreeVector<F>& w,
                       const ExteriorIndex& iout) {
  FreeVector<F> out(iout.rank());
  for (int s = 0; s < ip.rank(); ++s) {
    if (w.component(s).isZero()) continue;
    std::uint32_t m = ip.masks[s];
    std::uint32_t rest = m;
    while (rest) {
      int j = std::countr_zero(rest);
      rest &= rest - 1;
      if (c[j].isZero()) continue;
      int sign = insertSign(m & ~(1u << j), j);
      Polynomial<F> term = polyMultiply(R, c[j], w.component(s));
      if (sign < 0) term = polyNeg(R, term);
      int o = iout.indexOf(m & ~(1u << j));
      out.component(o) = polyAdd(R, out.component(o), term);
    }
  }
  return out;
}

}  // namespace arrlog
