#pragma once

// Closed-form generating functions for the Hilbert series of the extension
// modules attached to generic arrangements, plus truncated expansion of
// those rational functions into Laurent-polynomial coefficients.
//
// Everything lives in up to four variables: s tracks the hyperplane count,
// u the rank, v the exterior degree, and t the internal grading. Numerators
// and denominator factors are integer Laurent monomial sums; expansion
// inverts the denominator as a formal power series in (s, u, v).

#include <array>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "arrlog/hilbert.hpp"

namespace arrlog {

// Integer Laurent polynomial in t.
struct LaurentPoly {
  std::map<int, long long> coeff;  // exponent -> coefficient, zeros absent

  void add(int e, long long c) {
    if (c == 0) return;
    auto it = coeff.find(e);
    if (it == coeff.end()) {
      coeff.emplace(e, c);
      return;
    }
    it->second += c;
    if (it->second == 0) coeff.erase(it);
  }

  bool isZero() const { return coeff.empty(); }

  bool operator==(const LaurentPoly& o) const { return coeff == o.coeff; }

  std::string str() const {
    if (coeff.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeff) {
      long long a = c;
      if (first) {
        if (a < 0) {
          os << "-";
          a = -a;
        }
      } else {
        os << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
      }
      first = false;
      if (a != 1 || e == 0) os << a;
      if (e != 0) {
        if (a != 1) os << "*";
        os << "t";
        if (e != 1) os << "^" << e;
      }
    }
    return os.str();
  }
};

// c * s^es * u^eu * v^ev * t^et; only et may be negative.
struct GFMono {
  long long c = 0;
  int es = 0, eu = 0, ev = 0, et = 0;
};

// numer / prod(denomFactors), each factor a short monomial sum.
struct RationalGF {
  std::vector<GFMono> numer;
  std::vector<std::vector<GFMono>> denomFactors;
};

enum class GFKind { Q, P, T };

// The three closed forms:
//   Q(l,p) = t^-p s^(l+1) / ((1-s)^(p+1) (1-s t)^(l-p))      l >= 3, 1 <= p <= l-2
//   P(p)   = t^-p s^(3+p) u^(2+p) / ((1-s)^(p+1) (1-s t) (1-s t-s u))   p >= 1
//   T      = s^4 u^3 v / ((1-s)(1-s t)(1-s t-s u)(t-s t-s u v))
// Q specializes T at fixed rank and exterior degree, P at fixed exterior
// degree; T packages the full three-parameter family.
inline RationalGF closedFormGF(GFKind kind, int ell = 0, int p = 0) {
  const std::vector<GFMono> oneMinusS = {{1, 0, 0, 0, 0}, {-1, 1, 0, 0, 0}};
  const std::vector<GFMono> oneMinusSt = {{1, 0, 0, 0, 0}, {-1, 1, 0, 0, 1}};
  const std::vector<GFMono> oneMinusStSu = {{1, 0, 0, 0, 0}, {-1, 1, 0, 0, 1}, {-1, 1, 1, 0, 0}};
  const std::vector<GFMono> tMinusStSuv = {{1, 0, 0, 0, 1}, {-1, 1, 0, 0, 1}, {-1, 1, 1, 1, 0}};

  RationalGF g;
  switch (kind) {
    case GFKind::Q: {
      if (ell < 3 || p < 1 || p > ell - 2)
        throw std::invalid_argument("closedFormGF: Q requires l >= 3 and 1 <= p <= l-2");
      g.numer.push_back({1, ell + 1, 0, 0, -p});
      for (int i = 0; i <= p; ++i) g.denomFactors.push_back(oneMinusS);
      for (int i = 0; i < ell - p; ++i) g.denomFactors.push_back(oneMinusSt);
      break;
    }
    case GFKind::P: {
      if (p < 1) throw std::invalid_argument("closedFormGF: P requires p >= 1");
      g.numer.push_back({1, 3 + p, 2 + p, 0, -p});
      for (int i = 0; i <= p; ++i) g.denomFactors.push_back(oneMinusS);
      g.denomFactors.push_back(oneMinusSt);
      g.denomFactors.push_back(oneMinusStSu);
      break;
    }
    case GFKind::T: {
      g.numer.push_back({1, 4, 3, 1, 0});
      g.denomFactors.push_back(oneMinusS);
      g.denomFactors.push_back(oneMinusSt);
      g.denomFactors.push_back(oneMinusStSu);
      g.denomFactors.push_back(tMinusStSuv);
      break;
    }
  }
  return g;
}

// Power series in (s, u, v) truncated at the caps, with LaurentPoly-in-t
// coefficients.
struct TruncSeries {
  int capS = 0, capU = 0, capV = 0;
  std::vector<LaurentPoly> cells;

  TruncSeries() = default;
  TruncSeries(int cs, int cu, int cv)
      : capS(cs), capU(cu), capV(cv),
        cells(static_cast<std::size_t>(cs + 1) * (cu + 1) * (cv + 1)) {}

  LaurentPoly& at(int is, int iu, int iv) {
    return cells[(static_cast<std::size_t>(is) * (capU + 1) + iu) * (capV + 1) + iv];
  }
  const LaurentPoly& at(int is, int iu, int iv) const {
    return cells[(static_cast<std::size_t>(is) * (capU + 1) + iu) * (capV + 1) + iv];
  }
};

namespace detail {

inline TruncSeries seriesFromMonos(const std::vector<GFMono>& ms, int cs, int cu, int cv) {
  TruncSeries out(cs, cu, cv);
  for (const GFMono& m : ms) {
    if (m.es > cs || m.eu > cu || m.ev > cv) continue;
    out.at(m.es, m.eu, m.ev).add(m.et, m.c);
  }
  return out;
}

inline TruncSeries mulSeries(const TruncSeries& a, const TruncSeries& b) {
  TruncSeries out(a.capS, a.capU, a.capV);
  for (int as = 0; as <= a.capS; ++as)
    for (int au = 0; au <= a.capU; ++au)
      for (int av = 0; av <= a.capV; ++av) {
        const LaurentPoly& ca = a.at(as, au, av);
        if (ca.isZero()) continue;
        for (int bs = 0; as + bs <= a.capS; ++bs)
          for (int bu = 0; au + bu <= a.capU; ++bu)
            for (int bv = 0; av + bv <= a.capV; ++bv) {
              const LaurentPoly& cb = b.at(bs, bu, bv);
              if (cb.isZero()) continue;
              LaurentPoly& co = out.at(as + bs, au + bu, av + bv);
              for (const auto& [ea, va] : ca.coeff)
                for (const auto& [eb, vb] : cb.coeff) co.add(ea + eb, va * vb);
            }
      }
  return out;
}

inline void addSeries(TruncSeries& a, const TruncSeries& b, long long scale) {
  for (std::size_t i = 0; i < a.cells.size(); ++i)
    for (const auto& [e, c] : b.cells[i].coeff) a.cells[i].add(e, c * scale);
}

}  // namespace detail

// Expand g as a power series in (s, u, v) up to the caps. The denominator
// is inverted geometrically: with d0 its (s,u,v)-constant part (required to
// be a single monomial +-t^k), 1/D = d0^-1 sum_m (1 - D/d0)^m, and the sum
// terminates at total (s,u,v)-order capS+capU+capV.
inline TruncSeries expandGF(const RationalGF& g, int capS, int capU, int capV) {
  if (capS < 0 || capU < 0 || capV < 0)
    throw std::invalid_argument("expandGF: negative truncation order");
  TruncSeries D(capS, capU, capV);
  D.at(0, 0, 0).add(0, 1);
  for (const auto& f : g.denomFactors)
    D = detail::mulSeries(D, detail::seriesFromMonos(f, capS, capU, capV));

  const LaurentPoly& d0 = D.at(0, 0, 0);
  if (d0.coeff.size() != 1 || (d0.coeff.begin()->second != 1 && d0.coeff.begin()->second != -1))
    throw std::invalid_argument("expandGF: denominator constant term is not a unit monomial");
  const int k0 = d0.coeff.begin()->first;
  const long long c0 = d0.coeff.begin()->second;

  // E = 1 - D/d0 has no (s,u,v)-constant term
  TruncSeries E(capS, capU, capV);
  for (std::size_t i = 0; i < D.cells.size(); ++i)
    for (const auto& [e, c] : D.cells[i].coeff) E.cells[i].add(e - k0, -c * c0);
  E.at(0, 0, 0).add(0, 1);

  TruncSeries inv(capS, capU, capV);
  inv.at(0, 0, 0).add(0, 1);
  TruncSeries pw = inv;
  const int total = capS + capU + capV;
  for (int m = 1; m <= total; ++m) {
    pw = detail::mulSeries(pw, E);
    detail::addSeries(inv, pw, 1);
  }

  TruncSeries out = detail::mulSeries(detail::seriesFromMonos(g.numer, capS, capU, capV), inv);
  // fold in d0^-1 = c0 * t^-k0
  TruncSeries shifted(capS, capU, capV);
  for (std::size_t i = 0; i < out.cells.size(); ++i)
    for (const auto& [e, c] : out.cells[i].coeff) shifted.cells[i].add(e - k0, c * c0);
  return shifted;
}

// Coefficient of s^es u^eu v^ev in the expansion of g.
inline LaurentPoly expandCoefficient(const RationalGF& g, int es, int eu = 0, int ev = 0) {
  if (es < 0 || eu < 0 || ev < 0)
    throw std::invalid_argument("expandCoefficient: negative exponent");
  return expandGF(g, es, eu, ev).at(es, eu, ev);
}

// Hilbert series of Ext^1 of the degree-zero part of the rank-3 generic
// log-forms module on n hyperplanes, in actual (shifted) degrees:
//   q_n(t) = ((n-3)t^-1 + (1-n) + (n-1)t^(n-3) + (3-n)t^(n-2)) / (1-t)^3.
// The numerator is divisible by (1-t)^3, so the result is a Laurent
// polynomial; failure to cancel is an internal error.
inline HilbertSeries qRank3(int n) {
  if (n < 4) throw std::invalid_argument("qRank3: requires n >= 4");
  HilbertSeries h;
  h.pole = 3;
  h.addTerm(-1, n - 3);
  h.addTerm(0, 1 - n);
  h.addTerm(n - 3, n - 1);
  h.addTerm(n - 2, 3 - n);
  h.canonicalize();
  if (h.pole != 0) throw std::logic_error("qRank3: numerator not divisible by (1-t)^3");
  return h;
}

}  // namespace arrlog
