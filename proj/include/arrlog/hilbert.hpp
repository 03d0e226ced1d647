#pragma once

// Hilbert series of graded modules presented by Groebner bases. A series is
// stored as numer(t) / (1-t)^pole with a Laurent-polynomial numerator;
// canonicalize() cancels common factors of (1-t) so that equality, pole
// order at t=1 (Krull dimension of the support) and finite length can be
// read off directly.
//
// Numerators of monomial-ideal quotients use the standard splitting
// recursion N(I) = N(I + (v)) + t^k N(I : v^k) specialized to k = 1 with the
// most frequent variable as pivot, with closed forms for the easy bases.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "arrlog/freemodule.hpp"
#include "arrlog/groebner.hpp"
#include "arrlog/monomial.hpp"
#include "arrlog/polynomial.hpp"

namespace arrlog {

struct HilbertSeries {
  std::map<int, long long> numer;  // exponent -> coefficient, zeros absent
  int pole = 0;                    // power of (1-t) in the denominator

  bool isZero() const { return numer.empty(); }

  void addTerm(int e, long long c) {
    if (c == 0) return;
    auto [it, inserted] = numer.try_emplace(e, 0);
    it->second += c;
    if (it->second == 0) numer.erase(it);
  }

  // Cancels factors of (1-t) shared by numerator and denominator. The
  // numerator is divisible by (1-t) exactly when it vanishes at t=1; the
  // quotient coefficients are the running prefix sums.
  void canonicalize() {
    while (pole > 0 && !numer.empty()) {
      long long total = 0;
      for (const auto& [e, c] : numer) total += c;
      if (total != 0) break;
      std::map<int, long long> q;
      long long run = 0;
      int last = numer.begin()->first;
      for (const auto& [e, c] : numer) {
        for (; last < e; ++last)
          if (run != 0) q[last] = run;
        run += c;
        if (run != 0) q[e] = run;
        last = e + 1;
      }
      // run == 0 here, so the quotient has no tail beyond the last exponent
      numer = std::move(q);
      --pole;
    }
    if (numer.empty()) pole = 0;
  }

  bool equals(const HilbertSeries& o) const {
    HilbertSeries a = *this, b = o;
    a.canonicalize();
    b.canonicalize();
    if (a.pole < b.pole) std::swap(a, b);
    // bring b to the common denominator (1-t)^(a.pole)
    for (int k = b.pole; k < a.pole; ++k) b.multiplyOneMinusT();
    return a.numer == b.numer;
  }

  void multiplyOneMinusT() {
    std::map<int, long long> out;
    for (const auto& [e, c] : numer) {
      out[e] += c;
      out[e + 1] -= c;
    }
    for (auto it = out.begin(); it != out.end();)
      it = it->second == 0 ? out.erase(it) : std::next(it);
    numer = std::move(out);
  }

  void shift(int k) {  // multiply by t^k
    if (k == 0 || numer.empty()) return;
    std::map<int, long long> out;
    for (const auto& [e, c] : numer) out[e + k] = c;
    numer = std::move(out);
  }

  void add(const HilbertSeries& o) {
    HilbertSeries b = o;
    while (pole < b.pole) {
      multiplyOneMinusT();
      ++pole;
    }
    while (b.pole < pole) {
      b.multiplyOneMinusT();
      ++b.pole;
    }
    for (const auto& [e, c] : b.numer) addTerm(e, c);
  }

  void negate() {
    for (auto& [e, c] : numer) c = -c;
  }

  void sub(const HilbertSeries& o) {
    HilbertSeries b = o;
    b.negate();
    add(b);
  }

  // Coefficient of t^d in the power-series expansion.
  long long valueAt(int d) const {
    long long total = 0;
    for (const auto& [e, c] : numer) {
      int k = d - e;
      if (k < 0) continue;
      if (pole == 0) {
        if (k == 0) total += c;
        continue;
      }
      // binomial(k + pole - 1, pole - 1)
      long long b = 1;
      for (int i = 1; i <= pole - 1; ++i) b = b * (k + i) / i;
      total += c * b;
    }
    return total;
  }

  // Order of the pole at t=1 once in lowest terms: the dimension of the
  // support of the module. Zero for Artinian (finite length) modules.
  int supportDimension() const {
    HilbertSeries a = *this;
    a.canonicalize();
    return a.pole;
  }

  // Total dimension over the ground field; only meaningful when the support
  // dimension is zero.
  long long length() const {
    HilbertSeries a = *this;
    a.canonicalize();
    if (a.pole != 0) throw std::domain_error("HilbertSeries::length: module has positive dimension");
    long long total = 0;
    for (const auto& [e, c] : a.numer) total += c;
    return total;
  }

  std::string str() const {
    HilbertSeries a = *this;
    a.canonicalize();
    if (a.numer.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : a.numer) {
      long long v = c;
      if (first) {
        if (v < 0) {
          s += "-";
          v = -v;
        }
      } else {
        s += v < 0 ? " - " : " + ";
        if (v < 0) v = -v;
      }
      first = false;
      if (v != 1 || e == 0) s += std::to_string(v);
      if (e != 0) {
        if (v != 1) s += "*";
        s += "t";
        if (e != 1) s += "^" + std::to_string(e);
      }
    }
    if (a.pole > 0) {
      s = "(" + s + ")/(1-t)";
      if (a.pole > 1) s += "^" + std::to_string(a.pole);
    }
    return s;
  }
};

namespace detail {

inline bool monomialListMinimal(std::vector<Monomial>& gens) {
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
      if (j == i) continue;
      if (!gens[j].divides(gens[i])) continue;
      if (gens[j] == gens[i] && j > i) continue;
      redundant = true;
    }
    if (!redundant) out.push_back(gens[i]);
  }
  bool changed = out.size() != gens.size();
  gens = std::move(out);
  return changed;
}

// Numerator of the Hilbert series of S/(gens) over the (1-t)^nvars
// denominator. gens need not be minimal.
inline std::map<int, long long> monomialIdealNumerator(std::vector<Monomial> gens) {
  monomialListMinimal(gens);
  std::map<int, long long> N;
  if (gens.empty()) {
    N[0] = 1;
    return N;
  }
  if (gens.size() == 1 && gens[0].isOne()) return N;  // unit ideal: 0
  bool purePowers = true;
  for (const auto& g : gens) {
    int nz = 0;
    for (int v = 0; v < g.nvars; ++v)
      if (g[v] > 0) ++nz;
    if (nz > 1) {
      purePowers = false;
      break;
    }
  }
  if (purePowers) {
    // distinct variables after minimalization: product of (1 - t^deg)
    N[0] = 1;
    for (const auto& g : gens) {
      std::map<int, long long> out;
      for (const auto& [e, c] : N) {
        out[e] += c;
        out[e + g.deg] -= c;
      }
      for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
      N = std::move(out);
    }
    return N;
  }
  if (gens.size() == 2) {
    Monomial l = gens[0].lcm(gens[1]);
    N[0] += 1;
    N[gens[0].deg] -= 1;
    N[gens[1].deg] -= 1;
    N[l.deg] += 1;
    for (auto it = N.begin(); it != N.end();)
      it = it->second == 0 ? N.erase(it) : std::next(it);
    return N;
  }

  // pivot: the variable occurring in the most generators
  int nvars = gens[0].nvars;
  std::vector<int> freq(nvars, 0);
  for (const auto& g : gens)
    for (int v = 0; v < nvars; ++v)
      if (g[v] > 0) ++freq[v];
  int pivot = 0;
  for (int v = 1; v < nvars; ++v)
    if (freq[v] > freq[pivot]) pivot = v;

  // I + (x_pivot): generators with pivot exponent zero, plus the pivot
  std::vector<Monomial> sum;
  sum.push_back(Monomial::var(nvars, pivot));
  for (const auto& g : gens)
    if (g[pivot] == 0) sum.push_back(g);

  // I : x_pivot: divide pivot exponent by one where present
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (auto g : gens) {
    if (g[pivot] > 0) g = g.div(Monomial::var(nvars, pivot));
    colon.push_back(g);
  }

  std::map<int, long long> N1 = monomialIdealNumerator(std::move(sum));
  std::map<int, long long> N2 = monomialIdealNumerator(std::move(colon));
  for (const auto& [e, c] : N2) {
    N1[e + 1] += c;
    if (N1[e + 1] == 0) N1.erase(e + 1);
  }
  return N1;
}

}  // namespace detail

// Series of the free module itself: sum of t^twist / (1-t)^nvars.
inline HilbertSeries hilbertSeriesOfFree(const GradedFreeModule& M, int nvars) {
  HilbertSeries h;
  h.pole = nvars;
  for (int tw : M.twists) h.addTerm(tw, 1);
  h.canonicalize();
  return h;
}

// Lead monomials of a Groebner basis, grouped by ambient position.
template <class F>
std::vector<std::vector<Monomial>> leadsByPosition(const Ring<F>& R, const GroebnerBasis<F>& G) {
  std::vector<std::vector<Monomial>> by(G.ambient.rank);
  EngineOrder ord = EngineOrder::forModule(G.ambient, R.order);
  for (const auto& g : G.elements) {
    MVec<F> w = detail::toMVec(g);
    detail::sortMVec(R.field, ord, w);
    if (!w.empty()) by[w.front().pos].push_back(w.front().m);
  }
  return by;
}

// Series of the quotient (ambient free module) / (submodule with basis G).
template <class F>
HilbertSeries hilbertSeriesOfQuotient(const Ring<F>& R, const GroebnerBasis<F>& G) {
  auto by = leadsByPosition(R, G);
  HilbertSeries h;
  h.pole = R.nvars;
  for (int i = 0; i < G.ambient.rank; ++i) {
    auto N = detail::monomialIdealNumerator(by[i]);
    for (const auto& [e, c] : N) h.addTerm(e + G.ambient.twists[i], c);
  }
  h.canonicalize();
  return h;
}

// Series of the submodule itself.
template <class F>
HilbertSeries hilbertSeriesOfSubmodule(const Ring<F>& R, const GroebnerBasis<F>& G) {
  HilbertSeries h = hilbertSeriesOfFree(G.ambient, R.nvars);
  h.sub(hilbertSeriesOfQuotient(R, G));
  h.canonicalize();
  return h;
}

}  // namespace arrlog
