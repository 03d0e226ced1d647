#pragma once

// Finite presentations of graded modules: a free module of generators and a
// list of relation vectors. Includes minimal generator selection (greedy in
// degree order, which is exact for graded modules by Nakayama) and unit-entry
// pruning to reach minimal presentations.

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "arrlog/freemodule.hpp"
#include "arrlog/groebner.hpp"
#include "arrlog/hilbert.hpp"
#include "arrlog/polynomial.hpp"

namespace arrlog {

template <class F>
struct Presentation {
  GradedFreeModule gens;                 // free module surjecting onto the module
  std::vector<FreeVector<F>> relations;  // kernel generators inside gens
};

// Minimal homogeneous generating set of a submodule. Candidates are offered
// in weakly increasing twisted degree; a candidate is kept exactly when it
// lies outside the span of the candidates kept so far. For graded modules
// this greedy filter realizes a basis of N/mN.
template <class F>
std::vector<FreeVector<F>> minimalGenerators(const Ring<F>& R, const Submodule<F>& N) {
  std::vector<int> idx(N.gens.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<int> deg(N.gens.size(), 0);
  for (std::size_t i = 0; i < N.gens.size(); ++i) {
    if (N.gens[i].isZero()) continue;
    if (!isHomogeneous(N.gens[i], N.ambient))
      throw std::invalid_argument("minimalGenerators: inhomogeneous generator");
    deg[i] = degreeOf(N.gens[i], N.ambient);
  }
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return deg[a] < deg[b]; });

  IncrementalBasis<F> basis(R, N.ambient);
  std::vector<FreeVector<F>> kept;
  for (int i : idx) {
    if (N.gens[i].isZero()) continue;
    if (basis.addGraded(N.gens[i], deg[i])) kept.push_back(N.gens[i]);
  }
  return kept;
}

template <class F>
GradedFreeModule moduleOnGenerators(const GradedFreeModule& ambient,
                                    const std::vector<FreeVector<F>>& gens) {
  std::vector<int> tw;
  tw.reserve(gens.size());
  for (const auto& g : gens) tw.push_back(degreeOf(g, ambient));
  return GradedFreeModule(static_cast<int>(gens.size()), std::move(tw));
}

// Presentation of a submodule N: minimal generators plus their syzygies.
template <class F>
Presentation<F> presentSubmodule(const Ring<F>& R, const Submodule<F>& N) {
  std::vector<FreeVector<F>> mg = minimalGenerators(R, N);
  GradedFreeModule F0 = moduleOnGenerators(N.ambient, mg);
  Submodule<F> syz = syzygyModule(R, N.ambient, mg);
  return Presentation<F>{F0, std::move(syz.gens)};
}

// Removes generators that occur in a relation with an invertible (degree
// zero) coefficient, substituting them away. The cokernel is unchanged; the
// result has no unit entries, so its generators are minimal.
template <class F>
Presentation<F> prunePresentation(const Ring<F>& R, Presentation<F> P) {
  while (true) {
    int ri = -1, gi = -1;
    for (std::size_t r = 0; r < P.relations.size() && ri < 0; ++r) {
      for (int g = 0; g < P.gens.rank; ++g) {
        const auto& p = P.relations[r].component(g);
        if (p.isZero()) continue;
        if (p.terms().size() == 1 && p.terms()[0].m.isOne()) {
          ri = static_cast<int>(r);
          gi = g;
          break;
        }
      }
    }
    if (ri < 0) break;

    FreeVector<F> pivot = P.relations[ri];
    auto cInv = R.field.inv(pivot.component(gi).terms()[0].c);
    std::vector<FreeVector<F>> rels;
    rels.reserve(P.relations.size() - 1);
    for (std::size_t r = 0; r < P.relations.size(); ++r) {
      if (static_cast<int>(r) == ri) continue;
      FreeVector<F> v = P.relations[r];
      const auto& coef = v.component(gi);
      if (!coef.isZero()) {
        Polynomial<F> factor = polyScale(R, coef, R.field.neg(cInv));
        v = vecAdd(R, v, vecScalePoly(R, factor, pivot));
      }
      // drop the pivot generator's coordinate
      std::vector<Polynomial<F>> comps;
      comps.reserve(P.gens.rank - 1);
      for (int g = 0; g < P.gens.rank; ++g)
        if (g != gi) comps.push_back(v.component(g));
      FreeVector<F> w(std::move(comps));
      if (!w.isZero()) rels.push_back(std::move(w));
    }
    std::vector<int> tw;
    for (int g = 0; g < P.gens.rank; ++g)
      if (g != gi) tw.push_back(P.gens.twists[g]);
    P.gens = GradedFreeModule(P.gens.rank - 1, std::move(tw));
    P.relations = std::move(rels);
  }
  return P;
}

// Hilbert series of the cokernel of a presentation.
template <class F>
HilbertSeries hilbertSeriesOfCokernel(const Ring<F>& R, const Presentation<F>& P) {
  if (P.gens.rank == 0) return HilbertSeries{};
  GroebnerBasis<F> G = buchberger(R, P.gens, P.relations);
  return hilbertSeriesOfQuotient(R, G);
}

template <class F>
bool cokernelIsZero(const Ring<F>& R, const Presentation<F>& P) {
  return hilbertSeriesOfCokernel(R, P).isZero();
}

}  // namespace arrlog
