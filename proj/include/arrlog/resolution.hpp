#pragma once

// Minimal graded free resolutions. Each step takes minimal generators of the
// current kernel, so no differential has a unit entry and the resolution is
// minimal; its length is the projective dimension.

#include <stdexcept>
#include <vector>

#include "arrlog/freemodule.hpp"
#include "arrlog/groebner.hpp"
#include "arrlog/presentation.hpp"

namespace arrlog {

template <class F>
struct FreeResolution {
  // frees[0] is the generator module; diff[i] holds the columns of the map
  // frees[i+1] -> frees[i]. diff.size() == frees.size() - 1.
  std::vector<GradedFreeModule> frees;
  std::vector<std::vector<FreeVector<F>>> diff;
  bool truncated = false;  // true when cut off by maxLength with kernel left

  int length() const { return static_cast<int>(frees.size()) - 1; }
};

// Resolves the cokernel of a presentation whose generators are already
// minimal. maxLength >= 0 truncates: at most maxLength differentials are
// computed, enough to decide whether the projective dimension exceeds
// maxLength (truncated == true exactly when it does).
template <class F>
FreeResolution<F> minimalFreeResolution(const Ring<F>& R, const Presentation<F>& P,
                                        int maxLength = -1) {
  FreeResolution<F> res;
  res.frees.push_back(P.gens);
  if (P.gens.rank == 0) return res;

  Submodule<F> kernel{P.gens, P.relations};
  while (true) {
    std::vector<FreeVector<F>> mg = minimalGenerators(R, kernel);
    if (mg.empty()) break;
    if (maxLength >= 0 && res.length() >= maxLength) {
      // record that the resolution continues without computing further
      res.truncated = true;
      break;
    }
    GradedFreeModule Fi = moduleOnGenerators(kernel.ambient, mg);
    Submodule<F> next = syzygyModule(R, kernel.ambient, mg);
    res.diff.push_back(std::move(mg));
    res.frees.push_back(Fi);
    kernel = Submodule<F>{Fi, std::move(next.gens)};
  }
  return res;
}

template <class F>
FreeResolution<F> minimalFreeResolution(const Ring<F>& R, const Submodule<F>& N,
                                        int maxLength = -1) {
  return minimalFreeResolution(R, presentSubmodule(R, N), maxLength);
}

// Projective dimension of the cokernel of a minimal presentation.
template <class F>
int projectiveDimension(const Ring<F>& R, const Presentation<F>& P) {
  FreeResolution<F> res = minimalFreeResolution(R, P);
  return res.length();
}

// Projective dimension of a submodule (as an abstract module).
template <class F>
int projectiveDimension(const Ring<F>& R, const Submodule<F>& N) {
  return minimalFreeResolution(R, N).length();
}

}  // namespace arrlog
