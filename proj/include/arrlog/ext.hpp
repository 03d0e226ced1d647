#pragma once

// Ext modules into the ring: dualize a minimal free resolution and take
// cohomology. Each Ext^i comes back as a (pruned) presentation together
// with its Hilbert series, from which vanishing, support dimension and
// length are read off.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "arrlog/freemodule.hpp"
#include "arrlog/groebner.hpp"
#include "arrlog/hilbert.hpp"
#include "arrlog/presentation.hpp"
#include "arrlog/resolution.hpp"

namespace arrlog {

inline GradedFreeModule dualModule(const GradedFreeModule& M) {
  std::vector<int> tw(M.twists.size());
  for (std::size_t i = 0; i < tw.size(); ++i) tw[i] = -M.twists[i];
  return GradedFreeModule(M.rank, std::move(tw));
}

// Transpose of a map given by columns: row j of the input becomes column j,
// living in the dual of the source free module.
template <class F>
std::vector<FreeVector<F>> transposeColumns(const std::vector<FreeVector<F>>& cols,
                                            int targetRank) {
  const int srcRank = static_cast<int>(cols.size());
  std::vector<FreeVector<F>> rows;
  rows.reserve(targetRank);
  for (int j = 0; j < targetRank; ++j) {
    FreeVector<F> r(srcRank);
    for (int c = 0; c < srcRank; ++c) r.component(c) = cols[c].component(j);
    rows.push_back(std::move(r));
  }
  return rows;
}

template <class F>
struct ExtModule {
  Presentation<F> pres;  // pruned presentation of Ext^i(M, S)
  HilbertSeries series;

  bool isZero() const { return series.isZero(); }
  int supportDimension() const { return series.supportDimension(); }
  bool artinian() const { return series.supportDimension() == 0; }
  long long length() const { return series.length(); }
};

// Ext^i(M, S) where res is a full minimal free resolution of M.
template <class F>
ExtModule<F> extModule(const Ring<F>& R, const FreeResolution<F>& res, int i) {
  if (res.truncated) throw std::invalid_argument("extModule: resolution is truncated");
  ExtModule<F> out;
  if (i < 0 || i > res.length() || res.frees[0].rank == 0) {
    out.pres = Presentation<F>{GradedFreeModule(0, {}), {}};
    return out;
  }

  GradedFreeModule dualFi = dualModule(res.frees[i]);

  // Kernel of the dualized outgoing map F_i^* -> F_{i+1}^*.
  Submodule<F> K{dualFi, {}};
  if (i < res.length()) {
    GradedFreeModule dualNext = dualModule(res.frees[i + 1]);
    std::vector<FreeVector<F>> phi = transposeColumns(res.diff[i], res.frees[i].rank);
    K = kernelModulo(R, dualNext, phi, dualFi.twists, {});
  } else {
    for (int j = 0; j < dualFi.rank; ++j) K.gens.push_back(basisVector(R, dualFi.rank, j));
  }

  // Image of the dualized incoming map F_{i-1}^* -> F_i^*.
  std::vector<FreeVector<F>> image;
  if (i > 0) image = transposeColumns(res.diff[i - 1], res.frees[i - 1].rank);

  std::vector<FreeVector<F>> mg = minimalGenerators(R, K);
  GradedFreeModule E0 = moduleOnGenerators(dualFi, mg);
  std::vector<int> tw = E0.twists;
  Submodule<F> rel = kernelModulo(R, dualFi, mg, tw, image);

  Presentation<F> pres{E0, std::move(rel.gens)};
  out.series = hilbertSeriesOfCokernel(R, pres);
  out.pres = prunePresentation(R, std::move(pres));
  return out;
}

// All Ext^i(M, S) for i = 0..pd(M).
template <class F>
std::vector<ExtModule<F>> extModules(const Ring<F>& R, const FreeResolution<F>& res) {
  std::vector<ExtModule<F>> out;
  for (int i = 0; i <= res.length(); ++i) out.push_back(extModule(R, res, i));
  return out;
}

template <class F>
ExtModule<F> extModule(const Ring<F>& R, const Presentation<F>& P, int i) {
  return extModule(R, minimalFreeResolution(R, P), i);
}

template <class F>
ExtModule<F> extModule(const Ring<F>& R, const Submodule<F>& N, int i) {
  return extModule(R, minimalFreeResolution(R, N), i);
}

// pd(M) <= p together with Ext^i(M, S) = 0 for 0 < i < p.
template <class F>
bool isSpherical(const Ring<F>& R, const FreeResolution<F>& res, int p) {
  if (res.truncated) throw std::invalid_argument("isSpherical: resolution is truncated");
  if (res.length() > p) return false;
  for (int i = 1; i <= std::min(p - 1, res.length()); ++i)
    if (!extModule(R, res, i).isZero()) return false;
  return true;
}

template <class F>
bool isSpherical(const Ring<F>& R, const Presentation<F>& P, int p) {
  return isSpherical(R, minimalFreeResolution(R, P), p);
}

}  // namespace arrlog
