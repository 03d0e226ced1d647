#pragma once

// Module term order used by the Groebner engine. Positions split into a
// primary block (the ambient free module, compared term-over-position with
// twist-adjusted degrees) and an optional tracking block (syzygy coordinates,
// compared through the Schreyer construction: a tracking term m*e_i is ranked
// by the image term m*lt(g_i) in the primary block, ties broken by column
// index). Primary terms always beat tracking terms, so tracking coordinates
// form an elimination block. Tracking columns must be nonzero; callers handle
// zero columns before entering the engine.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "arrlog/freemodule.hpp"
#include "arrlog/monomial.hpp"

namespace arrlog {

class EngineOrder {
 public:
  EngineOrder(MonomialOrder base, std::vector<int> primaryTwists)
      : base_(base), primaryTwists_(std::move(primaryTwists)) {}

  static EngineOrder forModule(const GradedFreeModule& M,
                               MonomialOrder base = MonomialOrder::grevlex()) {
    return EngineOrder(base, M.twists);
  }

  void addTracking(std::vector<Monomial> leadMono, std::vector<std::uint32_t> leadPos) {
    if (leadMono.size() != leadPos.size())
      throw std::invalid_argument("EngineOrder: tracking data size mismatch");
    trackMono_ = std::move(leadMono);
    trackPos_ = std::move(leadPos);
    trackDegree_.resize(trackMono_.size());
    for (std::size_t i = 0; i < trackMono_.size(); ++i) {
      if (trackPos_[i] >= primaryTwists_.size())
        throw std::invalid_argument("EngineOrder: tracking lead position out of range");
      trackDegree_[i] = int(trackMono_[i].deg) + primaryTwists_[trackPos_[i]];
    }
  }

  int nPrimary() const { return static_cast<int>(primaryTwists_.size()); }
  int nTracking() const { return static_cast<int>(trackDegree_.size()); }
  int totalRank() const { return nPrimary() + nTracking(); }
  const MonomialOrder& base() const { return base_; }
  const std::vector<int>& primaryTwists() const { return primaryTwists_; }

  int degreeOfTerm(std::uint32_t pos, const Monomial& m) const {
    if (pos < primaryTwists_.size()) return int(m.deg) + primaryTwists_[pos];
    return int(m.deg) + trackDegree_[pos - primaryTwists_.size()];
  }

  // -1 / 0 / +1 as term (p1,m1) < / = / > (p2,m2).
  int compare(std::uint32_t p1, const Monomial& m1, std::uint32_t p2, const Monomial& m2) const {
    const std::uint32_t np = static_cast<std::uint32_t>(primaryTwists_.size());
    const bool t1 = p1 >= np, t2 = p2 >= np;
    if (t1 != t2) return t1 ? -1 : 1;
    if (!t1) return comparePrimary(p1, m1, p2, m2);
    const std::uint32_t i = p1 - np, j = p2 - np;
    int d1 = int(m1.deg) + trackDegree_[i];
    int d2 = int(m2.deg) + trackDegree_[j];
    if (d1 != d2) return d1 < d2 ? -1 : 1;
    if (i == j) return compareMonomials(m1, m2, base_);
    Monomial im1 = m1.mul(trackMono_[i]);
    Monomial im2 = m2.mul(trackMono_[j]);
    int cmp = comparePrimary(trackPos_[i], im1, trackPos_[j], im2);
    if (cmp != 0) return cmp;
    return i < j ? 1 : -1;  // smaller column index ranks higher
  }

 private:
  int comparePrimary(std::uint32_t p1, const Monomial& m1, std::uint32_t p2,
                     const Monomial& m2) const {
    int d1 = int(m1.deg) + primaryTwists_[p1];
    int d2 = int(m2.deg) + primaryTwists_[p2];
    if (d1 != d2) return d1 < d2 ? -1 : 1;
    int cmp = compareMonomials(m1, m2, base_);
    if (cmp != 0) return cmp;
    if (p1 != p2) return p1 < p2 ? 1 : -1;  // lower position ranks higher
    return 0;
  }

  MonomialOrder base_;
  std::vector<int> primaryTwists_;
  std::vector<Monomial> trackMono_;
  std::vector<std::uint32_t> trackPos_;
  std::vector<int> trackDegree_;
};

}  // namespace arrlog
