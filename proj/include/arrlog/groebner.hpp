#pragma once

// Buchberger engine for submodules of graded free modules, plus syzygy
// computation through an elimination order with Schreyer tracking columns.
//
// Internals use a flat term representation (position, monomial, coefficient)
// sorted descending under an EngineOrder, with geobucket accumulators for
// reduction. Pair selection follows the normal strategy (lowest twisted
// lcm degree first); useless pairs are discarded with the chain criterion.
// The product criterion is omitted on purpose: it is unsound for module
// components sharing a position.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "arrlog/freemodule.hpp"
#include "arrlog/modorder.hpp"
#include "arrlog/monomial.hpp"
#include "arrlog/polynomial.hpp"

namespace arrlog {

template <class F>
struct MTerm {
  std::uint32_t pos = 0;
  Monomial m;
  typename F::Elt c{};
};

template <class F>
using MVec = std::vector<MTerm<F>>;  // sorted descending under the engine order

namespace detail {

template <class F>
MVec<F> toMVec(const FreeVector<F>& v) {
  MVec<F> out;
  for (int i = 0; i < v.rank(); ++i)
    for (const auto& t : v.component(i).terms())
      out.push_back(MTerm<F>{static_cast<std::uint32_t>(i), t.m, t.c});
  return out;  // caller sorts
}

template <class F>
FreeVector<F> toFreeVector(const Ring<F>& R, const MVec<F>& v, int rank) {
  std::vector<std::vector<Term<F>>> comps(rank);
  for (const auto& t : v) {
    if (t.pos >= static_cast<std::uint32_t>(rank))
      throw std::logic_error("toFreeVector: position out of range");
    comps[t.pos].push_back(Term<F>{t.m, t.c});
  }
  FreeVector<F> out(rank);
  for (int i = 0; i < rank; ++i) out.component(i) = normalized(R, std::move(comps[i]));
  return out;
}

template <class F>
void sortMVec(const F& field, const EngineOrder& ord, MVec<F>& v) {
  std::sort(v.begin(), v.end(), [&](const MTerm<F>& a, const MTerm<F>& b) {
    return ord.compare(a.pos, a.m, b.pos, b.m) > 0;
  });
  MVec<F> out;
  out.reserve(v.size());
  for (auto& t : v) {
    if (!out.empty() && out.back().pos == t.pos && out.back().m == t.m) {
      out.back().c = field.add(out.back().c, t.c);
      if (field.isZero(out.back().c)) out.pop_back();
    } else if (!field.isZero(t.c)) {
      out.push_back(std::move(t));
    }
  }
  v = std::move(out);
}

// (monomial, coefficient) * v[from..], preserving descending order (the
// engine order is multiplicative).
template <class F>
MVec<F> scalarMul(const F& field, const Monomial& m, const typename F::Elt& c, const MVec<F>& v,
                  std::size_t from = 0) {
  MVec<F> out;
  out.reserve(v.size() - from);
  for (std::size_t i = from; i < v.size(); ++i)
    out.push_back(MTerm<F>{v[i].pos, v[i].m.mul(m), field.mul(v[i].c, c)});
  return out;
}

// Geobucket accumulator: bucket k holds at most 4^(k+1) live terms, kept
// descending with a consumed-prefix offset so popping the head is O(1).
template <class F>
class Geobucket {
 public:
  Geobucket(const F& field, const EngineOrder& ord) : field_(field), ord_(ord) {}

  void add(MVec<F>&& v) {
    if (v.empty()) return;
    std::size_t k = 0;
    while (cap(k) < v.size()) ++k;
    while (true) {
      if (k >= buckets_.size()) buckets_.resize(k + 1);
      Bucket& b = buckets_[k];
      if (b.empty()) {
        b.v = std::move(v);
        b.head = 0;
        return;
      }
      v = merge(b, v);
      b.v.clear();
      b.head = 0;
      if (v.empty()) return;
      if (v.size() <= cap(k)) {
        b.v = std::move(v);
        return;
      }
      ++k;
    }
  }

  // Removes and returns the maximal term, combining duplicates across
  // buckets; nullopt when the accumulated value is zero.
  std::optional<MTerm<F>> popLead() {
    while (true) {
      int best = -1;
      for (std::size_t k = 0; k < buckets_.size(); ++k) {
        if (buckets_[k].empty()) continue;
        if (best < 0 || ord_.compare(buckets_[k].front().pos, buckets_[k].front().m,
                                     buckets_[best].front().pos, buckets_[best].front().m) > 0)
          best = static_cast<int>(k);
      }
      if (best < 0) return std::nullopt;
      MTerm<F> lead = buckets_[best].front();
      buckets_[best].pop();
      for (auto& b : buckets_) {
        if (b.empty()) continue;
        if (b.front().pos == lead.pos && b.front().m == lead.m) {
          lead.c = field_.add(lead.c, b.front().c);
          b.pop();
        }
      }
      if (!field_.isZero(lead.c)) return lead;
    }
  }

 private:
  struct Bucket {
    MVec<F> v;
    std::size_t head = 0;
    bool empty() const { return head >= v.size(); }
    const MTerm<F>& front() const { return v[head]; }
    void pop() { ++head; }
    std::size_t size() const { return v.size() - head; }
  };

  static std::size_t cap(std::size_t k) { return std::size_t(4) << (2 * k); }

  MVec<F> merge(const Bucket& a, const MVec<F>& b) const {
    MVec<F> out;
    out.reserve(a.size() + b.size());
    std::size_t i = a.head, j = 0;
    while (i < a.v.size() && j < b.size()) {
      int cmp = ord_.compare(a.v[i].pos, a.v[i].m, b[j].pos, b[j].m);
      if (cmp > 0) {
        out.push_back(a.v[i++]);
      } else if (cmp < 0) {
        out.push_back(b[j++]);
      } else {
        auto c = field_.add(a.v[i].c, b[j].c);
        if (!field_.isZero(c)) out.push_back(MTerm<F>{b[j].pos, b[j].m, c});
        ++i, ++j;
      }
    }
    for (; i < a.v.size(); ++i) out.push_back(a.v[i]);
    for (; j < b.size(); ++j) out.push_back(b[j]);
    return out;
  }

  const F& field_;
  const EngineOrder& ord_;
  std::vector<Bucket> buckets_;
};

// Core engine state: a list of monic module elements with divisor lists per
// lead position, a pair queue, and the treated-pair set for the chain
// criterion.
template <class F>
class GBEngine {
 public:
  GBEngine(const Ring<F>& R, EngineOrder ord) : R_(R), ord_(std::move(ord)) {}

  const EngineOrder& order() const { return ord_; }
  const std::vector<MVec<F>>& elements() const { return elems_; }

  // Fully reduces v against the current elements.
  MVec<F> reduce(MVec<F>&& v) const {
    MVec<F> rem;
    Geobucket<F> bucket(R_.field, ord_);
    bucket.add(std::move(v));
    while (auto lt = bucket.popLead()) {
      int g = findDivisor(lt->pos, lt->m);
      if (g < 0) {
        rem.push_back(*lt);
        continue;
      }
      const MVec<F>& e = elems_[g];
      Monomial q = lt->m.div(e.front().m);
      bucket.add(scalarMul(R_.field, q, R_.field.neg(lt->c), e, 1));  // elements are monic
    }
    return rem;
  }

  // Reduces v and, when the remainder is nonzero, installs it (made monic)
  // as a new element with its s-pairs. Returns the element index, or -1
  // when v reduced to zero.
  int addReduced(MVec<F>&& v) {
    MVec<F> r = reduce(std::move(v));
    if (r.empty()) return -1;
    auto lcInv = R_.field.inv(r.front().c);
    for (auto& t : r) t.c = R_.field.mul(t.c, lcInv);
    int idx = static_cast<int>(elems_.size());
    for (int j : byPos_[r.front().pos]) {
      Monomial l = elems_[j].front().m.lcm(r.front().m);
      pairs_.insert(Pair{ord_.degreeOfTerm(r.front().pos, l), j, idx, l});
    }
    byPos_[r.front().pos].push_back(idx);
    elems_.push_back(std::move(r));
    return idx;
  }

  // Processes the pair queue until empty.
  void complete() { completeUpTo(std::numeric_limits<int>::max()); }

  // Processes pairs of degree <= maxDeg (the queue is degree-ordered). For
  // homogeneous input this yields a basis whose reductions are exact for
  // vectors of degree <= maxDeg: leads of higher degree cannot divide them.
  void completeUpTo(int maxDeg) {
    while (!pairs_.empty() && pairs_.begin()->deg <= maxDeg) {
      Pair pr = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      bool useless = false;
      for (int k : byPos_[elems_[pr.i].front().pos]) {
        if (k == pr.i || k == pr.j) continue;
        if (!elems_[k].front().m.divides(pr.lcm)) continue;
        if (treated(pr.i, k) && treated(pr.j, k)) {
          useless = true;
          break;
        }
      }
      markTreated(pr.i, pr.j);
      if (useless) continue;
      addReduced(sPair(pr));
    }
  }

 private:
  struct Pair {
    int deg;
    int i, j;
    Monomial lcm;
    bool operator<(const Pair& o) const {
      if (deg != o.deg) return deg < o.deg;
      if (i != o.i) return i < o.i;
      return j < o.j;
    }
  };

  int findDivisor(std::uint32_t pos, const Monomial& m) const {
    auto it = byPos_.find(pos);
    if (it == byPos_.end()) return -1;
    for (int g : it->second)
      if (elems_[g].front().m.divides(m)) return g;
    return -1;
  }

  MVec<F> sPair(const Pair& pr) const {
    const MVec<F>& a = elems_[pr.i];
    const MVec<F>& b = elems_[pr.j];
    Monomial qa = pr.lcm.div(a.front().m);
    Monomial qb = pr.lcm.div(b.front().m);
    Geobucket<F> acc(R_.field, ord_);
    acc.add(scalarMul(R_.field, qa, R_.field.one(), a));
    acc.add(scalarMul(R_.field, qb, R_.field.neg(R_.field.one()), b));
    MVec<F> out;
    while (auto t = acc.popLead()) out.push_back(*t);
    return out;
  }

  bool treated(int i, int j) const {
    if (i > j) std::swap(i, j);
    return treated_.count({i, j}) != 0;
  }
  void markTreated(int i, int j) {
    if (i > j) std::swap(i, j);
    treated_.insert({i, j});
  }

  const Ring<F>& R_;
  EngineOrder ord_;
  std::vector<MVec<F>> elems_;
  std::map<std::uint32_t, std::vector<int>> byPos_;
  std::set<Pair> pairs_;
  std::set<std::pair<int, int>> treated_;
};

// Minimalizes lead terms and tail-reduces the survivors, producing the
// reduced basis in canonical (descending lead) order. Tail terms are never
// divisible by the element's own lead (a proper multiple is strictly larger
// in any monomial order), so tails can be reduced against the full set.
template <class F>
std::vector<MVec<F>> interreduce(const Ring<F>& R, const EngineOrder& ord,
                                 const std::vector<MVec<F>>& elems) {
  const std::size_t n = elems.size();
  std::vector<bool> drop(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (elems[i].empty()) {
      drop[i] = true;
      continue;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || drop[j] || elems[j].empty()) continue;
      if (elems[j].front().pos != elems[i].front().pos) continue;
      if (!elems[j].front().m.divides(elems[i].front().m)) continue;
      if (elems[j].front().m == elems[i].front().m && j > i) continue;  // keep the first of equals
      drop[i] = true;
      break;
    }
  }
  GBEngine<F> engine(R, ord);
  std::vector<int> keep;
  for (std::size_t i = 0; i < n; ++i) {
    if (drop[i]) continue;
    keep.push_back(static_cast<int>(i));
    if (engine.addReduced(MVec<F>(elems[i])) < 0)
      throw std::logic_error("interreduce: minimal element reduced to zero");
  }
  std::vector<MVec<F>> out;
  out.reserve(keep.size());
  for (int i : keep) {
    const MVec<F>& v = elems[i];
    MVec<F> r;
    r.push_back(v.front());
    for (auto& t : engine.reduce(MVec<F>(v.begin() + 1, v.end()))) r.push_back(std::move(t));
    auto lcInv = R.field.inv(r.front().c);
    for (auto& t : r) t.c = R.field.mul(t.c, lcInv);
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [&](const MVec<F>& x, const MVec<F>& y) {
    return ord.compare(x.front().pos, x.front().m, y.front().pos, y.front().m) > 0;
  });
  return out;
}

}  // namespace detail

// A finitely generated graded submodule of a free module, given by
// generators. Plain data; algorithms compute bases on demand.
template <class F>
struct Submodule {
  GradedFreeModule ambient;
  std::vector<FreeVector<F>> gens;
};

template <class F>
struct GroebnerBasis {
  GradedFreeModule ambient;
  std::vector<FreeVector<F>> elements;  // monic, tail-reduced, descending leads
};

template <class F>
GroebnerBasis<F> buchberger(const Ring<F>& R, const GradedFreeModule& M,
                            const std::vector<FreeVector<F>>& gens) {
  EngineOrder ord = EngineOrder::forModule(M, R.order);
  detail::GBEngine<F> engine(R, ord);
  for (const auto& g : gens) {
    MVec<F> v = detail::toMVec(g);
    detail::sortMVec(R.field, ord, v);
    engine.addReduced(std::move(v));
  }
  engine.complete();
  auto reduced = detail::interreduce(R, ord, engine.elements());
  GroebnerBasis<F> out{M, {}};
  for (const auto& v : reduced) out.elements.push_back(detail::toFreeVector(R, v, M.rank));
  return out;
}

template <class F>
GroebnerBasis<F> buchberger(const Ring<F>& R, const Submodule<F>& N) {
  return buchberger(R, N.ambient, N.gens);
}

// Reduction helper holding a fixed basis in engine form. Cheaper than
// rebuilding engine state for every normalForm call against the same basis.
template <class F>
class Reducer {
 public:
  Reducer(const Ring<F>& R, const GroebnerBasis<F>& G)
      : R_(R), ord_(EngineOrder::forModule(G.ambient, R.order)), engine_(R, ord_), rank_(G.ambient.rank) {
    for (const auto& g : G.elements) {
      MVec<F> w = detail::toMVec(g);
      detail::sortMVec(R_.field, ord_, w);
      engine_.addReduced(std::move(w));
    }
  }

  FreeVector<F> normalForm(const FreeVector<F>& v) const {
    MVec<F> w = detail::toMVec(v);
    detail::sortMVec(R_.field, ord_, w);
    return detail::toFreeVector(R_, engine_.reduce(std::move(w)), rank_);
  }

  bool contains(const FreeVector<F>& v) const {
    MVec<F> w = detail::toMVec(v);
    detail::sortMVec(R_.field, ord_, w);
    return engine_.reduce(std::move(w)).empty();
  }

 private:
  const Ring<F>& R_;
  EngineOrder ord_;
  detail::GBEngine<F> engine_;
  int rank_;
};

template <class F>
FreeVector<F> normalForm(const Ring<F>& R, const GroebnerBasis<F>& G, const FreeVector<F>& v) {
  return Reducer<F>(R, G).normalForm(v);
}

template <class F>
bool isInSubmodule(const Ring<F>& R, const GroebnerBasis<F>& G, const FreeVector<F>& v) {
  return Reducer<F>(R, G).contains(v);
}

// Incrementally grown basis: supports membership tests between insertions.
// Used for minimal generator selection, where candidates are offered in
// degree order and redundant ones must be recognized immediately.
template <class F>
class IncrementalBasis {
 public:
  IncrementalBasis(const Ring<F>& R, const GradedFreeModule& M)
      : R_(R), ord_(EngineOrder::forModule(M, R.order)), engine_(R, ord_) {}

  // True when v was outside the current span (and is now added).
  bool add(const FreeVector<F>& v) {
    MVec<F> w = detail::toMVec(v);
    detail::sortMVec(R_.field, ord_, w);
    if (engine_.addReduced(std::move(w)) < 0) return false;
    engine_.complete();
    return true;
  }

  // Variant for homogeneous candidates offered in weakly increasing twisted
  // degree: completing the pair queue through deg suffices for an exact
  // membership test, and pairs above deg stay queued for later candidates.
  bool addGraded(const FreeVector<F>& v, int deg) {
    engine_.completeUpTo(deg);
    MVec<F> w = detail::toMVec(v);
    detail::sortMVec(R_.field, ord_, w);
    return engine_.addReduced(std::move(w)) >= 0;
  }

  bool contains(const FreeVector<F>& v) const {
    MVec<F> w = detail::toMVec(v);
    detail::sortMVec(R_.field, ord_, w);
    return engine_.reduce(std::move(w)).empty();
  }

 private:
  const Ring<F>& R_;
  EngineOrder ord_;
  detail::GBEngine<F> engine_;
};

// Kernel of the graded map  S(-d_1) + ... + S(-d_m)  ->  target / <modulo>,
// e_j -> phi[j]. Column degrees d_j are the srcTwists; each nonzero phi[j]
// must be homogeneous of degree d_j. Returns generators of the kernel as a
// submodule of the source free module.
//
// Implementation: run Buchberger on the combined vectors (phi_j, e_j) and
// (modulo_k, 0) in an elimination order whose tracking block ranks e_j terms
// by their images (Schreyer order). Reduced-basis elements with vanishing
// primary part have tracking parts generating the kernel; with the
// elimination order they even form a basis of it.
template <class F>
Submodule<F> kernelModulo(const Ring<F>& R, const GradedFreeModule& target,
                          const std::vector<FreeVector<F>>& phi, const std::vector<int>& srcTwists,
                          const std::vector<FreeVector<F>>& modulo) {
  if (phi.size() != srcTwists.size())
    throw std::invalid_argument("kernelModulo: srcTwists size mismatch");
  const int m = static_cast<int>(phi.size());
  GradedFreeModule source(m, srcTwists);

  // Zero columns are kernel basis vectors outright; the engine order needs a
  // lead term for every tracking column, so they are split off here.
  std::vector<int> live;  // original column indices entering the engine
  std::vector<FreeVector<F>> kernelGens;
  for (int j = 0; j < m; ++j) {
    if (phi[j].isZero())
      kernelGens.push_back(basisVector(R, m, j));
    else
      live.push_back(j);
  }

  EngineOrder primaryOnly = EngineOrder::forModule(target, R.order);
  std::vector<Monomial> leadMono;
  std::vector<std::uint32_t> leadPos;
  std::vector<MVec<F>> liveVecs;
  for (int j : live) {
    if (!isHomogeneous(phi[j], target) || degreeOf(phi[j], target) != srcTwists[j])
      throw std::invalid_argument("kernelModulo: column degree mismatch");
    MVec<F> w = detail::toMVec(phi[j]);
    detail::sortMVec(R.field, primaryOnly, w);
    leadMono.push_back(w.front().m);
    leadPos.push_back(w.front().pos);
    liveVecs.push_back(std::move(w));
  }

  EngineOrder ord(R.order, target.twists);
  ord.addTracking(std::move(leadMono), std::move(leadPos));

  detail::GBEngine<F> engine(R, ord);
  const auto np = static_cast<std::uint32_t>(target.rank);
  for (std::size_t k = 0; k < liveVecs.size(); ++k) {
    MVec<F> w = std::move(liveVecs[k]);
    w.push_back(MTerm<F>{np + static_cast<std::uint32_t>(k), R.one(), R.field.one()});
    detail::sortMVec(R.field, ord, w);
    engine.addReduced(std::move(w));
  }
  for (const auto& nvec : modulo) {
    MVec<F> w = detail::toMVec(nvec);
    detail::sortMVec(R.field, ord, w);
    engine.addReduced(std::move(w));
  }
  engine.complete();

  auto reduced = detail::interreduce(R, ord, engine.elements());
  for (const auto& v : reduced) {
    if (v.front().pos < np) continue;  // has a primary part: not a syzygy
    FreeVector<F> s(m);
    std::vector<std::vector<Term<F>>> comps(m);
    for (const auto& t : v) comps[live[t.pos - np]].push_back(Term<F>{t.m, t.c});
    for (int j = 0; j < m; ++j) s.component(j) = normalized(R, std::move(comps[j]));
    kernelGens.push_back(std::move(s));
  }
  return Submodule<F>{source, std::move(kernelGens)};
}

// Syzygies among the given generators inside M: kernel of e_j -> gens[j].
template <class F>
Submodule<F> syzygyModule(const Ring<F>& R, const GradedFreeModule& M,
                          const std::vector<FreeVector<F>>& gens) {
  std::vector<int> tw;
  tw.reserve(gens.size());
  for (const auto& g : gens) tw.push_back(g.isZero() ? 0 : degreeOf(g, M));
  return kernelModulo(R, M, gens, tw, {});
}

// Coordinates of each target through the given generators: returns c with
// target = sum_j c_j * gens[j]. Representatives are unique only modulo
// syzygies, which is all quotient presentations need. Throws when a target
// lies outside the span.
//
// Same combined-vector setup as kernelModulo: with the elimination order the
// normal form of (target, 0) is pure tracking exactly when target is in the
// span, and its tracking part is minus one valid coordinate vector.
template <class F>
std::vector<FreeVector<F>> liftThrough(const Ring<F>& R, const GradedFreeModule& M,
                                       const std::vector<FreeVector<F>>& gens,
                                       const std::vector<FreeVector<F>>& targets) {
  const int m = static_cast<int>(gens.size());
  EngineOrder primaryOnly = EngineOrder::forModule(M, R.order);
  std::vector<Monomial> leadMono;
  std::vector<std::uint32_t> leadPos;
  std::vector<MVec<F>> vecs;
  for (const auto& g : gens) {
    if (g.isZero()) throw std::invalid_argument("liftThrough: zero generator");
    MVec<F> w = detail::toMVec(g);
    detail::sortMVec(R.field, primaryOnly, w);
    leadMono.push_back(w.front().m);
    leadPos.push_back(w.front().pos);
    vecs.push_back(std::move(w));
  }
  EngineOrder ord(R.order, M.twists);
  ord.addTracking(std::move(leadMono), std::move(leadPos));

  detail::GBEngine<F> engine(R, ord);
  const auto np = static_cast<std::uint32_t>(M.rank);
  for (std::size_t k = 0; k < vecs.size(); ++k) {
    MVec<F> w = std::move(vecs[k]);
    w.push_back(MTerm<F>{np + static_cast<std::uint32_t>(k), R.one(), R.field.one()});
    detail::sortMVec(R.field, ord, w);
    engine.addReduced(std::move(w));
  }
  engine.complete();

  std::vector<FreeVector<F>> lifts;
  lifts.reserve(targets.size());
  for (const auto& t : targets) {
    MVec<F> w = detail::toMVec(t);
    detail::sortMVec(R.field, ord, w);
    MVec<F> r = engine.reduce(std::move(w));
    FreeVector<F> c(m);
    std::vector<std::vector<Term<F>>> comps(m);
    for (const auto& mt : r) {
      if (mt.pos < np) throw std::invalid_argument("liftThrough: target not in span");
      comps[mt.pos - np].push_back(Term<F>{mt.m, R.field.neg(mt.c)});
    }
    for (int j = 0; j < m; ++j) c.component(j) = normalized(R, std::move(comps[j]));
    lifts.push_back(std::move(c));
  }
  return lifts;
}

}  // namespace arrlog
