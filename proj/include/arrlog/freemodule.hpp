#pragma once

// Graded free modules F = ⊕ S(-d_i) and their elements. A FreeVector stores
// one polynomial per basis position; the twisted degree of a homogeneous
// vector is deg(component) + twist(position).

#include <stdexcept>
#include <string>
#include <vector>

#include "arrlog/polynomial.hpp"

namespace arrlog {

struct GradedFreeModule {
  int rank = 0;
  std::vector<int> twists;  // twists[i] = degree of basis vector e_i

  GradedFreeModule() = default;
  GradedFreeModule(int r, std::vector<int> tw) : rank(r), twists(std::move(tw)) {
    if (static_cast<int>(twists.size()) != rank)
      throw std::invalid_argument("GradedFreeModule: twist count must equal rank");
  }
  static GradedFreeModule untwisted(int r) { return GradedFreeModule(r, std::vector<int>(r, 0)); }
  static GradedFreeModule uniform(int r, int twist) {
    return GradedFreeModule(r, std::vector<int>(r, twist));
  }
  bool operator==(const GradedFreeModule& o) const { return rank == o.rank && twists == o.twists; }
};

template <class F>
class FreeVector {
 public:
  FreeVector() = default;
  explicit FreeVector(int rank) : comp_(rank) {}
  explicit FreeVector(std::vector<Polynomial<F>> comps) : comp_(std::move(comps)) {}

  int rank() const { return static_cast<int>(comp_.size()); }
  const Polynomial<F>& component(int i) const { return comp_[i]; }
  Polynomial<F>& component(int i) { return comp_[i]; }
  const std::vector<Polynomial<F>>& components() const { return comp_; }

  bool isZero() const {
    for (const auto& p : comp_)
      if (!p.isZero()) return false;
    return true;
  }

  bool equals(const Ring<F>& R, const FreeVector& o) const {
    if (rank() != o.rank()) return false;
    for (int i = 0; i < rank(); ++i)
      if (!comp_[i].equals(R, o.comp_[i])) return false;
    return true;
  }

 private:
  std::vector<Polynomial<F>> comp_;
};

template <class F>
FreeVector<F> basisVector(const Ring<F>& R, int rank, int pos) {
  FreeVector<F> v(rank);
  v.component(pos) = polyConst(R, R.field.one());
  return v;
}

// Twisted degree of a homogeneous vector; -(1<<30) for zero. Throws if the
// vector is not homogeneous.
template <class F>
int degreeOf(const FreeVector<F>& v, const GradedFreeModule& M) {
  if (v.rank() != M.rank) throw std::invalid_argument("degreeOf: rank mismatch");
  bool seen = false;
  int d = 0;
  for (int i = 0; i < v.rank(); ++i) {
    for (const auto& t : v.component(i).terms()) {
      int td = int(t.m.deg) + M.twists[i];
      if (!seen) {
        d = td;
        seen = true;
      } else if (td != d) {
        throw std::invalid_argument("degreeOf: vector is not homogeneous");
      }
    }
  }
  return seen ? d : -(1 << 30);
}

template <class F>
bool isHomogeneous(const FreeVector<F>& v, const GradedFreeModule& M) {
  if (v.rank() != M.rank) return false;
  bool seen = false;
  int d = 0;
  for (int i = 0; i < v.rank(); ++i)
    for (const auto& t : v.component(i).terms()) {
      int td = int(t.m.deg) + M.twists[i];
      if (!seen) {
        d = td;
        seen = true;
      } else if (td != d) {
        return false;
      }
    }
  return true;
}

template <class F>
FreeVector<F> vecAdd(const Ring<F>& R, const FreeVector<F>& a, const FreeVector<F>& b) {
  FreeVector<F> r(a.rank());
  for (int i = 0; i < a.rank(); ++i) r.component(i) = polyAdd(R, a.component(i), b.component(i));
  return r;
}

template <class F>
FreeVector<F> vecSub(const Ring<F>& R, const FreeVector<F>& a, const FreeVector<F>& b) {
  FreeVector<F> r(a.rank());
  for (int i = 0; i < a.rank(); ++i) r.component(i) = polySub(R, a.component(i), b.component(i));
  return r;
}

template <class F>
FreeVector<F> vecScalePoly(const Ring<F>& R, const Polynomial<F>& c, const FreeVector<F>& a) {
  FreeVector<F> r(a.rank());
  for (int i = 0; i < a.rank(); ++i) r.component(i) = polyMultiply(R, c, a.component(i));
  return r;
}

template <class F>
std::string vecStr(const Ring<F>& R, const FreeVector<F>& v) {
  std::string s = "(";
  for (int i = 0; i < v.rank(); ++i) {
    if (i) s += ", ";
    s += polyStr(R, v.component(i));
  }
  return s + ")";
}

}  // namespace arrlog
