#pragma once

// Intersection lattice of a central arrangement. Flats are closed sets of
// hyperplane indices (all hyperplanes containing a given intersection),
// stored as bitmasks and found by breadth-first closure from the empty flat.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <queue>
#include <set>
#include <vector>

#include "arrlog/arrangement.hpp"
#include "arrlog/linalg.hpp"

namespace arrlog {

struct Flat {
  std::uint32_t mask = 0;  // indices of hyperplanes containing the flat
  int rank = 0;            // codimension of the intersection
  int size = 0;            // number of hyperplanes through the flat
};

namespace detail {

// Closure of a set of hyperplanes: all forms lying in their span.
template <class F>
Flat closeFlat(const Arrangement<F>& A, std::uint32_t mask) {
  const F& field = A.ring.field;
  std::vector<int> members;
  for (int i = 0; i < A.n(); ++i)
    if (mask & (1u << i)) members.push_back(i);
  DenseMatrix<F> M(static_cast<int>(members.size()), A.ell(), field);
  for (std::size_t r = 0; r < members.size(); ++r)
    for (int j = 0; j < A.ell(); ++j) M.at(static_cast<int>(r), j) = A.rows[members[r]][j];
  std::vector<int> pivots = rowReduce(field, M);
  const int rank = static_cast<int>(pivots.size());

  std::uint32_t closed = 0;
  for (int i = 0; i < A.n(); ++i) {
    // alpha_i lies in the span iff appending it does not raise the rank
    DenseMatrix<F> M2(rank + 1, A.ell(), field);
    for (int r = 0; r < rank; ++r)
      for (int j = 0; j < A.ell(); ++j) M2.at(r, j) = M.at(r, j);
    for (int j = 0; j < A.ell(); ++j) M2.at(rank, j) = A.rows[i][j];
    if (matrixRank(field, M2) == rank) closed |= 1u << i;
  }
  return Flat{closed, rank, std::popcount(closed)};
}

}  // namespace detail

// All flats of the intersection lattice, the empty flat included, ordered by
// (rank, mask). Requires n <= 31.
template <class F>
std::vector<Flat> intersectionLattice(const Arrangement<F>& A) {
  if (A.n() > 31) throw std::invalid_argument("intersectionLattice: too many hyperplanes");
  std::set<std::uint32_t> seen;
  std::vector<Flat> flats;
  std::queue<Flat> work;
  Flat empty{0, 0, 0};
  seen.insert(0);
  flats.push_back(empty);
  work.push(empty);
  while (!work.empty()) {
    Flat f = work.front();
    work.pop();
    for (int j = 0; j < A.n(); ++j) {
      if (f.mask & (1u << j)) continue;
      Flat g = detail::closeFlat(A, f.mask | (1u << j));
      if (seen.insert(g.mask).second) {
        flats.push_back(g);
        work.push(g);
      }
    }
  }
  std::sort(flats.begin(), flats.end(), [](const Flat& a, const Flat& b) {
    if (a.rank != b.rank) return a.rank < b.rank;
    return a.mask < b.mask;
  });
  return flats;
}

// A prime is good for the arrangement when it divides no flat multiplicity;
// characteristic zero is always good. Guards the transfer of characteristic
// zero results to positive characteristic.
template <class F>
bool isGoodCharacteristic(const Arrangement<F>& A) {
  const auto p = A.ring.field.characteristic();
  if (p == 0) return true;
  for (const Flat& f : intersectionLattice(A)) {
    if (f.size == 0) continue;
    if (f.size % static_cast<int>(p) == 0) return false;
  }
  return true;
}

}  // namespace arrlog
