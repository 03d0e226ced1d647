#pragma once

// Logarithmic derivation and form modules of a central arrangement, in all
// exterior degrees, as explicit submodules of free modules.
//
// Conventions. Variables have degree 1, the basis derivations degree -1 and
// the basis covectors degree +1. Both module families are represented by
// polynomial avatars inside Lambda^p(S^ell):
//   - derivations D_p: the avatar is the module itself (shift 0);
//   - forms: the avatar of Omega^p is f * Omega^p, where f is the defining
//     polynomial, so actual degrees are avatar degrees minus n (shift -n).
// The avatar of Omega^p consists of the eta in Lambda^p(S^ell) with
// alpha_H dividing d(alpha_H) ^ eta for every H; D_p consists of the theta
// with the contraction of d(alpha_H) against theta vanishing mod alpha_H.

#include <stdexcept>
#include <vector>

#include "arrlog/arrangement.hpp"
#include "arrlog/exterior.hpp"
#include "arrlog/groebner.hpp"
#include "arrlog/hilbert.hpp"
#include "arrlog/lattice.hpp"
#include "arrlog/presentation.hpp"

namespace arrlog {

template <class F>
struct LogModule {
  Submodule<F> sub;  // avatar inside Lambda^p(S^ell)
  int p = 0;
  int shift = 0;  // actual degrees = avatar degrees + shift
};

template <class F>
struct QuotientModule {
  Presentation<F> pres;
  int shift = 0;
};

// Euler derivation avatar: components x_j in Lambda^1 with twists -1.
template <class F>
FreeVector<F> eulerDerivation(const Ring<F>& R) {
  FreeVector<F> chi(R.nvars);
  for (int j = 0; j < R.nvars; ++j) chi.component(j) = polyMonomial(R, R.var(j), R.field.one());
  return chi;
}

template <class F>
std::vector<Polynomial<F>> jacobianIdeal(const Arrangement<F>& A) {
  Polynomial<F> f = definingPolynomial(A);
  std::vector<Polynomial<F>> out;
  for (int j = 0; j < A.ell(); ++j) out.push_back(derivative(A.ring, f, j));
  return out;
}

namespace detail {

// Kernel of a block of constant-coefficient conditions "image of e_T under
// each hyperplane's linear map vanishes mod alpha_i", the shared shape of
// both module families.
//
// conditionBlock(i, s) returns the image of source basis element s in the
// per-hyperplane condition space (rank condRank), with constant
// coefficients encoded as (index, coefficient) pairs.
template <class F, class Block>
Submodule<F> conditionKernel(const Arrangement<F>& A, const GradedFreeModule& source,
                             int condRank, Block&& conditionBlock) {
  const Ring<F>& R = A.ring;
  const int n = A.n();
  std::vector<int> targetTwists;
  for (int i = 0; i < n; ++i)
    for (int u = 0; u < condRank; ++u) targetTwists.push_back(source.twists[0]);
  GradedFreeModule target(n * condRank, std::move(targetTwists));

  std::vector<FreeVector<F>> phi;
  for (int s = 0; s < source.rank; ++s) {
    FreeVector<F> col(target.rank);
    for (int i = 0; i < n; ++i)
      for (const auto& [u, c] : conditionBlock(i, s))
        col.component(i * condRank + u) = polyAdd(R, col.component(i * condRank + u),
                                                  polyConst(R, c));
    phi.push_back(std::move(col));
  }
  std::vector<FreeVector<F>> modulo;
  for (int i = 0; i < n; ++i) {
    Polynomial<F> alpha = linearForm(A, i);
    for (int u = 0; u < condRank; ++u) {
      FreeVector<F> v(target.rank);
      v.component(i * condRank + u) = alpha;
      modulo.push_back(std::move(v));
    }
  }
  return kernelModulo(R, target, phi, source.twists, modulo);
}

}  // namespace detail

// D_p(A): alternating p-derivations theta with the contraction of each
// d(alpha_i) against theta divisible by alpha_i. D_0 = S.
template <class F>
LogModule<F> logDerivations(const Arrangement<F>& A, int p = 1) {
  const Ring<F>& R = A.ring;
  const int ell = A.ell();
  if (p < 0 || p > ell) return LogModule<F>{Submodule<F>{GradedFreeModule(0, {}), {}}, p, 0};
  ExteriorIndex ip(ell, p);
  GradedFreeModule source = GradedFreeModule::uniform(ip.rank(), -p);
  if (p == 0) {
    Submodule<F> full{source, {basisVector(R, 1, 0)}};
    return LogModule<F>{std::move(full), 0, 0};
  }
  ExteriorIndex ic(ell, p - 1);
  using Entry = std::pair<int, typename F::Elt>;
  auto block = [&](int i, int s) {
    std::vector<Entry> out;
    std::uint32_t m = ip.masks[s];
    std::uint32_t rest = m;
    while (rest) {
      int j = std::countr_zero(rest);
      rest &= rest - 1;
      if (A.ring.field.isZero(A.rows[i][j])) continue;
      auto c = A.rows[i][j];
      if (insertSign(m & ~(1u << j), j) < 0) c = A.ring.field.neg(c);
      out.emplace_back(ic.indexOf(m & ~(1u << j)), c);
    }
    return out;
  };
  Submodule<F> sub = detail::conditionKernel(A, source, ic.rank(), block);
  return LogModule<F>{std::move(sub), p, 0};
}

// Avatar of Omega^p(A): eta in Lambda^p with alpha_i | d(alpha_i) ^ eta.
// Actual degrees are avatar degrees - n. Omega^ell is free on the top form.
template <class F>
LogModule<F> logForms(const Arrangement<F>& A, int p = 1) {
  const Ring<F>& R = A.ring;
  const int ell = A.ell();
  const int n = A.n();
  if (p < 0 || p > ell) throw std::invalid_argument("logForms: bad exterior degree");
  ExteriorIndex ip(ell, p);
  GradedFreeModule source = GradedFreeModule::uniform(ip.rank(), p);
  if (p == ell) {
    Submodule<F> full{source, {}};
    for (int s = 0; s < source.rank; ++s) full.gens.push_back(basisVector(R, source.rank, s));
    return LogModule<F>{std::move(full), p, -n};
  }
  ExteriorIndex ic(ell, p + 1);
  using Entry = std::pair<int, typename F::Elt>;
  auto block = [&](int i, int s) {
    std::vector<Entry> out;
    std::uint32_t m = ip.masks[s];
    for (int j = 0; j < ell; ++j) {
      if (m & (1u << j)) continue;
      if (A.ring.field.isZero(A.rows[i][j])) continue;
      auto c = A.rows[i][j];
      if (insertSign(m, j) < 0) c = A.ring.field.neg(c);
      out.emplace_back(ic.indexOf(m | (1u << j)), c);
    }
    return out;
  };
  Submodule<F> sub = detail::conditionKernel(A, source, ic.rank(), block);
  return LogModule<F>{std::move(sub), p, -n};
}

// Avatar of Omega^p_0(A) = ker(contraction with the Euler derivation on
// Omega^p). Computed as the preimage inside the Omega^p avatar.
template <class F>
LogModule<F> relativeLogForms(const Arrangement<F>& A, int p = 1) {
  const Ring<F>& R = A.ring;
  const int ell = A.ell();
  LogModule<F> base = logForms(A, p);
  if (p == 0) return base;  // contraction out of degree zero is the zero map

  std::vector<FreeVector<F>> mg = minimalGenerators(R, base.sub);
  ExteriorIndex ip(ell, p), ic(ell, p - 1);
  std::vector<Polynomial<F>> chi;
  for (int j = 0; j < ell; ++j) chi.push_back(polyMonomial(R, R.var(j), R.field.one()));
  GradedFreeModule targetC = GradedFreeModule::uniform(ic.rank(), p - 1);

  std::vector<FreeVector<F>> psi;
  std::vector<int> deg;
  for (const auto& g : mg) {
    psi.push_back(contract(R, chi, ip, g, ic));
    deg.push_back(degreeOf(g, base.sub.ambient));
  }
  Submodule<F> K = kernelModulo(R, targetC, psi, deg, {});

  Submodule<F> out{base.sub.ambient, {}};
  for (const auto& c : K.gens) {
    FreeVector<F> v(base.sub.ambient.rank);
    for (std::size_t k = 0; k < mg.size(); ++k) {
      if (c.component(static_cast<int>(k)).isZero()) continue;
      v = vecAdd(R, v, vecScalePoly(R, c.component(static_cast<int>(k)), mg[k]));
    }
    if (!v.isZero()) out.gens.push_back(std::move(v));
  }
  return LogModule<F>{std::move(out), p, -A.n()};
}

// D^0_p(A) = D_p / (chi ^ D_(p-1)): derivations relative to the cone
// structure. Returned as a presentation; shift 0.
template <class F>
QuotientModule<F> relativeDerivations(const Arrangement<F>& A, int p = 1) {
  const Ring<F>& R = A.ring;
  const int ell = A.ell();
  if (p < 1 || p > ell) throw std::invalid_argument("relativeDerivations: bad exterior degree");
  LogModule<F> Dp = logDerivations(A, p);
  LogModule<F> Dq = logDerivations(A, p - 1);

  ExteriorIndex i1(ell, 1), iq(ell, p - 1), ip(ell, p);
  FreeVector<F> chi = eulerDerivation(R);
  std::vector<FreeVector<F>> chiWedge;
  for (const auto& g : Dq.sub.gens) {
    FreeVector<F> w = wedge(R, i1, chi, iq, g, ip);
    if (!w.isZero()) chiWedge.push_back(std::move(w));
  }

  std::vector<FreeVector<F>> mg = minimalGenerators(R, Dp.sub);
  GradedFreeModule E0 = moduleOnGenerators(Dp.sub.ambient, mg);
  Submodule<F> rel = kernelModulo(R, Dp.sub.ambient, mg, E0.twists, chiWedge);
  return QuotientModule<F>{Presentation<F>{E0, std::move(rel.gens)}, 0};
}

// Hilbert series in actual (shifted) degrees.
template <class F>
HilbertSeries logModuleSeries(const Ring<F>& R, const LogModule<F>& M) {
  GroebnerBasis<F> G = buchberger(R, M.sub);
  HilbertSeries h = hilbertSeriesOfSubmodule(R, G);
  h.shift(M.shift);
  h.canonicalize();
  return h;
}

template <class F>
HilbertSeries quotientModuleSeries(const Ring<F>& R, const QuotientModule<F>& M) {
  HilbertSeries h = hilbertSeriesOfCokernel(R, M.pres);
  h.shift(M.shift);
  h.canonicalize();
  return h;
}

// Twisted degrees of a minimal generating set, in actual degrees, ascending.
template <class F>
std::vector<int> minimalGeneratorDegrees(const Ring<F>& R, const LogModule<F>& M) {
  std::vector<int> out;
  for (const auto& g : minimalGenerators(R, M.sub))
    out.push_back(degreeOf(g, M.sub.ambient) + M.shift);
  std::sort(out.begin(), out.end());
  return out;
}

// f, its ideal of partials, and the syzygies of the partials. The syzygy
// source carries twists -1 so that (a_1,...,a_l) |-> sum a_j d_j matches the
// grading of D(A): theta of twisted degree d has coefficients of degree d+1.
// Requires good characteristic so that the Euler relation sum x_j f_j = n f
// identifies D(A) with S*chi + Syz(J).
template <class F>
struct JacobianData {
  Polynomial<F> f;
  Submodule<F> ideal;     // J inside S (rank-1 ambient, twist 0)
  Submodule<F> syzygies;  // Syz(J) inside S^l (twists -1)
};

template <class F>
JacobianData<F> jacobianData(const Arrangement<F>& A) {
  if (!isGoodCharacteristic(A))
    throw std::domain_error("jacobianData: bad characteristic for this arrangement");
  const Ring<F>& R = A.ring;
  const int ell = A.ell();
  JacobianData<F> out;
  out.f = definingPolynomial(A);
  std::vector<Polynomial<F>> partials = jacobianIdeal(A);

  GradedFreeModule S1(1, {0});
  out.ideal = Submodule<F>{S1, {}};
  for (const auto& g : partials) {
    FreeVector<F> v(1);
    v.component(0) = g;
    out.ideal.gens.push_back(std::move(v));
  }

  // Map e_j -> f_j out of S^l(-1)...: realized with a rank-1 target of twist
  // -n so each column has twisted degree (n-1) - n = -1.
  GradedFreeModule target(1, {-A.n()});
  std::vector<FreeVector<F>> cols;
  for (int j = 0; j < ell; ++j) {
    FreeVector<F> v(1);
    v.component(0) = partials[static_cast<std::size_t>(j)];
    cols.push_back(std::move(v));
  }
  Submodule<F> syz = kernelModulo(R, target, cols, std::vector<int>(ell, -1), {});
  out.syzygies = std::move(syz);
  return out;
}

}  // namespace arrlog
