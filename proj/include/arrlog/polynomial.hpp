#pragma once

// Sparse multivariate polynomials over an exact field. Terms are kept sorted
// strictly descending under the ring's monomial order so the leading term is
// always terms().front().

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "arrlog/field.hpp"
#include "arrlog/monomial.hpp"

namespace arrlog {

template <class F>
struct Ring {
  F field;
  int nvars = 0;
  MonomialOrder order = MonomialOrder::grevlex();

  Monomial one() const { return Monomial::one(nvars); }
  Monomial var(int i, int p = 1) const { return Monomial::var(nvars, i, p); }
};

template <class F>
struct Term {
  Monomial m;
  typename F::Elt c;
};

template <class F>
class Polynomial {
 public:
  using Elt = typename F::Elt;

  Polynomial() = default;
  explicit Polynomial(std::vector<Term<F>> sortedTerms) : t_(std::move(sortedTerms)) {}

  bool isZero() const { return t_.empty(); }
  const std::vector<Term<F>>& terms() const { return t_; }
  std::vector<Term<F>>& termsMutable() { return t_; }
  const Term<F>& leadTerm() const {
    if (t_.empty()) throw std::domain_error("Polynomial: leading term of zero");
    return t_.front();
  }

  bool equals(const Ring<F>& R, const Polynomial& o) const {
    if (t_.size() != o.t_.size()) return false;
    for (std::size_t i = 0; i < t_.size(); ++i)
      if (t_[i].m != o.t_[i].m || !R.field.eq(t_[i].c, o.t_[i].c)) return false;
    return true;
  }

 private:
  std::vector<Term<F>> t_;
};

// Total degree; -1 for the zero polynomial. Works for any stored order.
template <class F>
int degreeOf(const Polynomial<F>& a) {
  int d = -1;
  for (const auto& t : a.terms()) d = std::max(d, int(t.m.deg));
  return d;
}

template <class F>
bool isHomogeneous(const Polynomial<F>& a) {
  for (const auto& t : a.terms())
    if (t.m.deg != a.terms().front().m.deg) return false;
  return true;
}

// Sorts, merges equal monomials, drops zero coefficients.
template <class F>
Polynomial<F> normalized(const Ring<F>& R, std::vector<Term<F>> ts) {
  std::sort(ts.begin(), ts.end(), [&](const Term<F>& a, const Term<F>& b) {
    return compareMonomials(a.m, b.m, R.order) > 0;
  });
  std::vector<Term<F>> out;
  out.reserve(ts.size());
  for (auto& t : ts) {
    if (!out.empty() && out.back().m == t.m)
      out.back().c = R.field.add(out.back().c, t.c);
    else
      out.push_back(std::move(t));
    if (!out.empty() && R.field.isZero(out.back().c)) out.pop_back();
  }
  return Polynomial<F>(std::move(out));
}

template <class F>
Polynomial<F> polyZero() {
  return Polynomial<F>();
}

template <class F>
Polynomial<F> polyConst(const Ring<F>& R, typename F::Elt c) {
  if (R.field.isZero(c)) return {};
  return Polynomial<F>({Term<F>{R.one(), c}});
}

template <class F>
Polynomial<F> polyMonomial(const Ring<F>& R, const Monomial& m, typename F::Elt c) {
  if (R.field.isZero(c)) return {};
  (void)R;
  return Polynomial<F>({Term<F>{m, c}});
}

template <class F>
Polynomial<F> polyAdd(const Ring<F>& R, const Polynomial<F>& a, const Polynomial<F>& b) {
  std::vector<Term<F>> out;
  out.reserve(a.terms().size() + b.terms().size());
  std::size_t i = 0, j = 0;
  while (i < a.terms().size() && j < b.terms().size()) {
    int cmp = compareMonomials(a.terms()[i].m, b.terms()[j].m, R.order);
    if (cmp > 0)
      out.push_back(a.terms()[i++]);
    else if (cmp < 0)
      out.push_back(b.terms()[j++]);
    else {
      auto c = R.field.add(a.terms()[i].c, b.terms()[j].c);
      if (!R.field.isZero(c)) out.push_back(Term<F>{a.terms()[i].m, c});
      ++i, ++j;
    }
  }
  for (; i < a.terms().size(); ++i) out.push_back(a.terms()[i]);
  for (; j < b.terms().size(); ++j) out.push_back(b.terms()[j]);
  return Polynomial<F>(std::move(out));
}

template <class F>
Polynomial<F> polyNeg(const Ring<F>& R, const Polynomial<F>& a) {
  auto ts = a.terms();
  for (auto& t : ts) t.c = R.field.neg(t.c);
  return Polynomial<F>(std::move(ts));
}

template <class F>
Polynomial<F> polySub(const Ring<F>& R, const Polynomial<F>& a, const Polynomial<F>& b) {
  return polyAdd(R, a, polyNeg(R, b));
}

template <class F>
Polynomial<F> polyScale(const Ring<F>& R, const Polynomial<F>& a, const typename F::Elt& c) {
  if (R.field.isZero(c)) return {};
  auto ts = a.terms();
  for (auto& t : ts) t.c = R.field.mul(t.c, c);
  return Polynomial<F>(std::move(ts));
}

// (m * c) * a, preserving sortedness (monomial multiplication is order-compatible).
template <class F>
Polynomial<F> polyTermMul(const Ring<F>& R, const Monomial& m, const typename F::Elt& c,
                          const Polynomial<F>& a) {
  if (R.field.isZero(c)) return {};
  auto ts = a.terms();
  for (auto& t : ts) {
    t.m = t.m.mul(m);
    t.c = R.field.mul(t.c, c);
  }
  return Polynomial<F>(std::move(ts));
}

template <class F>
Polynomial<F> polyMultiply(const Ring<F>& R, const Polynomial<F>& a, const Polynomial<F>& b) {
  if (a.isZero() || b.isZero()) return {};
  const auto& small = a.terms().size() <= b.terms().size() ? a : b;
  const auto& big = a.terms().size() <= b.terms().size() ? b : a;
  Polynomial<F> acc;
  for (const auto& t : small.terms()) acc = polyAdd(R, acc, polyTermMul(R, t.m, t.c, big));
  return acc;
}

// Exact division a / b; throws std::domain_error when b does not divide a.
template <class F>
Polynomial<F> exactDivide(const Ring<F>& R, const Polynomial<F>& a, const Polynomial<F>& b) {
  if (b.isZero()) throw std::domain_error("exactDivide: division by zero");
  std::vector<Term<F>> q;
  Polynomial<F> r = a;
  const auto& lb = b.leadTerm();
  while (!r.isZero()) {
    const auto& lr = r.leadTerm();
    if (!lb.m.divides(lr.m)) throw std::domain_error("exactDivide: not divisible");
    Monomial qm = lr.m.div(lb.m);
    auto qc = R.field.div(lr.c, lb.c);
    q.push_back(Term<F>{qm, qc});
    r = polySub(R, r, polyTermMul(R, qm, qc, b));
  }
  return normalized(R, std::move(q));
}

template <class F>
Polynomial<F> derivative(const Ring<F>& R, const Polynomial<F>& a, int var) {
  std::vector<Term<F>> out;
  for (const auto& t : a.terms()) {
    int e = t.m[var];
    if (e == 0) continue;
    auto c = R.field.mul(t.c, R.field.fromInt(e));
    if (R.field.isZero(c)) continue;
    Monomial m = t.m.div(R.var(var));
    out.push_back(Term<F>{m, c});
  }
  return normalized(R, std::move(out));
}

inline std::string defaultVarName(int i, int nvars) {
  static const char* xyzw[] = {"x", "y", "z", "w"};
  if (nvars <= 4) return xyzw[i];
  return "x" + std::to_string(i + 1);
}

template <class F>
std::string polyStr(const Ring<F>& R, const Polynomial<F>& a) {
  if (a.isZero()) return "0";
  std::string s;
  for (const auto& t : a.terms()) {
    std::string cs = R.field.str(t.c);
    if (!s.empty()) {
      if (!cs.empty() && cs[0] == '-') {
        s += " - ";
        cs = cs.substr(1);
      } else {
        s += " + ";
      }
    }
    std::string ms = t.m.str([&](int i) { return defaultVarName(i, R.nvars); });
    if (ms == "1")
      s += cs;
    else if (cs == "1")
      s += ms;
    else
      s += cs + "*" + ms;
  }
  return s;
}

// Minimal parser for tests: integer/rational coefficients, variables x1..xn
// (or x,y,z,w when nvars <= 4), '^' powers, '*' products, '+'/'-'.
template <class F>
Polynomial<F> parsePolynomial(const Ring<F>& R, const std::string& src) {
  std::vector<Term<F>> ts;
  std::size_t i = 0;
  auto skipWs = [&] {
    while (i < src.size() && std::isspace(static_cast<unsigned char>(src[i]))) ++i;
  };
  auto parseInt = [&]() -> long long {
    long long v = 0;
    bool any = false;
    while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
      v = v * 10 + (src[i++] - '0');
      any = true;
    }
    if (!any) throw std::invalid_argument("parsePolynomial: expected integer in '" + src + "'");
    return v;
  };
  skipWs();
  bool first = true;
  while (i < src.size()) {
    int sign = 1;
    skipWs();
    if (src[i] == '+' || src[i] == '-') {
      sign = src[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      throw std::invalid_argument("parsePolynomial: expected '+' or '-' in '" + src + "'");
    }
    first = false;
    skipWs();
    typename F::Elt coeff = R.field.one();
    bool sawCoeff = false;
    if (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
      long long num = parseInt();
      long long den = 1;
      if (i < src.size() && src[i] == '/') {
        ++i;
        den = parseInt();
      }
      coeff = R.field.fromRational(num, den);
      sawCoeff = true;
    }
    if (sign < 0) coeff = R.field.neg(coeff);
    Monomial m = R.one();
    bool sawVar = false;
    for (;;) {
      skipWs();
      if (i < src.size() && src[i] == '*') {
        ++i;
        skipWs();
      }
      if (i >= src.size() || !std::isalpha(static_cast<unsigned char>(src[i]))) break;
      int var = -1;
      if (src[i] == 'x' && i + 1 < src.size() && std::isdigit(static_cast<unsigned char>(src[i + 1]))) {
        ++i;
        var = static_cast<int>(parseInt()) - 1;
      } else {
        const std::string names = "xyzw";
        auto p = names.find(src[i]);
        if (p == std::string::npos || R.nvars > 4)
          throw std::invalid_argument("parsePolynomial: unknown variable in '" + src + "'");
        var = static_cast<int>(p);
        ++i;
      }
      if (var < 0 || var >= R.nvars)
        throw std::invalid_argument("parsePolynomial: variable index out of range in '" + src + "'");
      int pow = 1;
      skipWs();
      if (i < src.size() && src[i] == '^') {
        ++i;
        skipWs();
        pow = static_cast<int>(parseInt());
      }
      m = m.mul(R.var(var, pow));
      sawVar = true;
    }
    if (!sawCoeff && !sawVar)
      throw std::invalid_argument("parsePolynomial: empty term in '" + src + "'");
    ts.push_back(Term<F>{m, coeff});
    skipWs();
  }
  return normalized(R, std::move(ts));
}

}  // namespace arrlog
