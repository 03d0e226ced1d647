#pragma once

// Monomials in up to kMaxVars variables with cached total degree, plus the two
// supported monomial orders (graded reverse lexicographic and lexicographic).

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace arrlog {

inline constexpr int kMaxVars = 12;

struct Monomial {
  std::array<std::uint8_t, kMaxVars> e{};
  std::uint16_t deg = 0;
  std::uint8_t nvars = 0;

  static Monomial one(int n) {
    if (n < 0 || n > kMaxVars) throw std::invalid_argument("Monomial: variable count out of range");
    Monomial m;
    m.nvars = static_cast<std::uint8_t>(n);
    return m;
  }
  static Monomial var(int n, int i, int power = 1) {
    Monomial m = one(n);
    if (i < 0 || i >= n) throw std::invalid_argument("Monomial: variable index out of range");
    if (power < 0 || power > 255) throw std::invalid_argument("Monomial: exponent out of range");
    m.e[i] = static_cast<std::uint8_t>(power);
    m.deg = static_cast<std::uint16_t>(power);
    return m;
  }

  int operator[](int i) const { return e[i]; }
  bool isOne() const { return deg == 0; }

  bool operator==(const Monomial& o) const { return nvars == o.nvars && deg == o.deg && e == o.e; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  Monomial mul(const Monomial& o) const {
    Monomial r = *this;
    for (int i = 0; i < nvars; ++i) {
      int s = r.e[i] + o.e[i];
      if (s > 255) throw std::overflow_error("Monomial: exponent overflow");
      r.e[i] = static_cast<std::uint8_t>(s);
    }
    r.deg = static_cast<std::uint16_t>(deg + o.deg);
    return r;
  }

  bool divides(const Monomial& o) const {
    if (deg > o.deg) return false;
    for (int i = 0; i < nvars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }

  // this / o; requires o | this
  Monomial div(const Monomial& o) const {
    Monomial r = *this;
    for (int i = 0; i < nvars; ++i) {
      if (o.e[i] > r.e[i]) throw std::domain_error("Monomial: non-exact division");
      r.e[i] = static_cast<std::uint8_t>(r.e[i] - o.e[i]);
    }
    r.deg = static_cast<std::uint16_t>(deg - o.deg);
    return r;
  }

  Monomial lcm(const Monomial& o) const {
    Monomial r = *this;
    int d = 0;
    for (int i = 0; i < nvars; ++i) {
      r.e[i] = std::max(r.e[i], o.e[i]);
      d += r.e[i];
    }
    r.deg = static_cast<std::uint16_t>(d);
    return r;
  }

  std::string str(const std::function<std::string(int)>& varName) const {
    if (deg == 0) return "1";
    std::string s;
    for (int i = 0; i < nvars; ++i) {
      if (!e[i]) continue;
      if (!s.empty()) s += "*";
      s += varName(i);
      if (e[i] > 1) s += "^" + std::to_string(int(e[i]));
    }
    return s;
  }
  std::string str() const {
    return str([](int i) { return "x" + std::to_string(i + 1); });
  }
};

struct MonomialOrder {
  enum Kind { Grevlex, Lex };
  Kind kind = Grevlex;

  static MonomialOrder grevlex() { return MonomialOrder{Grevlex}; }
  static MonomialOrder lex() { return MonomialOrder{Lex}; }
};

// Returns -1, 0, +1 as a <, =, > b. Throws when variable counts differ.
inline int compareMonomials(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
  if (a.nvars != b.nvars)
    throw std::invalid_argument("compareMonomials: mismatched variable counts");
  if (ord.kind == MonomialOrder::Grevlex) {
    if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
    for (int i = a.nvars - 1; i >= 0; --i)
      if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
    return 0;
  }
  for (int i = 0; i < a.nvars; ++i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
  return 0;
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (int i = 0; i < m.nvars; ++i) {
      h ^= m.e[i];
      h *= 0x100000001b3ull;
    }
    h ^= m.deg;
    h *= 0x100000001b3ull;
    return static_cast<std::size_t>(h);
  }
};

}  // namespace arrlog
