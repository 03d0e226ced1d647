#pragma once

// Exact scalar arithmetic: the rationals (GMP-backed, always in lowest terms)
// and prime fields F_p with p < 2^31 so that products fit in 64 bits.

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace arrlog {

enum class FieldKind { Rational, Prime };

struct FieldSpec {
  FieldKind kind = FieldKind::Prime;
  std::uint32_t prime = 32003;

  static FieldSpec rationals() { return FieldSpec{FieldKind::Rational, 0}; }
  static FieldSpec primeField(std::uint32_t p) { return FieldSpec{FieldKind::Prime, p}; }

  // Accepts "q" or "fp:<prime>".
  static FieldSpec parse(const std::string& s) {
    if (s == "q" || s == "Q") return rationals();
    if (s.rfind("fp:", 0) == 0) {
      unsigned long p = std::stoul(s.substr(3));
      if (p < 2 || p >= (1ul << 31)) throw std::invalid_argument("field: prime out of range: " + s);
      return primeField(static_cast<std::uint32_t>(p));
    }
    throw std::invalid_argument("field: expected 'q' or 'fp:<prime>', got '" + s + "'");
  }

  std::string str() const {
    return kind == FieldKind::Rational ? std::string("q") : "fp:" + std::to_string(prime);
  }

  bool operator==(const FieldSpec& o) const { return kind == o.kind && prime == o.prime; }
};

inline bool isPrimeUint(std::uint64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

// F_p with machine-word residues. Elements are canonical representatives in [0, p).
class FpField {
 public:
  using Elt = std::uint32_t;

  explicit FpField(std::uint32_t p) : p_(p) {
    if (!isPrimeUint(p)) throw std::invalid_argument("FpField: modulus is not prime");
    if (p >= (1u << 31)) throw std::invalid_argument("FpField: modulus must be < 2^31");
  }

  FieldSpec spec() const { return FieldSpec::primeField(p_); }
  std::uint32_t characteristic() const { return p_; }

  Elt zero() const { return 0; }
  Elt one() const { return 1 % p_; }
  bool isZero(Elt a) const { return a == 0; }
  bool isOne(Elt a) const { return a == one(); }

  Elt fromInt(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<Elt>(r);
  }
  Elt fromRational(long long num, long long den) const {
    return mul(fromInt(num), inv(fromInt(den)));
  }

  Elt add(Elt a, Elt b) const {
    std::uint64_t s = std::uint64_t(a) + b;
    if (s >= p_) s -= p_;
    return static_cast<Elt>(s);
  }
  Elt sub(Elt a, Elt b) const { return a >= b ? a - b : a + p_ - b; }
  Elt neg(Elt a) const { return a == 0 ? 0 : p_ - a; }
  Elt mul(Elt a, Elt b) const { return static_cast<Elt>((std::uint64_t(a) * b) % p_); }

  Elt inv(Elt a) const {
    if (a == 0) throw std::domain_error("FpField: division by zero");
    // extended Euclid on (a, p)
    long long t = 0, newt = 1, r = p_, newr = a;
    while (newr != 0) {
      long long q = r / newr;
      long long tmp = t - q * newt;
      t = newt;
      newt = tmp;
      tmp = r - q * newr;
      r = newr;
      newr = tmp;
    }
    if (t < 0) t += p_;
    return static_cast<Elt>(t);
  }
  Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }

  std::string str(Elt a) const { return std::to_string(a); }
  bool eq(Elt a, Elt b) const { return a == b; }

 private:
  std::uint32_t p_;
};

// The rationals. mpq_class keeps values canonicalized (lowest terms, positive denominator).
class QField {
 public:
  using Elt = mpq_class;

  FieldSpec spec() const { return FieldSpec::rationals(); }
  std::uint32_t characteristic() const { return 0; }

  Elt zero() const { return Elt(0); }
  Elt one() const { return Elt(1); }
  bool isZero(const Elt& a) const { return sgn(a) == 0; }
  bool isOne(const Elt& a) const { return a == 1; }

  Elt fromInt(long long v) const {
    Elt e;
    e = static_cast<long>(v);
    return e;
  }
  Elt fromRational(long long num, long long den) const {
    if (den == 0) throw std::domain_error("QField: zero denominator");
    Elt e(static_cast<long>(num), static_cast<long>(den));
    e.canonicalize();
    return e;
  }

  Elt add(const Elt& a, const Elt& b) const { return a + b; }
  Elt sub(const Elt& a, const Elt& b) const { return a - b; }
  Elt neg(const Elt& a) const { return -a; }
  Elt mul(const Elt& a, const Elt& b) const { return a * b; }
  Elt inv(const Elt& a) const {
    if (sgn(a) == 0) throw std::domain_error("QField: division by zero");
    return 1 / a;
  }
  Elt div(const Elt& a, const Elt& b) const {
    if (sgn(b) == 0) throw std::domain_error("QField: division by zero");
    return a / b;
  }

  std::string str(const Elt& a) const { return a.get_str(); }
  bool eq(const Elt& a, const Elt& b) const { return a == b; }
};

}  // namespace arrlog
