#pragma once

#include <bit>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace hoqmc {

// Polynomial over the two-element field, stored as a bitmask with the
// constant term in bit 0. Addition is XOR; there are no carries anywhere.
// The zero polynomial reports degree -1 (standing in for -infinity).
class F2Poly {
 public:
  constexpr F2Poly() = default;
  explicit constexpr F2Poly(std::uint64_t bits) : bits_(bits) {}

  static constexpr F2Poly zero() { return F2Poly{0}; }
  static constexpr F2Poly one() { return F2Poly{1}; }
  static constexpr F2Poly x() { return F2Poly{2}; }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool is_zero() const { return bits_ == 0; }
  constexpr int degree() const {
    return bits_ == 0 ? -1 : 63 - std::countl_zero(bits_);
  }

  friend constexpr F2Poly operator+(F2Poly a, F2Poly b) {
    return F2Poly{a.bits_ ^ b.bits_};
  }
  friend constexpr bool operator==(F2Poly a, F2Poly b) = default;

 private:
  std::uint64_t bits_ = 0;
};

// Carry-less product. Requires deg(a) + deg(b) <= 63.
constexpr F2Poly f2_mul(F2Poly a, F2Poly b) {
  if (!a.is_zero() && !b.is_zero() && a.degree() + b.degree() > 63)
    throw std::invalid_argument("f2_mul: product exceeds 64-bit capacity");
  std::uint64_t r = 0, av = a.bits(), bv = b.bits();
  while (bv) {
    if (bv & 1) r ^= av;
    av <<= 1;
    bv >>= 1;
  }
  return F2Poly{r};
}

struct F2DivMod {
  F2Poly quot;
  F2Poly rem;
};

// Euclidean division a = quot*b + rem with deg(rem) < deg(b).
constexpr F2DivMod f2_divmod(F2Poly a, F2Poly b) {
  if (b.is_zero()) throw std::invalid_argument("f2_divmod: zero divisor");
  std::uint64_t q = 0, r = a.bits();
  const int db = b.degree();
  while (r != 0) {
    const int dr = 63 - std::countl_zero(r);
    if (dr < db) break;
    q |= std::uint64_t{1} << (dr - db);
    r ^= b.bits() << (dr - db);
  }
  return {F2Poly{q}, F2Poly{r}};
}

constexpr F2Poly f2_mod(F2Poly a, F2Poly b) { return f2_divmod(a, b).rem; }

// (a*b) mod p without intermediate overflow; works for deg(p) <= 63.
constexpr F2Poly f2_mulmod(F2Poly a, F2Poly b, F2Poly p) {
  if (p.is_zero()) throw std::invalid_argument("f2_mulmod: zero modulus");
  std::uint64_t av = f2_mod(a, p).bits();
  std::uint64_t bv = f2_mod(b, p).bits();
  const int dp = p.degree();
  std::uint64_t r = 0;
  while (bv) {
    if (bv & 1) r ^= av;
    bv >>= 1;
    av <<= 1;
    if (av >> dp & 1) av ^= p.bits();
  }
  return F2Poly{r};
}

constexpr F2Poly f2_powmod(F2Poly a, std::uint64_t e, F2Poly p) {
  F2Poly r = f2_mod(F2Poly::one(), p);
  F2Poly base = f2_mod(a, p);
  while (e) {
    if (e & 1) r = f2_mulmod(r, base, p);
    base = f2_mulmod(base, base, p);
    e >>= 1;
  }
  return r;
}

constexpr F2Poly f2_gcd(F2Poly a, F2Poly b) {
  while (!b.is_zero()) {
    F2Poly t = f2_mod(a, b);
    a = b;
    b = t;
  }
  return a;
}

// Rabin's test: p of degree m is irreducible iff x^(2^m) == x (mod p) and
// gcd(x^(2^(m/r)) - x, p) = 1 for every prime r dividing m.
constexpr bool f2_irreducible(F2Poly p) {
  const int m = p.degree();
  if (m <= 0) return false;
  if ((p.bits() & 1) == 0) return m == 1 && p == F2Poly::x();
  const F2Poly x = F2Poly::x();
  if (f2_powmod(x, std::uint64_t{1} << m, p) != f2_mod(x, p)) return false;
  int n = m;
  for (int r = 2; r * r <= n; ++r) {
    if (n % r != 0) continue;
    while (n % r == 0) n /= r;
    F2Poly h = f2_powmod(x, std::uint64_t{1} << (m / r), p) + x;
    if (f2_gcd(p, h).degree() != 0) return false;
  }
  if (n > 1) {
    F2Poly h = f2_powmod(x, std::uint64_t{1} << (m / n), p) + x;
    if (f2_gcd(p, h).degree() != 0) return false;
  }
  return true;
}

inline std::string f2_to_hex(F2Poly p) {
  char buf[19];
  std::snprintf(buf, sizeof buf, "0x%llX",
                static_cast<unsigned long long>(p.bits()));
  return buf;
}

inline F2Poly f2_from_hex(const std::string& s) {
  std::size_t pos = 0;
  const std::uint64_t v = std::stoull(s, &pos, 16);
  if (pos == 0) throw std::invalid_argument("f2_from_hex: not a hex literal");
  return F2Poly{v};
}

}  // namespace hoqmc
