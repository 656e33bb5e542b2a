#include "hoqmc/lattice.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <mutex>
#include <stdexcept>

namespace hoqmc {

namespace {

void check_m(int m) {
  if (m < kMinM || m > kMaxM)
    throw std::invalid_argument("lattice: m must lie in [2, 32]");
}

}  // namespace

double PointSet::value(std::size_t i, std::size_t j) const {
  return std::ldexp(static_cast<double>(numerator(i, j)), -digits);
}

void PointSet::row(std::size_t i, std::span<double> out) const {
  for (std::size_t j = 0; j < dim; ++j) out[j] = value(i, j);
}

void LatticeRule::validate() const {
  check_m(m);
  if (modulus.degree() != m)
    throw std::invalid_argument("LatticeRule: deg(modulus) != m");
  if (gen.empty()) throw std::invalid_argument("LatticeRule: empty gen vector");
  for (const F2Poly& q : gen) {
    if (q.is_zero() || q.degree() >= m)
      throw std::invalid_argument(
          "LatticeRule: generating polynomial must be nonzero with deg < m");
  }
}

std::uint64_t v_m_numerator(F2Poly num, F2Poly den, int m) {
  check_m(m);
  if (den.is_zero() || den.degree() != m)
    throw std::invalid_argument("v_m: denominator must have degree m");
  if (num.is_zero()) return 0;
  if (num.degree() + m > 63)
    throw std::invalid_argument("v_m: numerator degree too large");
  // num/den = Q*x^-m + (R/den)*x^-m with num*x^m = den*Q + R, deg R < m.
  // Digit i of the truncated expansion is coefficient m-i of Q, so the
  // m-digit dyadic numerator is just Q reduced to its low m bits.
  const F2Poly shifted{num.bits() << m};
  const std::uint64_t q = f2_divmod(shifted, den).quot.bits();
  return q & ((std::uint64_t{1} << m) - 1);
}

double v_m(F2Poly num, F2Poly den, int m) {
  return std::ldexp(static_cast<double>(v_m_numerator(num, den, m)), -m);
}

std::vector<std::uint64_t> lattice_column(F2Poly q, F2Poly p, int m) {
  check_m(m);
  if (p.degree() != m)
    throw std::invalid_argument("lattice_column: deg(p) != m");
  const std::uint64_t n = std::uint64_t{1} << m;
  // Basis numerators g_k = v_m(x^k q mod p / p); v_m is F2-linear in the
  // numerator, so the point for index n is the XOR over its set bits.
  std::array<std::uint64_t, 64> basis{};
  F2Poly t = f2_mod(q, p);
  for (int k = 0; k < m; ++k) {
    basis[k] = v_m_numerator(t, p, m);
    t = f2_mulmod(t, F2Poly::x(), p);
  }
  std::vector<std::uint64_t> col(n);
  col[0] = 0;
  std::uint64_t cur = 0;
  for (std::uint64_t i = 1; i < n; ++i) {
    cur ^= basis[std::countr_zero(i)];
    col[i ^ (i >> 1)] = cur;
  }
  return col;
}

PointSet gen_points(const LatticeRule& rule) {
  rule.validate();
  const std::size_t d = rule.dim();
  const std::uint64_t n = rule.count();
  PointSet pts;
  pts.dim = d;
  pts.digits = rule.m;
  pts.num.resize(static_cast<std::size_t>(n) * d);
  for (std::size_t j = 0; j < d; ++j) {
    const auto col = lattice_column(rule.gen[j], rule.modulus, rule.m);
    for (std::uint64_t i = 0; i < n; ++i) pts.num[i * d + j] = col[i];
  }
  return pts;
}

std::uint64_t interlace_coord(std::span<const std::uint64_t> streams,
                              int digits_in, int alpha) {
  const int digits_out = alpha * digits_in;
  if (alpha < 1) throw std::invalid_argument("interlace: alpha must be >= 1");
  if (digits_out > 63)
    throw std::invalid_argument("interlace: alpha*digits exceeds 63 bits");
  std::uint64_t out = 0;
  for (int i = 1; i <= digits_in; ++i) {
    for (int tau = 1; tau <= alpha; ++tau) {
      const std::uint64_t bit = streams[tau - 1] >> (digits_in - i) & 1;
      out |= bit << (digits_out - (alpha * (i - 1) + tau));
    }
  }
  return out;
}

PointSet interlace(const PointSet& base, int alpha) {
  if (alpha < 1) throw std::invalid_argument("interlace: alpha must be >= 1");
  if (base.dim % alpha != 0)
    throw std::invalid_argument("interlace: dim not divisible by alpha");
  const std::size_t d = base.dim / alpha;
  const std::size_t n = base.count();
  PointSet out;
  out.dim = d;
  out.digits = alpha * base.digits;
  out.num.resize(n * d);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const std::span<const std::uint64_t> streams{
          base.num.data() + i * base.dim + j * alpha,
          static_cast<std::size_t>(alpha)};
      out.num[i * d + j] = interlace_coord(streams, base.digits, alpha);
    }
  }
  return out;
}

void InterlacedRule::validate() const {
  base.validate();
  if (alpha < 1) throw std::invalid_argument("InterlacedRule: alpha >= 1");
  if (base.dim() % alpha != 0)
    throw std::invalid_argument("InterlacedRule: base dim not alpha*d");
  if (alpha * base.m > 63)
    throw std::invalid_argument("InterlacedRule: alpha*m exceeds 63 digits");
}

PointSet InterlacedRule::points() const {
  validate();
  return interlace(gen_points(base), alpha);
}

std::vector<double> epl_coeffs(int alpha) {
  if (alpha == 1) return {1.0};
  if (alpha == 2) return {2.0, -1.0};
  throw std::invalid_argument(
      "epl_coeffs: coefficients for alpha > 2 must be user-supplied");
}

std::uint64_t ExtrapolatedRule::count() const {
  std::uint64_t n = 0;
  for (const LatticeRule& r : levels) n += r.count();
  return n;
}

void ExtrapolatedRule::validate() const {
  if (alpha < 1 || static_cast<std::size_t>(alpha) != levels.size() ||
      levels.size() != coeffs.size())
    throw std::invalid_argument("ExtrapolatedRule: need alpha levels/coeffs");
  double sum = 0;
  for (double c : coeffs) sum += c;
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("ExtrapolatedRule: coefficients must sum to 1");
  const int m0 = levels.front().m;
  const std::size_t d = levels.front().dim();
  for (int t = 0; t < alpha; ++t) {
    levels[t].validate();
    if (levels[t].m != m0 - t)
      throw std::invalid_argument("ExtrapolatedRule: level sizes must nest");
    if (levels[t].dim() != d)
      throw std::invalid_argument("ExtrapolatedRule: level dims must agree");
  }
}

namespace {

// Lowest irreducible polynomial of each degree 2..32.
constexpr std::array<std::uint64_t, 31> kIrreducible = {
    0x7,        0xB,       0x13,      0x25,       0x43,      0x83,
    0x11B,      0x203,     0x409,     0x805,      0x1009,    0x201B,
    0x4021,     0x8003,    0x1002B,   0x20009,    0x40009,   0x80027,
    0x100009,   0x200005,  0x400003,  0x800021,   0x100001B, 0x2000009,
    0x400001B,  0x8000027, 0x10000003, 0x20000005, 0x40000003, 0x80000009,
    0x10000008D};

std::once_flag g_table_checked;

void check_table() {
  for (int m = kMinM; m <= kMaxM; ++m) {
    const F2Poly p{kIrreducible[m - kMinM]};
    if (p.degree() != m || !f2_irreducible(p))
      throw std::logic_error("modulus table: entry failed irreducibility");
  }
}

}  // namespace

F2Poly default_modulus(int m) {
  check_m(m);
  std::call_once(g_table_checked, check_table);
  return F2Poly{kIrreducible[m - kMinM]};
}

F2Poly alternate_modulus(int m) {
  const F2Poly base = default_modulus(m);
  for (std::uint64_t c = base.bits() + 2;; c += 2) {
    const F2Poly p{c};
    if (p.degree() != m)
      throw std::logic_error("alternate_modulus: no irreducible found");
    if (f2_irreducible(p)) return p;
  }
}

}  // namespace hoqmc
