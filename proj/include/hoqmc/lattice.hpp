#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hoqmc/f2poly.hpp"

namespace hoqmc {

inline constexpr int kMinM = 2;
inline constexpr int kMaxM = 32;

// A point set in [0,1)^dim whose coordinates are exact dyadic rationals
// num / 2^digits. Doubles are derived views; all digit-level operations
// (interlacing, duplicate detection) run on the numerators.
struct PointSet {
  std::size_t dim = 0;
  int digits = 0;
  std::vector<std::uint64_t> num;  // row-major, count*dim entries

  std::size_t count() const { return dim == 0 ? 0 : num.size() / dim; }
  std::uint64_t numerator(std::size_t i, std::size_t j) const {
    return num[i * dim + j];
  }
  double value(std::size_t i, std::size_t j) const;
  // Copies row i into out[0..dim) as doubles.
  void row(std::size_t i, std::span<double> out) const;
};

// Base-2 polynomial lattice rule: modulus p of degree m and generating
// polynomials q_j of degree < m. The point set has exactly 2^m points.
struct LatticeRule {
  int m = 0;
  F2Poly modulus;
  std::vector<F2Poly> gen;

  std::size_t dim() const { return gen.size(); }
  std::uint64_t count() const { return std::uint64_t{1} << m; }
  void validate() const;
};

// Truncated Laurent value of num/den: the first m binary digits after the
// point. Returned as a numerator over 2^m. Requires deg(den) = m and
// deg(num) + m <= 63.
std::uint64_t v_m_numerator(F2Poly num, F2Poly den, int m);
double v_m(F2Poly num, F2Poly den, int m);

// All 2^m numerators v_m(n(x) q(x) mod p(x), p(x)) for n = 0..2^m-1,
// indexed by n. Gray-code generation, O(2^m) XORs.
std::vector<std::uint64_t> lattice_column(F2Poly q, F2Poly p, int m);

PointSet gen_points(const LatticeRule& rule);

// Digit interlacing D_alpha: merges alpha consecutive dyadic streams of
// `digits_in` digits each into one coordinate with alpha*digits_in digits.
// Output digit alpha*(i-1)+tau is digit i of stream tau.
std::uint64_t interlace_coord(std::span<const std::uint64_t> streams,
                              int digits_in, int alpha);
PointSet interlace(const PointSet& base, int alpha);

// Interlaced polynomial lattice of order alpha: base rule in alpha*d
// dimensions, output points in [0,1)^d.
struct InterlacedRule {
  LatticeRule base;
  int alpha = 1;

  std::size_t dim() const { return base.dim() / alpha; }
  std::uint64_t count() const { return base.count(); }
  PointSet points() const;
  void validate() const;
};

// Richardson extrapolation coefficients a_tau; alpha = 1 -> {1},
// alpha = 2 -> {2, -1}. Larger alpha requires user-supplied coefficients.
std::vector<double> epl_coeffs(int alpha);

// Extrapolated polynomial lattice: alpha component rules with log-sizes
// m, m-1, ..., m-alpha+1 combined with coefficients summing to one.
struct ExtrapolatedRule {
  int alpha = 2;
  std::vector<LatticeRule> levels;  // levels[t] has m - t sizes, t = 0..alpha-1
  std::vector<double> coeffs;

  int m() const { return levels.empty() ? 0 : levels.front().m; }
  std::size_t dim() const { return levels.empty() ? 0 : levels.front().dim(); }
  // Total node count across levels, N = 2^(m-alpha+1) + ... + 2^m.
  std::uint64_t count() const;
  void validate() const;
};

// Fixed table of degree-m irreducible moduli, re-validated by Rabin's test
// on first use. alternate_modulus returns the next irreducible polynomial
// above the default, for point families that must not collide.
F2Poly default_modulus(int m);
F2Poly alternate_modulus(int m);

}  // namespace hoqmc
