#include "hoqmc/cbc.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "hoqmc/parallel.hpp"

namespace hoqmc {

double walsh_kernel(std::uint64_t numerator, int digits) {
  if (numerator == 0) return 0.5;
  // t = position of the leading digit; 2^-t = 2^(b - digits - 1) for
  // numerator bit width b.
  const int b = std::bit_width(numerator);
  return 0.5 - 1.5 * std::ldexp(1.0, b - digits - 1);
}

ProductWalshCriterion::ProductWalshCriterion(std::vector<double> coord_weights)
    : weights_(std::move(coord_weights)) {
  if (weights_.empty())
    throw std::invalid_argument("ProductWalshCriterion: no weights");
  for (double g : weights_)
    if (!(g > 0.0))
      throw std::invalid_argument("ProductWalshCriterion: weights must be > 0");
}

double ProductWalshCriterion::evaluate(const PointSet& pts) const {
  if (pts.dim > weights_.size())
    throw std::invalid_argument("ProductWalshCriterion: missing weights");
  const std::size_t n = pts.count();
  std::vector<double> terms(n);
  for (std::size_t i = 0; i < n; ++i) {
    double prod = 1.0;
    for (std::size_t j = 0; j < pts.dim; ++j)
      prod *= 1.0 + weights_[j] * walsh_kernel(pts.numerator(i, j), pts.digits);
    terms[i] = prod - 1.0;
  }
  return tree_sum(terms) / double(n);
}

SpodSubsetCriterion::SpodSubsetCriterion(SpodWeights weights,
                                         std::size_t order_cap)
    : weights_(std::move(weights)), order_cap_(order_cap) {
  weights_.validate();
  if (order_cap_ < 1)
    throw std::invalid_argument("SpodSubsetCriterion: order_cap >= 1");
}

namespace {

// Recursive enumeration of subsets u with |u| <= cap; accumulates
// gamma_u * mean_n prod_{j in u} w(y_nj).
double spod_subset_sum(const PointSet& pts, const SpodWeights& w,
                       std::size_t cap, std::vector<std::size_t>& u,
                       std::vector<double>& prod, std::size_t first) {
  double acc = 0.0;
  const std::size_t n = pts.count();
  for (std::size_t j = first; j < pts.dim; ++j) {
    u.push_back(j);
    std::vector<double> next(n);
    for (std::size_t i = 0; i < n; ++i)
      next[i] = prod[i] * walsh_kernel(pts.numerator(i, j), pts.digits);
    acc += spod_weight(u, w) * tree_sum(next) / double(n);
    if (u.size() < cap) acc += spod_subset_sum(pts, w, cap, u, next, j + 1);
    u.pop_back();
  }
  return acc;
}

}  // namespace

double SpodSubsetCriterion::evaluate(const PointSet& pts) const {
  if (pts.dim > weights_.beta.size())
    throw std::invalid_argument("SpodSubsetCriterion: missing beta entries");
  std::vector<std::size_t> u;
  std::vector<double> prod(pts.count(), 1.0);
  return spod_subset_sum(pts, weights_, order_cap_, u, prod, 0);
}

std::vector<double> product_weights_from_spod(const SpodWeights& w,
                                              std::size_t dim) {
  w.validate();
  if (dim > w.beta.size())
    throw std::invalid_argument("product_weights_from_spod: beta too short");
  std::vector<double> g(dim);
  const double order1 = w.alpha == 1 ? 2.0 : 1.0;  // 2^delta(1, alpha)
  for (std::size_t j = 0; j < dim; ++j) g[j] = order1 * w.coord_beta(j);
  return g;
}

std::vector<double> interlaced_product_weights(const SpodWeights& w,
                                               std::size_t d, int alpha) {
  w.validate();
  if (alpha < 1) throw std::invalid_argument("interlaced weights: alpha >= 1");
  if (d > w.beta.size())
    throw std::invalid_argument("interlaced weights: beta too short");
  std::vector<double> g(d * alpha);
  for (std::size_t j = 0; j < d; ++j)
    for (int tau = 1; tau <= alpha; ++tau)
      g[j * alpha + (tau - 1)] = w.coord_beta(j) * std::ldexp(1.0, -(tau - 1));
  return g;
}

LatticeRule cbc_construct_product(int m, std::vector<double> coord_weights,
                                  F2Poly p, const CbcOptions& opts) {
  if (p.degree() != m)
    throw std::invalid_argument("cbc_construct: deg(p) != m");
  if (coord_weights.empty())
    throw std::invalid_argument("cbc_construct: no coordinates requested");
  const std::uint64_t n = std::uint64_t{1} << m;
  const std::uint64_t n_cand = n - 1;  // nonzero polynomials of degree < m
  if (n_cand == 0)
    throw std::invalid_argument("cbc_construct: empty candidate set");

  LatticeRule rule;
  rule.m = m;
  rule.modulus = p;

  // prod[i] = prod over fixed coordinates of (1 + gamma_j w(y_ij)).
  std::vector<double> prod(n, 1.0);
  std::vector<double> value(n_cand);

  // kernel value by numerator bit width, so the hot loop is table lookups
  std::vector<double> wtab(std::size_t(m) + 1);
  for (int b = 0; b <= m; ++b)
    wtab[b] = walsh_kernel(b == 0 ? 0 : std::uint64_t{1} << (b - 1), m);

  for (std::size_t j = 0; j < coord_weights.size(); ++j) {
    const double gamma = coord_weights[j];
    // Candidate values replicate ProductWalshCriterion::evaluate bit for
    // bit (same association, same tree summation), so greedy choices match
    // an exhaustive search with that criterion exactly.
    parallel_for_chunked(
        n_cand, opts.n_threads, [&](std::size_t lo, std::size_t hi) {
          std::vector<double> terms(n);
          for (std::size_t c = lo; c < hi; ++c) {
            const auto col = lattice_column(F2Poly{c + 1}, p, m);
            for (std::uint64_t i = 0; i < n; ++i)
              terms[i] =
                  prod[i] * (1.0 + gamma * wtab[std::bit_width(col[i])]) - 1.0;
            value[c] = tree_sum(terms) / double(n);
          }
        });
    // deterministic argmin; ties break to the lowest candidate
    std::size_t best = 0;
    for (std::size_t c = 1; c < n_cand; ++c)
      if (value[c] < value[best]) best = c;
    const F2Poly q{best + 1};
    rule.gen.push_back(q);
    const auto col = lattice_column(q, p, m);
    for (std::uint64_t i = 0; i < n; ++i)
      prod[i] *= 1.0 + gamma * wtab[std::bit_width(col[i])];
  }
  return rule;
}

LatticeRule cbc_construct(int m, std::size_t dim, const SpodWeights& w,
                          F2Poly p, const CbcOptions& opts) {
  return cbc_construct_product(m, product_weights_from_spod(w, dim), p, opts);
}

ExtrapolatedRule make_epl(int m, std::size_t dim, int alpha,
                          const SpodWeights& w, const CbcOptions& opts,
                          bool alternate_moduli) {
  ExtrapolatedRule rule;
  rule.alpha = alpha;
  rule.coeffs = epl_coeffs(alpha);
  const auto gw = product_weights_from_spod(w, dim);
  for (int t = 0; t < alpha; ++t) {
    const int mt = m - t;
    const F2Poly p =
        alternate_moduli ? alternate_modulus(mt) : default_modulus(mt);
    rule.levels.push_back(cbc_construct_product(mt, gw, p, opts));
  }
  rule.validate();
  return rule;
}

InterlacedRule make_ipl(int m, std::size_t dim, int alpha,
                        const SpodWeights& w, const CbcOptions& opts,
                        bool alternate_moduli) {
  InterlacedRule rule;
  rule.alpha = alpha;
  const F2Poly p = alternate_moduli ? alternate_modulus(m) : default_modulus(m);
  rule.base =
      cbc_construct_product(m, interlaced_product_weights(w, dim, alpha), p,
                            opts);
  rule.validate();
  return rule;
}

}  // namespace hoqmc
