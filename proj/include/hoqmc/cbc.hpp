#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hoqmc/lattice.hpp"
#include "hoqmc/weights.hpp"

namespace hoqmc {

// Walsh kernel at decay exponent 2 for base-2 digital nets:
//   w(0) = 1/2,  w(y) = 1/2 - (3/2) * 2^-t  for y in [2^-t, 2^-t+1).
// Mean-zero over [0,1); the figure of merit below is the worst-case error
// in the corresponding weighted Walsh space. Note that published CBC
// generating vectors use related but not identical criteria, so vectors
// may differ; greedy optimality is with respect to this criterion.
double walsh_kernel(std::uint64_t numerator, int digits);

// Figure-of-merit interface over the first pts.dim coordinates.
class CbcCriterion {
 public:
  virtual ~CbcCriterion() = default;
  virtual std::string name() const = 0;
  virtual double evaluate(const PointSet& pts) const = 0;
};

// (a) Product-weight criterion, the order-1 diagonal of the SPOD weights:
//   e^2 = (1/N) sum_n [ prod_j (1 + gamma_j w(y_nj)) - 1 ].
// Supports O(N) incremental updates inside the CBC sweep.
class ProductWalshCriterion final : public CbcCriterion {
 public:
  explicit ProductWalshCriterion(std::vector<double> coord_weights);

  std::string name() const override { return "product-walsh"; }
  double evaluate(const PointSet& pts) const override;
  const std::vector<double>& weights() const { return weights_; }

 private:
  std::vector<double> weights_;
};

// (b) Direct SPOD criterion, evaluated from scratch over all subsets up to
// a cutoff order: e^2 = sum_{0<|u|<=cap} gamma_u (1/N) sum_n prod_{j in u}
// w(y_nj). O(N * d^cap) per evaluation; intended for small instances and
// as a second route in tests.
class SpodSubsetCriterion final : public CbcCriterion {
 public:
  SpodSubsetCriterion(SpodWeights weights, std::size_t order_cap = 2);

  std::string name() const override { return "spod-subset"; }
  double evaluate(const PointSet& pts) const override;

 private:
  SpodWeights weights_;
  std::size_t order_cap_;
};

// Product weights gamma_j = 2^[alpha==1] beta_j (order-1 SPOD diagonal).
std::vector<double> product_weights_from_spod(const SpodWeights& w,
                                              std::size_t dim);

// Weights for the alpha*d-dimensional base lattice of an interlaced rule:
// base coordinate (j-1)*alpha + tau carries beta_j * 2^-(tau-1), matching
// the digit positions the tau-th stream occupies after interlacing.
std::vector<double> interlaced_product_weights(const SpodWeights& w,
                                               std::size_t d, int alpha);

struct CbcOptions {
  std::size_t n_threads = 0;  // 0 = hardware default
};

// Greedy component-by-component search under the product-Walsh criterion.
// Candidates are all nonzero polynomials of degree < m; ties break toward
// the lowest candidate index. Deterministic for fixed inputs.
LatticeRule cbc_construct_product(int m, std::vector<double> coord_weights,
                                  F2Poly p, const CbcOptions& opts = {});

// Convenience entry point with SPOD weights (order-1 diagonal).
LatticeRule cbc_construct(int m, std::size_t dim, const SpodWeights& w,
                          F2Poly p, const CbcOptions& opts = {});

// Design builders used across the experiments. Each EPL level is built by
// its own CBC run with the modulus table entry for its degree.
ExtrapolatedRule make_epl(int m, std::size_t dim, int alpha,
                          const SpodWeights& w, const CbcOptions& opts = {},
                          bool alternate_moduli = false);
InterlacedRule make_ipl(int m, std::size_t dim, int alpha,
                        const SpodWeights& w, const CbcOptions& opts = {},
                        bool alternate_moduli = false);

}  // namespace hoqmc
