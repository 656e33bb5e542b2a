#include "hoqmc/weights.hpp"

#include <cmath>
#include <stdexcept>

namespace hoqmc {

void SpodWeights::validate() const {
  if (alpha < 1) throw std::invalid_argument("SpodWeights: alpha >= 1");
  if (beta.empty()) throw std::invalid_argument("SpodWeights: empty beta");
  for (std::size_t j = 0; j < beta.size(); ++j)
    if (!(coord_beta(j) > 0.0))
      throw std::invalid_argument("SpodWeights: beta_j must be positive");
  if (cap_index > beta.size())
    throw std::invalid_argument("SpodWeights: cap index out of range");
}

SpodWeights make_spod(int alpha, std::vector<double> beta) {
  SpodWeights w;
  w.alpha = alpha;
  w.beta = std::move(beta);
  w.validate();
  return w;
}

double spod_weight(std::span<const std::size_t> u, const SpodWeights& w) {
  w.validate();
  if (u.empty()) return 1.0;  // empty sum over the single empty tuple
  const std::size_t s = u.size();
  // alpha^s tuples; refuse combinatorial blow-ups (2^20 tuples at alpha=2).
  if (w.alpha > 1 && s * std::log2(double(w.alpha)) > 20.0)
    throw std::invalid_argument("spod_weight: subset too large");
  for (std::size_t j : u)
    if (j >= w.beta.size())
      throw std::invalid_argument("spod_weight: coordinate out of range");

  std::vector<double> factorial(std::size_t(w.alpha) * s + 1, 1.0);
  for (std::size_t k = 1; k < factorial.size(); ++k)
    factorial[k] = factorial[k - 1] * double(k);

  std::vector<int> nu(s, 1);
  double total = 0.0;
  for (;;) {
    int order = 0;
    double prod = 1.0;
    for (std::size_t i = 0; i < s; ++i) {
      order += nu[i];
      const double bj = w.coord_beta(u[i]);
      prod *= (nu[i] == w.alpha ? 2.0 : 1.0) * std::pow(bj, nu[i]);
    }
    total += factorial[order] * prod;
    // odometer over {1..alpha}^s
    std::size_t i = 0;
    while (i < s && nu[i] == w.alpha) nu[i++] = 1;
    if (i == s) break;
    ++nu[i];
  }
  return total;
}

std::vector<double> power_decay_beta(std::size_t d, double decay,
                                     double scale) {
  std::vector<double> beta(d);
  for (std::size_t j = 0; j < d; ++j)
    beta[j] = scale * std::pow(double(j + 1), -decay);
  return beta;
}

}  // namespace hoqmc
