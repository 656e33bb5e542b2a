#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace hoqmc {

// SPOD ("smoothness-driven, product and order dependent") weight system:
//   gamma_u = sum over nu in {1..alpha}^|u| of |nu|! prod_{j in u}
//             2^[nu_j == alpha] * beta_j^{nu_j},
// with |nu| the sum of the entries. An optional cap index J replaces the
// first J decay values by an inflated head value.
struct SpodWeights {
  int alpha = 2;
  std::vector<double> beta;
  std::size_t cap_index = 0;   // J; entries j < J use head_value instead
  double head_value = 0.0;

  double coord_beta(std::size_t j) const {
    return j < cap_index ? head_value : beta[j];
  }
  void validate() const;
};

SpodWeights make_spod(int alpha, std::vector<double> beta);

// gamma_u for a subset u given as 0-based coordinate indices. The empty
// subset yields 1. Throws when alpha^|u| is intractably large.
double spod_weight(std::span<const std::size_t> u, const SpodWeights& w);

// Per-coordinate decay beta_j = scale * (j+1)^-decay, j = 0..d-1.
std::vector<double> power_decay_beta(std::size_t d, double decay, double scale);

}  // namespace hoqmc
