#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string_view>

namespace hoqmc {

// Counter-based splittable PRNG built on the splitmix64 finalizer. Every
// consumer derives its own stream by hashing (seed, tag...) so runs are
// replayable per component regardless of evaluation order.
class SplitRng {
 public:
  explicit SplitRng(std::uint64_t seed) : state_(mix(seed ^ kSalt)) {}

  SplitRng split(std::uint64_t tag) const {
    return SplitRng(FromState{}, mix(state_ ^ mix(tag ^ kTagSalt)));
  }
  SplitRng split(std::string_view name) const { return split(fnv1a(name)); }

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    return mix(state_);
  }

  // Uniform in [0,1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Standard normal via Box-Muller; uses two uniforms per draw so the
  // stream position is input-independent.
  double normal() {
    double u1 = uniform01();
    while (u1 == 0.0) u1 = uniform01();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

  static std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (const char c : s) {
      h ^= static_cast<unsigned char>(c);
      h *= 0x100000001B3ull;
    }
    return h;
  }

 private:
  struct FromState {};
  SplitRng(FromState, std::uint64_t st) : state_(st) {}

  static constexpr std::uint64_t kSalt = 0x6A09E667F3BCC908ull;
  static constexpr std::uint64_t kTagSalt = 0xBB67AE8584CAA73Bull;

  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace hoqmc
