#pragma once

#include <cstdint>
#include <random>

namespace dsa {

/// Deterministic RNG used throughout the simulator. Wraps mt19937_64 but
/// does all value conversions itself so that streams are bit-identical
/// across standard libraries (std distributions are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // uniform in [0,1)
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // unbiased integer in [0,n), n > 0
  std::uint64_t uniform_int(std::uint64_t n);

  // standard normal via Box-Muller
  double normal();

  double normal(double mean, double sigma) { return mean + sigma * normal(); }

 private:
  std::mt19937_64 eng_;
};

/// Stable substream derivation (splitmix64 finalizer over seed ^ salted key).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) noexcept;

}  // namespace dsa
