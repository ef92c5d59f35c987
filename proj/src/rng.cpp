#include "dsa/rng.hpp"

#include <cmath>
#include <numbers>

namespace dsa {

std::uint64_t Rng::uniform_int(std::uint64_t n) {
  // rejection sampling over the top multiple of n
  const std::uint64_t bound = n * (UINT64_MAX / n);
  std::uint64_t r;
  do {
    r = eng_();
  } while (r >= bound);
  return r % n;
}

double Rng::normal() {
  const double u1 = 1.0 - uniform();  // (0,1], keeps log() finite
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) noexcept {
  std::uint64_t z = seed ^ (salt * 0x9E3779B97F4A7C15ULL);
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace dsa
