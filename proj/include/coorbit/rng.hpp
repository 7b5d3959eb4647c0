#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace coorbit::rng {

/// Identifier recorded in reports so a run names the draw algorithm it used.
inline constexpr const char* kAlgorithmId = "splitmix64/box-muller-v1";

/// splitmix64 finalizer (Steele/Lea/Flood). One 64-bit state step.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Counter-based key: entry (a, b, c) under `seed` always hashes to the same
/// word, independent of how many other entries were drawn. Keeps truncated
/// families nested and generation order-free.
inline std::uint64_t key(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                         std::uint64_t c = 0) {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ a);
  h = splitmix64(h ^ b);
  h = splitmix64(h ^ c);
  return h;
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(std::uint64_t word) {
  return static_cast<double>(word >> 11) * 0x1.0p-53;
}

/// Unimodular complex number e^{2*pi*i*u}, u uniform.
inline std::complex<double> unit_phase(std::uint64_t word) {
  const double theta = 2.0 * std::numbers::pi * uniform01(word);
  return {std::cos(theta), std::sin(theta)};
}

/// Standard complex gaussian via Box-Muller (real and imaginary parts N(0, 1/2)
/// each, so E|z|^2 = 1).
inline std::complex<double> gaussian(std::uint64_t word) {
  const double u1 = uniform01(splitmix64(word ^ 0x5bf0366bULL));
  const double u2 = uniform01(splitmix64(word ^ 0x9154ce11ULL));
  const double r = std::sqrt(-std::log(1.0 - u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  return {r * std::cos(theta), r * std::sin(theta)};
}

/// Stateful convenience stream over the same primitive.
class Stream {
 public:
  explicit Stream(std::uint64_t seed, std::uint64_t stream = 0)
      : seed_(key(seed, 0x73747265616dULL, stream)) {}

  std::uint64_t next_word() { return key(seed_, counter_++); }
  double uniform() { return uniform01(next_word()); }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  std::complex<double> phase() { return unit_phase(next_word()); }
  std::complex<double> gaussian() { return rng::gaussian(next_word()); }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

}  // namespace coorbit::rng
