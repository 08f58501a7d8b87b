#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

#include "frameforge/linalg.hpp"

namespace frameforge {

// Deterministic, stdlib-independent generator so sampled matrices are
// byte-identical across platforms and standard libraries.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in (0, 1]; never returns 0, so logs are safe.
  double next_uniform() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  }

  // Standard real normal via Box-Muller.
  double next_normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u = next_uniform();
    const double v = next_uniform();
    const double r = std::sqrt(-2.0 * std::log(u));
    const double angle = 6.283185307179586476925286766559 * v;
    spare_ = r * std::sin(angle);
    have_spare_ = true;
    return r * std::cos(angle);
  }

  // Standard complex normal: real and imaginary parts N(0, 1/2).
  std::complex<double> next_complex_normal() {
    const double inv_sqrt2 = 0.70710678118654752440084436210485;
    return {next_normal() * inv_sqrt2, next_normal() * inv_sqrt2};
  }

  // Stream derivation so per-trial generators are scheduler-independent.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
    SplitMix64 mixer(seed ^ (0xD1B54A32D192ED03ull * (stream + 1)));
    return mixer.next_u64();
  }

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

inline ComplexMatrix random_complex_gaussian(Eigen::Index rows, Eigen::Index cols,
                                             SplitMix64& rng) {
  ComplexMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      m(i, j) = rng.next_complex_normal();
    }
  }
  return m;
}

}  // namespace frameforge
