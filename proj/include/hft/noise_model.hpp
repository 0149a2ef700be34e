#pragma once

#include <cstdint>
#include <random>

#include "hft/types.hpp"

namespace hft {

struct NoiseParams {
  double rnoi = 0.0;  ///< relative noise scale
  double anoi = 0.0;  ///< absolute noise scale, measurement units
  uint64_t seed = 0;
};

/// a' = max(0, a + a*rnoi*g1 + anoi*g2) with independent standard normals
/// g1, g2 per sample, drawn in row-major order from a generator seeded with
/// p.seed. Zero noise returns the input unchanged.
Measurement add_noise(const Measurement& a, const NoiseParams& p);

/// Standard-normal stream: mt19937_64 feeding a Box-Muller transform.
/// Unlike std::normal_distribution the output is fixed across standard
/// library implementations.
class NormalStream {
 public:
  explicit NormalStream(uint64_t seed);
  double next();
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// SplitMix64 finalizer; used to derive independent child seeds.
uint64_t mix_seed(uint64_t base, uint64_t stream);

}  // namespace hft
