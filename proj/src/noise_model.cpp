#include "hft/noise_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hft {

NormalStream::NormalStream(uint64_t seed) : engine_(seed) {}

double NormalStream::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double NormalStream::next() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // 1 - uniform() lies in (0, 1], so the log is finite.
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

uint64_t mix_seed(uint64_t base, uint64_t stream) {
  uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Measurement add_noise(const Measurement& a, const NoiseParams& p) {
  if (!(p.rnoi >= 0.0) || !(p.anoi >= 0.0)) {
    throw InvalidInput("add_noise: rnoi and anoi must be nonnegative");
  }
  if (p.rnoi == 0.0 && p.anoi == 0.0) return a;

  NormalStream gauss(p.seed);
  RealField out(a.rows(), a.cols());
  const RealField& in = a.values();
  for (Index i = 0; i < in.size(); ++i) {
    const double g1 = gauss.next();
    const double g2 = gauss.next();
    const double v = in.data()[i];
    out.data()[i] = std::max(0.0, v + v * p.rnoi * g1 + p.anoi * g2);
  }
  return Measurement(std::move(out));
}

}  // namespace hft
