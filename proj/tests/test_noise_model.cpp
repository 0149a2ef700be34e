#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <random>

#include "hft/noise_model.hpp"

using namespace hft;

namespace {

Measurement random_measurement(Index rows, Index cols, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 50.0);
  RealField a(rows, cols);
  for (Index i = 0; i < a.size(); ++i) a.data()[i] = u(rng);
  return Measurement(a);
}

bool bit_identical(const RealField& x, const RealField& y) {
  return x.rows() == y.rows() && x.cols() == y.cols() &&
         std::memcmp(x.data(), y.data(), static_cast<size_t>(x.size()) * sizeof(double)) == 0;
}

}  // namespace

TEST_CASE("zero noise is the identity") {
  const Measurement a = random_measurement(7, 9, 1);
  const Measurement out = add_noise(a, {0.0, 0.0, 1234});
  CHECK(bit_identical(out.values(), a.values()));
}

TEST_CASE("relative noise leaves a zero signal at zero") {
  const Measurement a(RealField::Zero(16, 16));
  const Measurement out = add_noise(a, {0.5, 0.0, 7});
  CHECK((out.values() == 0.0).all());
}

TEST_CASE("absolute noise has the requested mean and spread") {
  const Measurement a(RealField::Constant(256, 256, 100.0));
  const RealField out = add_noise(a, {0.0, 10.0, 2024}).values();
  const double mean = out.mean();
  const double sd = std::sqrt((out - mean).square().sum() / static_cast<double>(out.size() - 1));
  CHECK(std::abs(mean - 100.0) <= 0.5);
  CHECK(std::abs(sd - 10.0) <= 0.5);
}

TEST_CASE("same seed, same output; different seed, different output") {
  const Measurement a = random_measurement(32, 32, 3);
  const NoiseParams p{0.3, 2.0, 77};
  CHECK(bit_identical(add_noise(a, p).values(), add_noise(a, p).values()));
  NoiseParams q = p;
  q.seed = 78;
  CHECK_FALSE(bit_identical(add_noise(a, p).values(), add_noise(a, q).values()));
}

TEST_CASE("output is never negative") {
  const Measurement a = random_measurement(64, 64, 4);
  for (uint64_t seed = 0; seed < 5; ++seed) {
    CHECK((add_noise(a, {2.0, 40.0, seed}).values() >= 0.0).all());
  }
}

TEST_CASE("noise scales with the signal when anoi scales with it") {
  const Measurement a = random_measurement(40, 24, 5);
  for (double c : {0.01, 3.0, 250.0}) {
    const NoiseParams p{0.4, 1.5, 99};
    const NoiseParams pc{0.4, 1.5 * c, 99};
    const RealField scaled_first = add_noise(Measurement(a.values() * c), pc).values();
    const RealField scaled_after = add_noise(a, p).values() * c;
    const double ref = scaled_after.abs().maxCoeff();
    CHECK((scaled_first - scaled_after).abs().maxCoeff() <= 1e-12 * ref);
  }
}

TEST_CASE("parameters are validated") {
  const Measurement a = random_measurement(2, 2, 6);
  CHECK_THROWS_AS(add_noise(a, {-0.1, 0.0, 0}), InvalidInput);
  CHECK_THROWS_AS(add_noise(a, {0.0, -1.0, 0}), InvalidInput);
}

TEST_CASE("normal stream has unit variance") {
  NormalStream g(42);
  double s = 0.0, s2 = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double v = g.next();
    s += v;
    s2 += v * v;
  }
  CHECK(std::abs(s / n) < 0.01);
  CHECK(std::abs(s2 / n - 1.0) < 0.01);
}

TEST_CASE("derived seeds are distinct") {
  CHECK(mix_seed(0, 1) != mix_seed(0, 2));
  CHECK(mix_seed(5, 1) != mix_seed(6, 1));
  CHECK(mix_seed(5, 1) == mix_seed(5, 1));
}
