#include "hft/field_core.hpp"

#include <cmath>
#include <numbers>

#include "hft/fft.hpp"

namespace hft {

namespace {

void require_object_dims(const ComplexField& object, const SamplingConfig& cfg, const char* op) {
  if (object.rows() != cfg.n1() || object.cols() != cfg.n2()) {
    throw InvalidInput(std::string(op) + ": object is " + dims_string(object.rows(), object.cols()) +
                       ", config expects " + dims_string(cfg.n1(), cfg.n2()));
  }
}

void require_padded_dims(const ComplexField& field, const SamplingConfig& cfg, const char* op) {
  if (field.rows() != cfg.padded_rows() || field.cols() != cfg.padded_cols()) {
    throw InvalidInput(std::string(op) + ": field is " + dims_string(field.rows(), field.cols()) +
                       ", config expects " + dims_string(cfg.padded_rows(), cfg.padded_cols()));
  }
}

// e^{2 pi i u (w + 1/2)} sinc(u): the closed form of the window integral,
// rewritten so that u -> 0 needs no special case beyond sinc itself.
std::complex<double> axis_overlap(double u, double w) {
  const double phase = 2.0 * std::numbers::pi * u * (w + 0.5);
  return std::polar(sinc(u), phase);
}

}  // namespace

ComplexField embed(const ComplexField& object, const SamplingConfig& cfg) {
  require_object_dims(object, cfg, "embed");
  ComplexField out = ComplexField::Zero(cfg.padded_rows(), cfg.padded_cols());
  out.topLeftCorner(cfg.n1(), cfg.n2()) = object;
  return out;
}

ComplexField hft_forward(const ComplexField& object, const SamplingConfig& cfg) {
  require_object_dims(object, cfg, "hft_forward");
  Fft2d fft(cfg.padded_rows(), cfg.padded_cols());
  return fft.forward(embed(object, cfg));
}

ComplexField hft_inverse(const ComplexField& field, const SamplingConfig& cfg) {
  require_padded_dims(field, cfg, "hft_inverse");
  Fft2d fft(cfg.padded_rows(), cfg.padded_cols());
  ComplexField out = fft.backward(field);
  out /= static_cast<double>(field.size());
  return out;
}

ComplexField extract(const ComplexField& field, const SamplingConfig& cfg) {
  require_padded_dims(field, cfg, "extract");
  return field.topLeftCorner(cfg.n1(), cfg.n2());
}

double sinc(double u) {
  const double x = std::numbers::pi * u;
  if (std::abs(u) < 1e-8) {
    return 1.0 - x * x / 6.0;
  }
  // sin(pi u) is exactly zero at integers only if computed from the
  // fractional part; std::sin(pi * n) leaves ~1e-16 residue.
  const double rounded = std::nearbyint(u);
  if (u == rounded) return 0.0;
  return std::sin(x) / x;
}

double inner_product(const NormalizedFrequencyOffset& offset) {
  return sinc(offset.u1) * sinc(offset.u2);
}

std::complex<double> inner_product_general(const NormalizedFrequencyOffset& offset,
                                           double w1_over_l, double w2_over_l) {
  return axis_overlap(offset.u1, w1_over_l) * axis_overlap(offset.u2, w2_over_l);
}

double coeff_ratio(double k, Index r, Index j1, Index j2) {
  if (r < 1) throw InvalidInput("coeff_ratio: r must be positive");
  const double k_next = k + 1.0 / static_cast<double>(r);
  const auto delta = [&](Index j) {
    const double jd = static_cast<double>(j);
    return sinc(k_next - jd) - sinc(k - jd);
  };
  const double den = delta(j2);
  if (den == 0.0 || !std::isfinite(den)) {
    throw DegenerateOffset("coeff_ratio: overlap change for j2 vanishes");
  }
  return delta(j1) / den;
}

}  // namespace hft
