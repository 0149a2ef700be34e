#include "hft/analysis.hpp"

#include <algorithm>
#include <array>
#include <cfloat>
#include <cmath>
#include <limits>
#include <numbers>

#include "hft/fft.hpp"
#include "hft/field_core.hpp"

namespace hft {

namespace {

Index wrap(Index i, Index m) {
  const Index r = i % m;
  return r < 0 ? r + m : r;
}

ComplexField conj_reflect(const ComplexField& z, Index c1, Index c2) {
  const Index rows = z.rows();
  const Index cols = z.cols();
  ComplexField out(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const Index si = wrap(c1 - i, rows);
    for (Index j = 0; j < cols; ++j) {
      out(i, j) = std::conj(z(si, wrap(c2 - j, cols)));
    }
  }
  return out;
}

void require_mask_dims(const ComplexField& z, const SupportMask& mask, const char* op) {
  if (z.rows() != mask.rows() || z.cols() != mask.cols()) {
    throw InvalidInput(std::string(op) + ": field " + dims_string(z.rows(), z.cols()) +
                       " vs mask " + dims_string(mask.rows(), mask.cols()));
  }
}

struct Score {
  double phase;
  double error;
};

// Optimal global phase and residual over G1. <truth, c> = sum conj(t) c.
Score score_candidate(const ComplexField& c, const ComplexField& truth, const BoolGrid& g1,
                      double truth_norm) {
  std::complex<double> ip = 0.0;
  for (Index i = 0; i < c.size(); ++i) {
    if (g1.data()[i]) ip += std::conj(truth.data()[i]) * c.data()[i];
  }
  const double phase = std::abs(ip) > 0.0 ? std::arg(ip) : 0.0;
  const std::complex<double> unrotate = std::polar(1.0, -phase);
  double err2 = 0.0;
  for (Index i = 0; i < c.size(); ++i) {
    if (g1.data()[i]) err2 += std::norm(c.data()[i] * unrotate - truth.data()[i]);
  }
  return {phase, std::sqrt(err2) / truth_norm};
}

ComplexField unit_phase(const ComplexField& f) {
  ComplexField out(f.rows(), f.cols());
  for (Index i = 0; i < f.size(); ++i) {
    const double m = std::abs(f.data()[i]);
    out.data()[i] = m < 1e-300 ? std::complex<double>(1.0, 0.0) : f.data()[i] / m;
  }
  return out;
}

}  // namespace

ComplexField twin(const ComplexField& z) { return conj_reflect(z, 0, 0); }

ComplexField twin_in_support(const ComplexField& z, const SupportMask& mask) {
  require_mask_dims(z, mask, "twin_in_support");
  return conj_reflect(z, mask.reflect_row(), mask.reflect_col());
}

BoolGrid reflect_in_support(const BoolGrid& m, const SupportMask& mask) {
  if (m.rows() != mask.rows() || m.cols() != mask.cols()) {
    throw InvalidInput("reflect_in_support: dimension mismatch");
  }
  BoolGrid out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      out(i, j) = m(wrap(mask.reflect_row() - i, m.rows()), wrap(mask.reflect_col() - j, m.cols()));
    }
  }
  return out;
}

AlignmentReport align_and_error(const ComplexField& recon, const ComplexField& truth,
                                const SupportMask& mask) {
  require_mask_dims(recon, mask, "align_and_error");
  require_mask_dims(truth, mask, "align_and_error");
  const BoolGrid& g1 = mask.inside();
  double t2 = 0.0;
  for (Index i = 0; i < truth.size(); ++i) {
    if (g1.data()[i]) t2 += std::norm(truth.data()[i]);
  }
  if (!(t2 > 0.0)) throw InvalidInput("align_and_error: truth vanishes on the object zone");
  const double truth_norm = std::sqrt(t2);

  const ComplexField twinned = twin(recon);
  const std::array<std::pair<ComplexField, bool>, 4> candidates{{
      {recon, false},
      {twinned, true},
      {twin_in_support(recon, mask), true},
      {twin_in_support(twinned, mask), false},
  }};

  AlignmentReport best;
  best.rel_error = std::numeric_limits<double>::infinity();
  for (const auto& [c, flipped] : candidates) {
    const Score s = score_candidate(c, truth, g1, truth_norm);
    if (s.error < best.rel_error) {
      best = {flipped, s.phase, s.error};
    }
  }
  // std::arg returns [-pi, pi]; fold -pi onto +pi.
  if (best.global_phase <= -std::numbers::pi) best.global_phase = std::numbers::pi;
  return best;
}

ComplexField phase_mix(const Measurement& magnitude1, const ComplexField& o2,
                       const SamplingConfig& cfg) {
  if (magnitude1.rows() != cfg.padded_rows() || magnitude1.cols() != cfg.padded_cols()) {
    throw InvalidInput("phase_mix: magnitude is " + dims_string(magnitude1.rows(), magnitude1.cols()) +
                       ", expected padded " + dims_string(cfg.padded_rows(), cfg.padded_cols()));
  }
  ComplexField spectrum = unit_phase(hft_forward(o2, cfg)) * magnitude1.values().cast<std::complex<double>>();
  return hft_inverse(spectrum, cfg);
}

ComplexField phase_mix(const ComplexField& o1, const ComplexField& o2, const SamplingConfig& cfg) {
  if (o1.rows() != o2.rows() || o1.cols() != o2.cols()) {
    throw InvalidInput("phase_mix: objects differ in size");
  }
  return phase_mix(Measurement(hft_forward(o1, cfg).abs()), o2, cfg);
}

double emergence_correlation(const ComplexField& mix, const BoolGrid& shape,
                             const SamplingConfig& cfg) {
  if (mix.rows() != cfg.padded_rows() || mix.cols() != cfg.padded_cols()) {
    throw InvalidInput("emergence_correlation: mix must be on the padded grid");
  }
  if (shape.rows() != cfg.n1() || shape.cols() != cfg.n2()) {
    throw InvalidInput("emergence_correlation: shape must have the object dimensions");
  }
  const Index n1 = cfg.n1();
  const Index n2 = cfg.n2();
  RealField v(n1, n2);
  RealField u(n1, n2);
  for (Index i = 0; i < n1; ++i) {
    for (Index j = 0; j < n2; ++j) {
      v(i, j) = std::abs(mix(i, j).imag());
      u(i, j) = (shape(i, j) || shape(n1 - 1 - i, n2 - 1 - j)) ? 1.0 : 0.0;
    }
  }
  const RealField dv = v - v.mean();
  const RealField du = u - u.mean();
  const double den = std::sqrt(dv.square().sum() * du.square().sum());
  if (!(den > 0.0)) return 0.0;
  return (dv * du).sum() / den;
}

SweepReport support_sweep(const Measurement& a, const SamplingConfig& cfg,
                          const std::vector<Index>& sizes, const HioParams& p, int runs_per_size) {
  if (runs_per_size < 1) throw InvalidInput("support_sweep: runs_per_size must be >= 1");
  if (a.rows() != cfg.padded_rows() || a.cols() != cfg.padded_cols()) {
    throw InvalidInput("support_sweep: measurement does not match the sampling config");
  }
  // Validate every size before spending time on any run.
  std::vector<SupportMask> masks;
  masks.reserve(sizes.size());
  for (Index s : sizes) masks.push_back(make_mask(cfg, MaskShape::Square, s));

  SweepReport report;
  report.sizes = sizes;
  report.runs_per_size = runs_per_size;
  for (const auto& mask : masks) {
    double acc = 0.0;
    for (int k = 0; k < runs_per_size; ++k) {
      HioParams run = p;
      run.init = restart_init(p, k);
      const ReconResult r = hio_run(a, mask, run);
      acc += std::log10(std::max(r.s_trace.back(), DBL_MIN));
    }
    report.mean_log_S.push_back(acc / runs_per_size);
  }
  return report;
}

}  // namespace hft
