#pragma once

#include <vector>

#include "hft/hio_solver.hpp"
#include "hft/types.hpp"

namespace hft {

/// Conjugate twin about the index origin:
///   twin(z)(n1, n2) = conj(z(-n1 mod M1, -n2 mod M2)).
/// |DFT(twin(z))| == |DFT(z)| and twin(twin(z)) == z.
ComplexField twin(const ComplexField& z);

/// Conjugate reflection through the center of the mask's G1 bounding box:
///   (n1, n2) -> conj(z(c1 - n1 mod M1, c2 - n2 mod M2)), c = reflect_row/col.
/// This is twin() followed by the circular shift that puts the twin of a
/// G1-supported field back onto G1; it shares twin()'s Fourier magnitude and
/// is also an involution.
ComplexField twin_in_support(const ComplexField& z, const SupportMask& mask);

/// Same reflection applied to a boolean grid (no conjugation).
BoolGrid reflect_in_support(const BoolGrid& m, const SupportMask& mask);

struct AlignmentReport {
  bool flipped = false;
  double global_phase = 0.0;  ///< in (-pi, pi]
  double rel_error = 0.0;
};

/// Scores a reconstruction against the truth over G1, modulo the ambiguities
/// the measurement cannot resolve. Candidates are recon, twin(recon),
/// twin_in_support(recon) and twin_in_support(twin(recon)); each gets the
/// optimal global phase arg <truth, candidate> and the best
/// ||e^{-i phase} candidate - truth|| / ||truth|| is reported. The candidate
/// set is the same for recon and twin(recon), so the score is invariant
/// under twinning. Throws InvalidInput if truth vanishes on G1.
AlignmentReport align_and_error(const ComplexField& recon, const ComplexField& truth,
                                const SupportMask& mask);

/// O_mix = HFT^-1( |HFT(o1)| * HFT(o2)/|HFT(o2)| ) on the padded grid.
/// Samples where |HFT(o2)| < 1e-300 take phase 0.
ComplexField phase_mix(const ComplexField& o1, const ComplexField& o2, const SamplingConfig& cfg);

/// Same, with an externally supplied (e.g. noisy) magnitude for o1.
ComplexField phase_mix(const Measurement& magnitude1, const ComplexField& o2,
                       const SamplingConfig& cfg);

/// Normalized cross-correlation between |imag(mix)| on the object block and
/// the indicator of shape united with its reflection through the block
/// center. `shape` has the object dimensions. Measures how strongly the
/// object outline (and its twin) shows up in a phase-mixed field.
double emergence_correlation(const ComplexField& mix, const BoolGrid& shape,
                             const SamplingConfig& cfg);

struct SweepReport {
  std::vector<Index> sizes;
  std::vector<double> mean_log_S;
  int runs_per_size = 1;
};

/// For each square G1 side length in `sizes`, runs hio_run runs_per_size
/// times (run k uses restart_init(p, k)) and averages log10 of the final S.
/// S is floored at the smallest normal double before the log.
SweepReport support_sweep(const Measurement& a, const SamplingConfig& cfg,
                          const std::vector<Index>& sizes, const HioParams& p, int runs_per_size);

}  // namespace hft
