#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "hft/types.hpp"

namespace hft {

enum class MaskShape { Square, Circle };

/// Partition of the padded grid into the object zone G1 (true) and the zero
/// zone G2 (false).
///
/// Square masks occupy the top-left size x size block. Circle masks hold the
/// pixels within Euclidean distance `size` of the center pixel (size, size),
/// so the disc touches the index origin the way the square block does.
class SupportMask {
 public:
  SupportMask(MaskShape shape, Index size, BoolGrid inside);

  MaskShape shape() const { return shape_; }
  Index size() const { return size_; }
  Index rows() const { return inside_.rows(); }
  Index cols() const { return inside_.cols(); }
  const BoolGrid& inside() const { return inside_; }
  bool in_object_zone(Index i, Index j) const { return inside_(i, j); }
  Index object_zone_count() const { return object_count_; }
  Index zero_zone_count() const { return inside_.size() - object_count_; }

  /// Sum of the bounding-box extremes of G1 per axis; reflecting an index i
  /// to (reflect_row - i) maps the bounding box onto itself.
  Index reflect_row() const { return reflect_row_; }
  Index reflect_col() const { return reflect_col_; }

 private:
  MaskShape shape_;
  Index size_;
  BoolGrid inside_;
  Index object_count_ = 0;
  Index reflect_row_ = 0;
  Index reflect_col_ = 0;
};

SupportMask make_mask(const SamplingConfig& cfg, MaskShape shape, Index size);
SupportMask make_mask(Index rows, Index cols, MaskShape shape, Index size);

/// S = sum over G2 of |z|^2.
double compute_S(const ComplexField& z, const SupportMask& mask);

struct InitAllOnes {};
struct InitRandom {
  uint64_t seed = 0;
};
struct InitProvided {
  ComplexField z0;
};
using HioInit = std::variant<InitAllOnes, InitRandom, InitProvided>;

struct HioParams {
  /// Scalar feedback in (0, 1] or a per-pixel grid with entries in [0, 1]
  /// (only its G2 entries are used).
  std::variant<double, RealField> beta = 0.9;
  int max_iter = 1000;
  /// Absolute stopping threshold on S. Unset means 1e-8 * sum(a^2).
  std::optional<double> tol;
  HioInit init = InitAllOnes{};
};

struct ReconResult {
  ComplexField z;
  std::vector<double> s_trace;
  int iterations = 0;
  bool converged = false;
};

/// Hybrid input-output iteration on the padded grid:
///   (1) pfz = F(z)/|F(z)|          (phase 0 where |F(z)| < 1e-300)
///   (2) tz  = F^-1(pfz * a)
///   (3) gz  = tz on G2, 0 on G1
///   (4) z   = tz on G1, z - beta * gz on G2
/// S for an iteration is the G2 energy of tz (= |gz|^2), i.e. how far the
/// magnitude-consistent estimate is from vanishing on the zero zone. Stops
/// after max_iter iterations or once S <= tol.
ReconResult hio_run(const Measurement& a, const SupportMask& mask, const HioParams& p);

/// Initialization used by restart `index` of a multi-start run: restart 0
/// uses p.init unchanged; later restarts use InitRandom with a seed derived
/// from the random seed in p.init (or 0 when p.init is not random).
HioInit restart_init(const HioParams& p, int index);

/// Runs hio_run `restarts` times (see restart_init) and keeps the run with
/// the smallest final S. Ties go to the earliest restart.
ReconResult multistart(const Measurement& a, const SupportMask& mask, const HioParams& p,
                       int restarts);

/// Random initial guess: modulus uniform on [0, 1), phase uniform on [0, 2 pi).
ComplexField random_field(Index rows, Index cols, uint64_t seed);

}  // namespace hft
