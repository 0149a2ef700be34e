#include "hft/hio_solver.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "hft/fft.hpp"
#include "hft/noise_model.hpp"

namespace hft {

SupportMask::SupportMask(MaskShape shape, Index size, BoolGrid inside)
    : shape_(shape), size_(size), inside_(std::move(inside)) {
  object_count_ = inside_.count();
  if (object_count_ == 0) throw InvalidInput("SupportMask: object zone is empty");
  if (object_count_ == inside_.size()) throw InvalidInput("SupportMask: zero zone is empty");
  Index rmin = inside_.rows(), rmax = -1, cmin = inside_.cols(), cmax = -1;
  for (Index i = 0; i < inside_.rows(); ++i) {
    for (Index j = 0; j < inside_.cols(); ++j) {
      if (!inside_(i, j)) continue;
      rmin = std::min(rmin, i);
      rmax = std::max(rmax, i);
      cmin = std::min(cmin, j);
      cmax = std::max(cmax, j);
    }
  }
  reflect_row_ = rmin + rmax;
  reflect_col_ = cmin + cmax;
}

SupportMask make_mask(Index rows, Index cols, MaskShape shape, Index size) {
  if (size < 0) throw InvalidInput("make_mask: negative size");
  BoolGrid inside = BoolGrid::Constant(rows, cols, false);
  if (shape == MaskShape::Square) {
    if (size < 1 || size > rows || size > cols) {
      throw InvalidInput("make_mask: square of side " + std::to_string(size) + " does not fit " +
                         dims_string(rows, cols));
    }
    inside.topLeftCorner(size, size).setConstant(true);
  } else {
    if (2 * size + 1 > rows || 2 * size + 1 > cols) {
      throw InvalidInput("make_mask: circle of radius " + std::to_string(size) +
                         " does not fit " + dims_string(rows, cols));
    }
    const Index r2 = size * size;
    for (Index i = 0; i <= 2 * size; ++i) {
      for (Index j = 0; j <= 2 * size; ++j) {
        const Index di = i - size;
        const Index dj = j - size;
        inside(i, j) = di * di + dj * dj <= r2;
      }
    }
  }
  return SupportMask(shape, size, std::move(inside));
}

SupportMask make_mask(const SamplingConfig& cfg, MaskShape shape, Index size) {
  return make_mask(cfg.padded_rows(), cfg.padded_cols(), shape, size);
}

double compute_S(const ComplexField& z, const SupportMask& mask) {
  if (z.rows() != mask.rows() || z.cols() != mask.cols()) {
    throw InvalidInput("compute_S: field " + dims_string(z.rows(), z.cols()) + " vs mask " +
                       dims_string(mask.rows(), mask.cols()));
  }
  const bool* in = mask.inside().data();
  const std::complex<double>* v = z.data();
  double s = 0.0;
  for (Index i = 0; i < z.size(); ++i) {
    if (!in[i]) s += std::norm(v[i]);
  }
  return s;
}

ComplexField random_field(Index rows, Index cols, uint64_t seed) {
  NormalStream rng(seed);
  ComplexField z(rows, cols);
  for (Index i = 0; i < z.size(); ++i) {
    const double modulus = rng.uniform();
    const double phase = 2.0 * std::numbers::pi * rng.uniform();
    z.data()[i] = std::polar(modulus, phase);
  }
  return z;
}

namespace {

ComplexField initial_guess(const HioInit& init, Index rows, Index cols) {
  struct Visitor {
    Index rows, cols;
    ComplexField operator()(const InitAllOnes&) const {
      return ComplexField::Constant(rows, cols, {1.0, 0.0});
    }
    ComplexField operator()(const InitRandom& r) const { return random_field(rows, cols, r.seed); }
    ComplexField operator()(const InitProvided& p) const {
      if (p.z0.rows() != rows || p.z0.cols() != cols) {
        throw InvalidInput("hio_run: provided initial guess is " +
                           dims_string(p.z0.rows(), p.z0.cols()) + ", expected " +
                           dims_string(rows, cols));
      }
      return p.z0;
    }
  };
  return std::visit(Visitor{rows, cols}, init);
}

void validate_beta(const HioParams& p, Index rows, Index cols) {
  if (const auto* b = std::get_if<double>(&p.beta)) {
    if (!(*b > 0.0 && *b <= 1.0)) throw InvalidInput("hio_run: beta must lie in (0, 1]");
    return;
  }
  const auto& grid = std::get<RealField>(p.beta);
  if (grid.rows() != rows || grid.cols() != cols) {
    throw InvalidInput("hio_run: beta grid dimensions differ from the measurement");
  }
  if (!all_finite(grid) || (grid < 0.0).any() || (grid > 1.0).any()) {
    throw InvalidInput("hio_run: beta grid entries must lie in [0, 1]");
  }
}

}  // namespace

ReconResult hio_run(const Measurement& a, const SupportMask& mask, const HioParams& p) {
  const Index rows = a.rows();
  const Index cols = a.cols();
  if (mask.rows() != rows || mask.cols() != cols) {
    throw InvalidInput("hio_run: measurement " + dims_string(rows, cols) + " vs mask " +
                       dims_string(mask.rows(), mask.cols()));
  }
  if (p.max_iter < 1) throw InvalidInput("hio_run: max_iter must be positive");
  validate_beta(p, rows, cols);
  const double tol = p.tol.value_or(1e-8 * a.energy());
  if (!(tol >= 0.0)) throw InvalidInput("hio_run: tol must be nonnegative");

  const Index n = rows * cols;
  const bool* in_g1 = mask.inside().data();
  const double* mag = a.values().data();
  const double* beta_grid = nullptr;
  double beta_scalar = 0.0;
  if (const auto* b = std::get_if<double>(&p.beta)) {
    beta_scalar = *b;
  } else {
    beta_grid = std::get<RealField>(p.beta).data();
  }
  const double inv_n = 1.0 / static_cast<double>(n);

  ComplexField z = initial_guess(p.init, rows, cols);
  for (Index i = 0; i < n; ++i) {
    if (!in_g1[i]) z.data()[i] = 0.0;
  }

  Fft2d fft(rows, cols);
  ComplexField spectrum(rows, cols);
  ComplexField tz(rows, cols);

  ReconResult result;
  result.s_trace.reserve(static_cast<size_t>(p.max_iter));
  for (int iter = 0; iter < p.max_iter; ++iter) {
    fft.forward(z, spectrum);
    std::complex<double>* f = spectrum.data();
    for (Index i = 0; i < n; ++i) {
      const double m = std::abs(f[i]);
      f[i] = m < 1e-300 ? std::complex<double>(mag[i], 0.0) : f[i] * (mag[i] / m);
    }
    fft.backward(spectrum, tz);

    double s = 0.0;
    std::complex<double>* zp = z.data();
    const std::complex<double>* t = tz.data();
    for (Index i = 0; i < n; ++i) {
      const std::complex<double> v = t[i] * inv_n;
      if (in_g1[i]) {
        zp[i] = v;
      } else {
        s += std::norm(v);
        zp[i] -= (beta_grid ? beta_grid[i] : beta_scalar) * v;
      }
    }
    result.s_trace.push_back(s);
    if (s <= tol) {
      result.converged = true;
      break;
    }
  }
  result.iterations = static_cast<int>(result.s_trace.size());
  result.z = std::move(z);
  return result;
}

HioInit restart_init(const HioParams& p, int index) {
  if (index == 0) return p.init;
  uint64_t base = 0;
  if (const auto* r = std::get_if<InitRandom>(&p.init)) base = r->seed;
  return InitRandom{mix_seed(base, static_cast<uint64_t>(index))};
}

ReconResult multistart(const Measurement& a, const SupportMask& mask, const HioParams& p,
                       int restarts) {
  if (restarts < 1) throw InvalidInput("multistart: restarts must be >= 1");
  ReconResult best;
  double best_s = std::numeric_limits<double>::infinity();
  for (int k = 0; k < restarts; ++k) {
    HioParams run = p;
    run.init = restart_init(p, k);
    ReconResult r = hio_run(a, mask, run);
    const double s = r.s_trace.back();
    if (k == 0 || s < best_s) {
      best_s = s;
      best = std::move(r);
    }
  }
  return best;
}

}  // namespace hft
