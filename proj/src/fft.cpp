#include "hft/fft.hpp"

#include <cstring>
#include <mutex>

#include <fftw3.h>

namespace hft {

namespace {

// The FFTW planner is not thread-safe.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

struct Fft2d::Impl {
  Index rows = 0;
  Index cols = 0;
  fftw_complex* buffer = nullptr;
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;

  Impl(Index r, Index c) : rows(r), cols(c) {
    const auto n = static_cast<size_t>(r * c);
    std::lock_guard<std::mutex> lock(planner_mutex());
    buffer = fftw_alloc_complex(n);
    // ESTIMATE keeps the plan choice (and therefore the rounding) identical
    // from run to run.
    fwd = fftw_plan_dft_2d(static_cast<int>(r), static_cast<int>(c), buffer, buffer,
                           FFTW_FORWARD, FFTW_ESTIMATE);
    bwd = fftw_plan_dft_2d(static_cast<int>(r), static_cast<int>(c), buffer, buffer,
                           FFTW_BACKWARD, FFTW_ESTIMATE);
  }

  ~Impl() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(fwd);
    fftw_destroy_plan(bwd);
    fftw_free(buffer);
  }

  void run(fftw_plan plan, const ComplexField& in, ComplexField& out) {
    if (in.rows() != rows || in.cols() != cols) {
      throw InvalidInput("Fft2d: expected " + dims_string(rows, cols) + " input, got " +
                         dims_string(in.rows(), in.cols()));
    }
    const auto bytes = static_cast<size_t>(rows * cols) * sizeof(fftw_complex);
    std::memcpy(buffer, in.data(), bytes);
    fftw_execute(plan);
    out.resize(rows, cols);
    std::memcpy(static_cast<void*>(out.data()), buffer, bytes);
  }
};

Fft2d::Fft2d(Index rows, Index cols) {
  if (rows < 1 || cols < 1) throw InvalidInput("Fft2d: dimensions must be positive");
  impl_ = std::make_unique<Impl>(rows, cols);
}

Fft2d::~Fft2d() = default;
Fft2d::Fft2d(Fft2d&&) noexcept = default;
Fft2d& Fft2d::operator=(Fft2d&&) noexcept = default;

Index Fft2d::rows() const { return impl_->rows; }
Index Fft2d::cols() const { return impl_->cols; }

void Fft2d::forward(const ComplexField& in, ComplexField& out) { impl_->run(impl_->fwd, in, out); }
void Fft2d::backward(const ComplexField& in, ComplexField& out) { impl_->run(impl_->bwd, in, out); }

ComplexField Fft2d::forward(const ComplexField& in) {
  ComplexField out;
  forward(in, out);
  return out;
}

ComplexField Fft2d::backward(const ComplexField& in) {
  ComplexField out;
  backward(in, out);
  return out;
}

}  // namespace hft
