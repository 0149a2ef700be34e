#pragma once

#include <memory>

#include "hft/types.hpp"

namespace hft {

/// Unnormalized 2-D complex DFT of a fixed grid size.
///
/// forward uses the e^{-2 pi i nk/M} kernel; backward uses e^{+...} and is
/// NOT scaled, so backward(forward(x)) == rows*cols*x. Each instance owns its
/// plan and work buffer and must not be shared between threads; create one per
/// thread instead (plan creation is serialized internally).
class Fft2d {
 public:
  Fft2d(Index rows, Index cols);
  ~Fft2d();
  Fft2d(Fft2d&&) noexcept;
  Fft2d& operator=(Fft2d&&) noexcept;
  Fft2d(const Fft2d&) = delete;
  Fft2d& operator=(const Fft2d&) = delete;

  Index rows() const;
  Index cols() const;

  void forward(const ComplexField& in, ComplexField& out);
  void backward(const ComplexField& in, ComplexField& out);

  ComplexField forward(const ComplexField& in);
  ComplexField backward(const ComplexField& in);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace hft
