#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <type_traits>

#include <Eigen/Core>

namespace hft {

using Index = Eigen::Index;

/// Row-major dense grids. Every 2-D quantity in the library (objects,
/// reconstructions, k-domain magnitudes, masks) is one of these.
template <typename Scalar>
using Grid = Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

template <typename Scalar>
using ComplexGrid = Grid<std::complex<Scalar>>;

using ComplexField = ComplexGrid<double>;
using RealField = Grid<double>;
using BoolGrid = Grid<bool>;

/// Raised for inputs that violate a documented precondition
/// (dimension mismatch, negative magnitudes, malformed files, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a ratio of overlap coefficients has a vanishing denominator.
class DegenerateOffset : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Object dimensions and the integer per-axis oversampling factor.
/// The padded k-domain grid is (n1*r) x (n2*r); the sampling ratio is r^2.
class SamplingConfig {
 public:
  SamplingConfig(Index n1, Index n2, Index r) : n1_(n1), n2_(n2), r_(r) {
    if (n1 < 1 || n2 < 1 || r < 1) {
      throw InvalidInput("SamplingConfig: n1, n2 and r must be positive");
    }
  }

  Index n1() const { return n1_; }
  Index n2() const { return n2_; }
  Index r() const { return r_; }
  Index padded_rows() const { return n1_ * r_; }
  Index padded_cols() const { return n2_ * r_; }
  Index sampling_ratio() const { return r_ * r_; }

  friend bool operator==(const SamplingConfig&, const SamplingConfig&) = default;

 private:
  Index n1_;
  Index n2_;
  Index r_;
};

/// k-separation of two measurement directions, per axis, in units of lambda/l.
struct NormalizedFrequencyOffset {
  double u1 = 0.0;
  double u2 = 0.0;
};

/// Nonnegative, finite k-domain magnitude on the padded grid.
class Measurement {
 public:
  Measurement() = default;
  explicit Measurement(RealField a);

  Index rows() const { return a_.rows(); }
  Index cols() const { return a_.cols(); }
  const RealField& values() const { return a_; }

  /// Sum of squared magnitudes.
  double energy() const { return a_.square().sum(); }

 private:
  RealField a_;
};

template <typename Derived>
bool all_finite(const Eigen::ArrayBase<Derived>& x) {
  for (Index i = 0; i < x.size(); ++i) {
    const auto v = x.derived().data()[i];
    if constexpr (std::is_arithmetic_v<std::decay_t<decltype(v)>>) {
      if (!std::isfinite(v)) return false;
    } else {
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    }
  }
  return true;
}

inline std::string dims_string(Index rows, Index cols) {
  return std::to_string(rows) + "x" + std::to_string(cols);
}

}  // namespace hft
