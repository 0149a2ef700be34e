#pragma once

// Reference computations used only by the tests. They follow the defining
// formulas directly (double sums, quadrature, enumeration) and share no code
// with the library paths they check.

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "hft/types.hpp"

namespace oracle {

using hft::ComplexField;
using hft::Index;

/// F(k1, k2) = sum_{n1,n2} x(n1, n2) e^{-2 pi i (n1 k1 / M1 + n2 k2 / M2)}.
inline ComplexField direct_dft(const ComplexField& x) {
  const Index m1 = x.rows();
  const Index m2 = x.cols();
  ComplexField out(m1, m2);
  for (Index k1 = 0; k1 < m1; ++k1) {
    for (Index k2 = 0; k2 < m2; ++k2) {
      std::complex<long double> acc = 0.0L;
      for (Index n1 = 0; n1 < m1; ++n1) {
        for (Index n2 = 0; n2 < m2; ++n2) {
          const long double ang = -2.0L * std::numbers::pi_v<long double> *
                                  (static_cast<long double>((n1 * k1) % m1) / m1 +
                                   static_cast<long double>((n2 * k2) % m2) / m2);
          const std::complex<long double> v(x(n1, n2).real(), x(n1, n2).imag());
          acc += v * std::complex<long double>(std::cos(ang), std::sin(ang));
        }
      }
      out(k1, k2) = {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
    }
  }
  return out;
}

/// Zero-pad into the top-left corner of an (n1 r) x (n2 r) grid, elementwise.
inline ComplexField pad_corner(const ComplexField& x, Index r) {
  ComplexField out = ComplexField::Zero(x.rows() * r, x.cols() * r);
  for (Index i = 0; i < x.rows(); ++i) {
    for (Index j = 0; j < x.cols(); ++j) out(i, j) = x(i, j);
  }
  return out;
}

/// (1/l) int_w^{w+l} e^{2 pi i u x / l} dx, by composite Gauss-Legendre
/// (5 points on each of `panels` panels), with l = 1.
inline std::complex<double> window_integral(double u, double w, int panels = 64) {
  static constexpr double nodes[5] = {0.0, -0.5384693101056831, 0.5384693101056831,
                                      -0.9061798459386640, 0.9061798459386640};
  static constexpr double weights[5] = {0.5688888888888889, 0.4786286704993665, 0.4786286704993665,
                                        0.2369268850561891, 0.2369268850561891};
  std::complex<double> acc = 0.0;
  const double h = 1.0 / panels;
  for (int p = 0; p < panels; ++p) {
    const double mid = w + (p + 0.5) * h;
    for (int q = 0; q < 5; ++q) {
      const double x = mid + 0.5 * h * nodes[q];
      acc += weights[q] * 0.5 * h * std::polar(1.0, 2.0 * std::numbers::pi * u * x);
    }
  }
  return acc;
}

/// sin(pi u) / (pi u) straight from the definition (u != 0).
inline double sinc_direct(double u) {
  return u == 0.0 ? 1.0 : std::sin(std::numbers::pi * u) / (std::numbers::pi * u);
}

/// Number of integer points (x, y) with x^2 + y^2 <= radius^2.
inline Index lattice_points(Index radius) {
  Index count = 0;
  for (Index x = -radius; x <= radius; ++x) {
    for (Index y = -radius; y <= radius; ++y) {
      if (x * x + y * y <= radius * radius) ++count;
    }
  }
  return count;
}

inline ComplexField random_complex(Index rows, Index cols, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ComplexField out(rows, cols);
  for (Index i = 0; i < out.size(); ++i) out.data()[i] = {u(rng), u(rng)};
  return out;
}

inline double max_abs_diff(const ComplexField& a, const ComplexField& b) {
  return (a - b).abs().maxCoeff();
}

}  // namespace oracle
