#pragma once

#include <complex>

#include "hft/types.hpp"

namespace hft {

/// Zero-pads an n1 x n2 object into the top-left corner of the
/// (n1*r) x (n2*r) grid. The corner block is the object zone G1, the rest is
/// the zero zone G2.
ComplexField embed(const ComplexField& object, const SamplingConfig& cfg);

/// High-density Fourier transform: the unnormalized DFT of embed(object).
/// Sample (k1, k2) sits at fractional frequency (k1/r, k2/r) of the object's
/// own DFT grid. With r == 1 this is the ordinary 2-D DFT.
ComplexField hft_forward(const ComplexField& object, const SamplingConfig& cfg);

/// Inverse of hft_forward on the padded grid, scaled by 1/(rows*cols).
/// Returns the full padded field; use extract() for the object block.
ComplexField hft_inverse(const ComplexField& field, const SamplingConfig& cfg);

/// The G1 block of a padded field.
ComplexField extract(const ComplexField& field, const SamplingConfig& cfg);

/// Circular shift that moves the zero-frequency sample to index
/// (rows/2, cols/2). Display only.
template <typename Derived>
Grid<typename Derived::Scalar> fftshift(const Eigen::ArrayBase<Derived>& x) {
  const Index rows = x.rows();
  const Index cols = x.cols();
  Grid<typename Derived::Scalar> out(rows, cols);
  const Index sr = rows / 2;
  const Index sc = cols / 2;
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) {
      out((i + sr) % rows, (j + sc) % cols) = x(i, j);
    }
  }
  return out;
}

/// Normalized sinc, sin(pi u)/(pi u), with sinc(0) = 1.
double sinc(double u);

/// Overlap of two measurement vectors for a window centered on the origin:
/// sinc(u1) * sinc(u2). Real-valued, |P| <= 1, zero at nonzero integers.
double inner_product(const NormalizedFrequencyOffset& offset);

/// Overlap for a window starting at (w1, w2) (in units of the window width):
///   prod_axis (e^{2 pi i u (w+1)} - e^{2 pi i u w}) / (2 pi i u).
/// The modulus does not depend on the window origin.
std::complex<double> inner_product_general(const NormalizedFrequencyOffset& offset,
                                           double w1_over_l, double w2_over_l);

/// Ratio of the changes in the overlap with integer samples j1 and j2 when a
/// fractional sample moves from k to k + 1/r (all in units of lambda/l):
///   q = [P(k'-j1) - P(k-j1)] / [P(k'-j2) - P(k-j2)],  P = sinc.
/// Throws DegenerateOffset when the denominator vanishes.
double coeff_ratio(double k, Index r, Index j1, Index j2);

}  // namespace hft
