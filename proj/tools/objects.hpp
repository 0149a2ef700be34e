#pragma once

#include <cstdint>
#include <string>

#include "hft/types.hpp"

namespace hftpr {

/// The printed 3x3 complex test matrix.
hft::ComplexField golden3x3();

/// Real and imaginary parts uniform on [-1, 1).
hft::ComplexField random_object(hft::Index n1, hft::Index n2, uint64_t seed);

/// `text` in a 3x5 pixel font, one blank column between letters, centered in
/// an n x n block. Supports the letters C, H, L, T and U.
hft::BoolGrid text_shape(const std::string& text, hft::Index n);

/// 1 off the shape, i on it: a pure phase object.
hft::ComplexField masked_shape_object(const hft::BoolGrid& shape);

}  // namespace hftpr
