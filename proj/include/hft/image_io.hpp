#pragma once

#include <filesystem>

#include "hft/types.hpp"

namespace hft {

/// Reads an 8- or 16-bit grayscale PNG as raw counts (no rescaling).
RealField read_png_gray(const std::filesystem::path& path);

/// Writes a 16-bit grayscale PNG. Values are rounded and clamped to [0, 65535].
void write_png16(const std::filesystem::path& path, const RealField& counts);

/// 65535 * log10(1 + a) / log10(1 + max a); all zeros when max a == 0.
RealField log_display(const RealField& a);

/// Affine map of [min, max] onto [0, 65535]; constant input maps to 0.
RealField linear_display(const RealField& v);

}  // namespace hft
