#pragma once

#include <filesystem>
#include <iosfwd>

#include "hft/types.hpp"

namespace hft {

// Binary grid files: one JSON header line
//   {"magic":"CFLD1","rows":R,"cols":C,"dtype":"c128le"}\n
// followed by R*C row-major samples as little-endian IEEE-754 doubles
// (re, im interleaved for CFLD1; one value per sample for MAG1/"f64le").

void write_cfld(std::ostream& os, const ComplexField& field);
ComplexField read_cfld(std::istream& is);
void write_cfld(const std::filesystem::path& path, const ComplexField& field);
ComplexField read_cfld(const std::filesystem::path& path);

void write_mag1(std::ostream& os, const Measurement& m);
Measurement read_mag1(std::istream& is);
void write_mag1(const std::filesystem::path& path, const Measurement& m);
Measurement read_mag1(const std::filesystem::path& path);

}  // namespace hft
