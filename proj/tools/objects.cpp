#include "objects.hpp"

#include <array>
#include <map>

#include "hft/noise_model.hpp"

namespace hftpr {

using hft::BoolGrid;
using hft::ComplexField;
using hft::Index;

ComplexField golden3x3() {
  ComplexField m(3, 3);
  m << std::complex<double>(-0.2515, -0.0404), std::complex<double>(0.1371, -0.3740),
      std::complex<double>(-0.1159, -0.1448), std::complex<double>(0.6229, -1.1616),
      std::complex<double>(0.0090, -0.3990), std::complex<double>(0.0460, -0.2487),
      std::complex<double>(0.1437, -0.3831), std::complex<double>(0.0295, -0.3449),
      std::complex<double>(0.9242, -1.6586);
  return m;
}

ComplexField random_object(Index n1, Index n2, uint64_t seed) {
  if (n1 < 1 || n2 < 1) throw hft::InvalidInput("random_object: empty shape");
  hft::NormalStream g(seed);
  ComplexField out(n1, n2);
  for (Index i = 0; i < out.size(); ++i) {
    const double re = 2.0 * g.uniform() - 1.0;
    const double im = 2.0 * g.uniform() - 1.0;
    out.data()[i] = {re, im};
  }
  return out;
}

BoolGrid text_shape(const std::string& text, Index n) {
  using Glyph = std::array<const char*, 5>;
  static const std::map<char, Glyph> font = {
      {'C', {"###", "#..", "#..", "#..", "###"}},
      {'H', {"#.#", "#.#", "###", "#.#", "#.#"}},
      {'L', {"#..", "#..", "#..", "#..", "###"}},
      {'T', {"###", ".#.", ".#.", ".#.", ".#."}},
      {'U', {"#.#", "#.#", "#.#", "#.#", "###"}},
  };
  const Index width = text.empty() ? 0 : 4 * static_cast<Index>(text.size()) - 1;
  if (text.empty() || width > n || 5 > n) {
    throw hft::InvalidInput("text_shape: '" + text + "' does not fit in " + std::to_string(n));
  }
  BoolGrid out = BoolGrid::Constant(n, n, false);
  const Index top = (n - 5) / 2;
  Index left = (n - width) / 2;
  for (char ch : text) {
    const auto it = font.find(ch);
    if (it == font.end()) throw hft::InvalidInput(std::string("text_shape: no glyph for '") + ch + "'");
    for (Index y = 0; y < 5; ++y) {
      for (Index x = 0; x < 3; ++x) out(top + y, left + x) = it->second[y][x] == '#';
    }
    left += 4;
  }
  return out;
}

ComplexField masked_shape_object(const BoolGrid& shape) {
  return shape.select(ComplexField::Constant(shape.rows(), shape.cols(), {0.0, 1.0}),
                      ComplexField::Constant(shape.rows(), shape.cols(), 1.0));
}

}  // namespace hftpr
