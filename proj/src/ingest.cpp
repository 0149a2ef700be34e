#include "hft/ingest.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>

#include <openssl/evp.h>

namespace hft {

HdrComposite hdr_compose(const std::vector<RawFrame>& frames, double background) {
  if (frames.empty()) throw InvalidInput("hdr_compose: no frames");
  const Index rows = frames.front().pixels.rows();
  const Index cols = frames.front().pixels.cols();
  for (const auto& f : frames) {
    if (f.pixels.rows() != rows || f.pixels.cols() != cols) {
      throw InvalidInput("hdr_compose: frames differ in size");
    }
    if (!(f.exposure_scale > 0.0) || !(f.saturation_level > 0.0)) {
      throw InvalidInput("hdr_compose: exposure_scale and saturation_level must be positive");
    }
  }
  if (!(background >= 0.0)) throw InvalidInput("hdr_compose: negative background");

  HdrComposite out{RealField(rows, cols), BoolGrid(rows, cols)};
  for (Index i = 0; i < rows * cols; ++i) {
    double weighted = 0.0;
    double weights = 0.0;
    double fallback = 0.0;
    for (const auto& f : frames) {
      const double count = f.pixels.data()[i];
      const double estimate = f.exposure_scale * (count - background);
      fallback = std::max(fallback, estimate);
      if (count > background && count < f.saturation_level) {
        weighted += count * estimate;
        weights += count;
      }
    }
    const bool valid = weights > 0.0;
    out.valid.data()[i] = valid;
    out.values.data()[i] = valid ? weighted / weights : fallback;
  }
  return out;
}

RealField despeckle(const RealField& m, double threshold) {
  if (!(threshold > 1.0)) throw InvalidInput("despeckle: threshold must exceed 1");
  const Index rows = m.rows();
  const Index cols = m.cols();
  RealField out = m;
  std::array<double, 8> nb{};
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) {
      size_t n = 0;
      for (Index di = -1; di <= 1; ++di) {
        for (Index dj = -1; dj <= 1; ++dj) {
          if (di == 0 && dj == 0) continue;
          const Index y = i + di;
          const Index x = j + dj;
          if (y < 0 || y >= rows || x < 0 || x >= cols) continue;
          nb[n++] = m(y, x);
        }
      }
      if (n == 0) continue;
      std::sort(nb.begin(), nb.begin() + static_cast<std::ptrdiff_t>(n));
      const double median = n % 2 ? nb[n / 2] : 0.5 * (nb[n / 2 - 1] + nb[n / 2]);
      if (m(i, j) > threshold * median) out(i, j) = median;
    }
  }
  return out;
}

RealField bin_average(const RealField& m, Index factor) {
  if (factor < 1) throw InvalidInput("bin_average: factor must be positive");
  if (m.rows() % factor != 0 || m.cols() % factor != 0) {
    throw InvalidInput("bin_average: factor " + std::to_string(factor) + " does not divide " +
                       dims_string(m.rows(), m.cols()));
  }
  if (factor == 1) return m;
  const Index rows = m.rows() / factor;
  const Index cols = m.cols() / factor;
  RealField out(rows, cols);
  const double inv = 1.0 / static_cast<double>(factor * factor);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) {
      out(i, j) = m.block(i * factor, j * factor, factor, factor).sum() * inv;
    }
  }
  return out;
}

ResamplePlan plan_resample(Index input, Index target) {
  if (target < 1 || input < target) {
    throw InvalidInput("plan_resample: cannot reduce " + std::to_string(input) + " to " +
                       std::to_string(target));
  }
  const Index factor = input / target;
  const Index extent = factor * target;
  return {(input - extent) / 2, extent, factor};
}

std::string sha256_hex(const void* data, size_t size) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(data, size, digest.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  std::string hex;
  hex.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    char buf[3];
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

std::string sha256_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw InvalidInput("cannot open: " + path);
  const std::string bytes((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
  return sha256_hex(bytes.data(), bytes.size());
}

nlohmann::ordered_json to_json(const IngestConfig& cfg) {
  nlohmann::ordered_json j;
  j["bin_factor"] = cfg.bin_factor;
  if (cfg.crop) {
    j["crop"] = {cfg.crop->row, cfg.crop->col, cfg.crop->rows, cfg.crop->cols};
  } else {
    j["crop"] = nullptr;
  }
  if (cfg.despeckle_threshold) {
    j["despeckle_threshold"] = *cfg.despeckle_threshold;
  } else {
    j["despeckle_threshold"] = nullptr;
  }
  j["background_level"] = cfg.background_level;
  j["input_is_intensity"] = cfg.input_is_intensity;
  return j;
}

IngestConfig ingest_config_from_json(const nlohmann::json& j) {
  IngestConfig cfg;
  cfg.bin_factor = j.at("bin_factor").get<Index>();
  if (!j.at("crop").is_null()) {
    const auto c = j.at("crop").get<std::vector<Index>>();
    if (c.size() != 4) throw InvalidInput("ingest config: crop needs 4 entries");
    cfg.crop = CropWindow{c[0], c[1], c[2], c[3]};
  }
  if (!j.at("despeckle_threshold").is_null()) {
    cfg.despeckle_threshold = j.at("despeckle_threshold").get<double>();
  }
  cfg.background_level = j.at("background_level").get<double>();
  cfg.input_is_intensity = j.at("input_is_intensity").get<bool>();
  return cfg;
}

IngestResult to_measurement(const RealField& m, const IngestConfig& cfg,
                            const std::vector<std::string>& input_digests) {
  if (m.size() == 0) throw InvalidInput("to_measurement: empty input");
  if (!all_finite(m)) throw InvalidInput("to_measurement: non-finite input");
  if (!(cfg.background_level >= 0.0)) throw InvalidInput("to_measurement: negative background");

  RealField grid = m;
  if (cfg.crop) {
    const CropWindow& c = *cfg.crop;
    if (c.row < 0 || c.col < 0 || c.rows < 1 || c.cols < 1 || c.row + c.rows > m.rows() ||
        c.col + c.cols > m.cols()) {
      throw InvalidInput("to_measurement: crop window outside the " + dims_string(m.rows(), m.cols()) +
                         " frame");
    }
    grid = m.block(c.row, c.col, c.rows, c.cols);
  }
  grid = (grid - cfg.background_level).max(0.0);
  if (cfg.despeckle_threshold) grid = despeckle(grid, *cfg.despeckle_threshold);
  grid = bin_average(grid, cfg.bin_factor);
  if (cfg.input_is_intensity) grid = grid.sqrt();
  grid = grid.max(0.0);

  nlohmann::ordered_json prov;
  prov["input_shape"] = {m.rows(), m.cols()};
  prov["input_sha256"] = input_digests;
  prov["config"] = to_json(cfg);
  prov["output_shape"] = {grid.rows(), grid.cols()};
  return {Measurement(std::move(grid)), std::move(prov)};
}

}  // namespace hft
