#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hft/hio_solver.hpp"
#include "hft/ingest.hpp"
#include "hft/noise_model.hpp"

namespace hftpr {

using hft::Index;

/// Every parameter a subcommand can take. Keys in the config file are the
/// member names; unset optionals are simply absent from the file.
struct RunConfig {
  uint64_t seed = 0;
  std::string out = ".";

  // Inputs.
  std::string object;       ///< CFLD, object-sized
  std::string object2;      ///< CFLD, phase donor for mix
  std::string measurement;  ///< MAG1, padded-grid magnitude
  std::string truth;        ///< CFLD, object-sized or padded
  std::vector<std::string> frames;  ///< PNG exposures for ingest

  // Sampling and noise.
  Index r = 1;
  double rnoi = 0.0;
  double anoi = 0.0;

  // Solver.
  double beta = 0.9;
  int max_iter = 1000;
  std::optional<double> tol;
  std::string init = "ones";  ///< ones | random
  int restarts = 1;
  std::string mask_shape = "square";  ///< square | circle
  std::optional<Index> mask_size;

  // Sweep.
  std::vector<Index> sweep_sizes;
  int sweep_runs = 5;

  // Ingest.
  std::vector<double> exposure_scales;
  double saturation = 65535.0;
  double background = 0.0;
  Index bin_factor = 1;
  std::vector<Index> crop;  ///< row, col, rows, cols
  std::optional<double> despeckle;
  bool input_is_intensity = true;
  std::optional<Index> target;  ///< output side length; overrides crop/bin_factor

  // make-object.
  std::string kind = "random";  ///< golden3x3 | random | cthulhu
  Index n = 16;

  bool operator==(const RunConfig&) const = default;
};

/// Text accessors for one config key.
struct ConfigKey {
  std::string name;
  std::string help;
  std::function<void(RunConfig&, const std::string&)> set;
  std::function<std::optional<std::string>(const RunConfig&)> get;
};

const std::vector<ConfigKey>& config_keys();

/// Parses "key = value" lines. '#' starts a comment; blank lines are skipped.
/// Unknown keys and malformed values throw hft::InvalidInput naming the line.
RunConfig parse_config(const std::string& text, RunConfig base = {});
RunConfig load_config(const std::string& path, RunConfig base = {});

/// One "key = value" line per set key, in config_keys() order. Doubles are
/// written with 17 significant digits so parse_config(format_config(c)) == c.
std::string format_config(const RunConfig& c);

void set_key(RunConfig& c, const std::string& key, const std::string& value);

hft::HioParams hio_params(const RunConfig& c);
hft::NoiseParams noise_params(const RunConfig& c);
hft::IngestConfig ingest_config(const RunConfig& c);
hft::MaskShape mask_shape(const RunConfig& c);

}  // namespace hftpr
