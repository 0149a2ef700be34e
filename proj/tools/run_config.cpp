#include "run_config.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace hftpr {

namespace {

using hft::InvalidInput;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <typename T>
T parse_number(const std::string& key, const std::string& text) {
  const std::string v = trim(text);
  T out{};
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size() || v.empty()) {
    throw InvalidInput("config: bad value for " + key + ": '" + text + "'");
  }
  return out;
}

bool parse_bool(const std::string& key, const std::string& text) {
  const std::string v = trim(text);
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  throw InvalidInput("config: bad value for " + key + ": '" + text + "'");
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  if (trim(text).empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(trim(item));
  return out;
}

template <typename T>
std::vector<T> parse_list(const std::string& key, const std::string& text) {
  std::vector<T> out;
  for (const auto& item : split_list(text)) out.push_back(parse_number<T>(key, item));
  return out;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}
std::string fmt(Index v) { return std::to_string(v); }
std::string fmt(int v) { return std::to_string(v); }
std::string fmt(uint64_t v) { return std::to_string(v); }

template <typename T>
std::string join(const std::vector<T>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    if constexpr (std::is_same_v<T, std::string>) {
      out += v[i];
    } else {
      out += fmt(v[i]);
    }
  }
  return out;
}

template <typename T>
ConfigKey number_key(std::string name, std::string help, T RunConfig::*m) {
  return {name, std::move(help),
          [m, name](RunConfig& c, const std::string& v) { c.*m = parse_number<T>(name, v); },
          [m](const RunConfig& c) -> std::optional<std::string> { return fmt(c.*m); }};
}

template <typename T>
ConfigKey optional_key(std::string name, std::string help, std::optional<T> RunConfig::*m) {
  return {name, std::move(help),
          [m, name](RunConfig& c, const std::string& v) {
            if (trim(v).empty()) {
              (c.*m).reset();
            } else {
              c.*m = parse_number<T>(name, v);
            }
          },
          [m](const RunConfig& c) -> std::optional<std::string> {
            if (!(c.*m)) return std::nullopt;
            return fmt(*(c.*m));
          }};
}

ConfigKey string_key(std::string name, std::string help, std::string RunConfig::*m) {
  return {name, std::move(help), [m](RunConfig& c, const std::string& v) { c.*m = trim(v); },
          [m](const RunConfig& c) -> std::optional<std::string> { return c.*m; }};
}

template <typename T>
ConfigKey list_key(std::string name, std::string help, std::vector<T> RunConfig::*m) {
  return {name, std::move(help),
          [m, name](RunConfig& c, const std::string& v) {
            if constexpr (std::is_same_v<T, std::string>) {
              c.*m = split_list(v);
            } else {
              c.*m = parse_list<T>(name, v);
            }
          },
          [m](const RunConfig& c) -> std::optional<std::string> { return join(c.*m); }};
}

ConfigKey bool_key(std::string name, std::string help, bool RunConfig::*m) {
  return {name, std::move(help),
          [m, name](RunConfig& c, const std::string& v) { c.*m = parse_bool(name, v); },
          [m](const RunConfig& c) -> std::optional<std::string> { return c.*m ? "true" : "false"; }};
}

}  // namespace

const std::vector<ConfigKey>& config_keys() {
  static const std::vector<ConfigKey> keys = {
      number_key("seed", "master seed", &RunConfig::seed),
      string_key("out", "output directory", &RunConfig::out),
      string_key("object", "object CFLD", &RunConfig::object),
      string_key("object2", "phase donor CFLD (mix)", &RunConfig::object2),
      string_key("measurement", "magnitude MAG1", &RunConfig::measurement),
      string_key("truth", "ground-truth CFLD for alignment", &RunConfig::truth),
      list_key("frames", "comma-separated PNG exposures (ingest)", &RunConfig::frames),
      number_key("r", "oversampling per axis", &RunConfig::r),
      number_key("rnoi", "relative noise", &RunConfig::rnoi),
      number_key("anoi", "absolute noise", &RunConfig::anoi),
      number_key("beta", "HIO feedback", &RunConfig::beta),
      number_key("max_iter", "HIO iterations", &RunConfig::max_iter),
      optional_key("tol", "stop once S <= tol (default 1e-8 sum a^2)", &RunConfig::tol),
      string_key("init", "ones | random", &RunConfig::init),
      number_key("restarts", "multi-start count", &RunConfig::restarts),
      string_key("mask_shape", "square | circle", &RunConfig::mask_shape),
      optional_key("mask_size", "G1 side (square) or radius (circle)", &RunConfig::mask_size),
      list_key("sweep_sizes", "comma-separated G1 sides", &RunConfig::sweep_sizes),
      number_key("sweep_runs", "runs per size", &RunConfig::sweep_runs),
      list_key("exposure_scales", "per-frame exposure scale", &RunConfig::exposure_scales),
      number_key("saturation", "saturation level, counts", &RunConfig::saturation),
      number_key("background", "background level, counts", &RunConfig::background),
      number_key("bin_factor", "bin factor", &RunConfig::bin_factor),
      list_key("crop", "row,col,rows,cols", &RunConfig::crop),
      optional_key("despeckle", "despeckle threshold", &RunConfig::despeckle),
      bool_key("input_is_intensity", "frames record intensity", &RunConfig::input_is_intensity),
      optional_key("target", "output side length (ingest)", &RunConfig::target),
      string_key("kind", "golden3x3 | random | cthulhu", &RunConfig::kind),
      number_key("n", "object side (make-object)", &RunConfig::n),
  };
  return keys;
}

void set_key(RunConfig& c, const std::string& key, const std::string& value) {
  for (const auto& k : config_keys()) {
    if (k.name == key) {
      k.set(c, value);
      return;
    }
  }
  throw InvalidInput("config: unknown key '" + key + "'");
}

RunConfig parse_config(const std::string& text, RunConfig base) {
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw InvalidInput("config line " + std::to_string(lineno) + ": expected key = value");
    }
    try {
      set_key(base, trim(line.substr(0, eq)), line.substr(eq + 1));
    } catch (const InvalidInput& e) {
      throw InvalidInput("config line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return base;
}

RunConfig load_config(const std::string& path, RunConfig base) {
  std::ifstream is(path);
  if (!is) throw InvalidInput("cannot open config: " + path);
  std::stringstream ss;
  ss << is.rdbuf();
  return parse_config(ss.str(), std::move(base));
}

std::string format_config(const RunConfig& c) {
  std::string out;
  for (const auto& k : config_keys()) {
    if (auto v = k.get(c)) out += k.name + " = " + *v + "\n";
  }
  return out;
}

hft::HioParams hio_params(const RunConfig& c) {
  hft::HioParams p;
  p.beta = c.beta;
  p.max_iter = c.max_iter;
  p.tol = c.tol;
  if (c.init == "ones") {
    p.init = hft::InitAllOnes{};
  } else if (c.init == "random") {
    p.init = hft::InitRandom{c.seed};
  } else {
    throw InvalidInput("init must be 'ones' or 'random', got '" + c.init + "'");
  }
  return p;
}

hft::NoiseParams noise_params(const RunConfig& c) { return {c.rnoi, c.anoi, c.seed}; }

hft::IngestConfig ingest_config(const RunConfig& c) {
  hft::IngestConfig cfg;
  cfg.bin_factor = c.bin_factor;
  if (!c.crop.empty()) {
    if (c.crop.size() != 4) throw InvalidInput("crop needs row,col,rows,cols");
    cfg.crop = hft::CropWindow{c.crop[0], c.crop[1], c.crop[2], c.crop[3]};
  }
  cfg.despeckle_threshold = c.despeckle;
  cfg.input_is_intensity = c.input_is_intensity;
  return cfg;
}

hft::MaskShape mask_shape(const RunConfig& c) {
  if (c.mask_shape == "square") return hft::MaskShape::Square;
  if (c.mask_shape == "circle") return hft::MaskShape::Circle;
  throw InvalidInput("mask_shape must be 'square' or 'circle', got '" + c.mask_shape + "'");
}

}  // namespace hftpr
