#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hft/types.hpp"

namespace hft {

/// One detector exposure. exposure_scale converts counts back to a common
/// linear scale (10^OD for a filter stack of total optical density OD).
struct RawFrame {
  RealField pixels;
  double saturation_level = 65535.0;
  double exposure_scale = 1.0;
};

struct CropWindow {
  Index row = 0;
  Index col = 0;
  Index rows = 0;
  Index cols = 0;
};

struct IngestConfig {
  Index bin_factor = 1;
  std::optional<CropWindow> crop;
  /// Ratio against the 8-neighborhood median; unset disables despeckling.
  std::optional<double> despeckle_threshold;
  double background_level = 0.0;
  /// Detector frames record intensity; the solver wants magnitude.
  bool input_is_intensity = true;
};

struct HdrComposite {
  RealField values;
  BoolGrid valid;  ///< false where no frame had the pixel in range
};

/// Per pixel, the count-weighted mean of exposure_scale * (count - background)
/// over frames where background < count < saturation_level. Pixels in range
/// in no frame take the largest such estimate over all frames, clamped at 0,
/// and are flagged invalid.
HdrComposite hdr_compose(const std::vector<RawFrame>& frames, double background = 0.0);

/// Replaces every pixel above threshold * (median of its 8-neighborhood) by
/// that median. Medians come from the input, so adjacent spikes are handled in
/// one pass. Border pixels use the neighbors that exist.
RealField despeckle(const RealField& m, double threshold);

/// Mean over non-overlapping factor x factor blocks.
RealField bin_average(const RealField& m, Index factor);

/// Crop and bin factor that turn an input extent into `target` pixels: the
/// exact ratio when it divides, otherwise a centered crop to
/// target * floor(input / target) followed by binning by that floor.
struct ResamplePlan {
  Index offset = 0;
  Index extent = 0;
  Index factor = 1;
};
ResamplePlan plan_resample(Index input, Index target);

struct IngestResult {
  Measurement measurement;
  nlohmann::ordered_json provenance;
};

/// crop -> subtract background, clamp at 0 -> despeckle -> bin -> sqrt if
/// the input is intensity. The provenance records the config, the input
/// SHA-256 digests and the output shape.
IngestResult to_measurement(const RealField& m, const IngestConfig& cfg,
                            const std::vector<std::string>& input_digests = {});

/// Hex SHA-256 of a byte buffer / file.
std::string sha256_hex(const void* data, size_t size);
std::string sha256_file(const std::string& path);

nlohmann::ordered_json to_json(const IngestConfig& cfg);
IngestConfig ingest_config_from_json(const nlohmann::json& j);

}  // namespace hft
