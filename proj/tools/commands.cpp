#include "commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "hft/hft.hpp"
#include "objects.hpp"

namespace hftpr {

namespace fs = std::filesystem;
using hft::ComplexField;
using hft::InvalidInput;
using hft::Measurement;
using hft::RealField;
using hft::SamplingConfig;
using json = nlohmann::ordered_json;

namespace {

fs::path prepare_out(const RunConfig& c) {
  const fs::path out(c.out);
  fs::create_directories(out);
  const std::string echo = format_config(c);
  if (!(parse_config(echo) == c)) throw std::logic_error("config echo does not round-trip");
  std::ofstream os(out / "config.txt");
  os << echo;
  if (!os) throw InvalidInput("cannot write " + (out / "config.txt").string());
  return out;
}

void write_json(const fs::path& path, const json& j) {
  std::ofstream os(path);
  os << j.dump(2) << "\n";
  if (!os) throw InvalidInput("cannot write " + path.string());
}

void require(const std::string& value, const std::string& key) {
  if (value.empty()) throw InvalidInput("missing required key '" + key + "'");
}

ComplexField read_cfld_checked(const std::string& path, const std::string& key) {
  require(path, key);
  return hft::read_cfld(fs::path(path));
}

Measurement read_measurement(const RunConfig& c) {
  require(c.measurement, "measurement");
  return hft::read_mag1(fs::path(c.measurement));
}

SamplingConfig padded_config(const Measurement& a, Index r) {
  if (r < 1 || a.rows() % r != 0 || a.cols() % r != 0) {
    throw InvalidInput("measurement " + hft::dims_string(a.rows(), a.cols()) +
                       " is not a multiple of r = " + std::to_string(r));
  }
  return SamplingConfig(a.rows() / r, a.cols() / r, r);
}

Index mask_size_or_default(const RunConfig& c, const SamplingConfig& cfg) {
  if (c.mask_size) return *c.mask_size;
  if (mask_shape(c) == hft::MaskShape::Square && cfg.n1() == cfg.n2()) return cfg.n1();
  throw InvalidInput("mask_size is required for this mask");
}

json params_json(const hft::HioParams& p, const RunConfig& c) {
  json j;
  j["beta"] = c.beta;
  j["max_iter"] = p.max_iter;
  j["tol"] = p.tol ? json(*p.tol) : json(nullptr);
  j["init"] = c.init;
  j["seed"] = c.seed;
  j["restarts"] = c.restarts;
  return j;
}

void write_field_pngs(const fs::path& dir, const std::string& stem, const ComplexField& block) {
  hft::write_png16(dir / (stem + "_real.png"), hft::linear_display(block.real()));
  hft::write_png16(dir / (stem + "_imag.png"), hft::linear_display(block.imag()));
  hft::write_png16(dir / (stem + "_phase.png"), hft::linear_display(block.arg()));
}

}  // namespace

const std::vector<Command>& commands() {
  static const std::vector<Command> list = {
      {"simulate", "HFT magnitude of an object, with optional noise",
       {"object", "r", "rnoi", "anoi"}, cmd_simulate},
      {"reconstruct", "HIO phase retrieval from a magnitude",
       {"measurement", "truth", "r", "beta", "max_iter", "tol", "init", "restarts", "mask_shape",
        "mask_size"},
       cmd_reconstruct},
      {"sweep", "final S against square support size",
       {"measurement", "r", "beta", "max_iter", "tol", "init", "sweep_sizes", "sweep_runs"}, cmd_sweep},
      {"mix", "magnitude of one object with the HFT phase of another",
       {"object", "object2", "r", "rnoi", "anoi"}, cmd_mix},
      {"ingest", "detector exposures to a magnitude measurement",
       {"frames", "exposure_scales", "saturation", "background", "bin_factor", "crop", "despeckle",
        "input_is_intensity", "target"},
       cmd_ingest},
      {"make-object", "write a test object", {"kind", "n"}, cmd_make_object},
  };
  return list;
}

void cmd_simulate(const RunConfig& c) {
  const ComplexField obj = read_cfld_checked(c.object, "object");
  const SamplingConfig cfg(obj.rows(), obj.cols(), c.r);
  const Measurement clean(hft::hft_forward(obj, cfg).abs());
  const Measurement noisy = hft::add_noise(clean, noise_params(c));

  const fs::path out = prepare_out(c);
  hft::write_mag1(out / "measurement.mag1", noisy);
  if (!(hft::read_mag1(out / "measurement.mag1").values() == noisy.values()).all()) {
    throw std::runtime_error("measurement.mag1 did not read back");
  }
  hft::write_png16(out / "measurement_log.png", hft::log_display(hft::fftshift(noisy.values())));
  json side;
  side["object_shape"] = {cfg.n1(), cfg.n2()};
  side["r"] = cfg.r();
  side["measurement_shape"] = {noisy.rows(), noisy.cols()};
  side["energy"] = noisy.energy();
  side["noise"] = {{"rnoi", c.rnoi}, {"anoi", c.anoi}, {"seed", c.seed}};
  write_json(out / "measurement.json", side);
}

void cmd_reconstruct(const RunConfig& c) {
  const Measurement a = read_measurement(c);
  const SamplingConfig cfg = padded_config(a, c.r);
  const hft::SupportMask mask = hft::make_mask(cfg, mask_shape(c), mask_size_or_default(c, cfg));
  const hft::HioParams p = hio_params(c);

  std::optional<ComplexField> truth;
  if (!c.truth.empty()) {
    ComplexField t = hft::read_cfld(fs::path(c.truth));
    if (t.rows() == cfg.n1() && t.cols() == cfg.n2()) {
      t = hft::embed(t, cfg);
    } else if (t.rows() != cfg.padded_rows() || t.cols() != cfg.padded_cols()) {
      throw InvalidInput("truth " + hft::dims_string(t.rows(), t.cols()) +
                         " matches neither the object nor the padded grid");
    }
    truth = std::move(t);
  }

  const hft::ReconResult res = hft::multistart(a, mask, p, c.restarts);

  const fs::path out = prepare_out(c);
  hft::write_cfld(out / "recon.cfld", res.z);
  json side;
  side["iterations"] = res.iterations;
  side["converged"] = res.converged;
  side["final_S"] = res.s_trace.empty() ? 0.0 : res.s_trace.back();
  side["energy"] = a.energy();
  side["mask"] = {{"shape", c.mask_shape}, {"size", mask.size()}};
  side["params"] = params_json(p, c);
  side["s_trace"] = res.s_trace;
  write_json(out / "recon.json", side);
  write_field_pngs(out, "recon", hft::extract(res.z, cfg));

  if (truth) {
    const hft::AlignmentReport rep = hft::align_and_error(res.z, *truth, mask);
    write_json(out / "alignment.json",
               {{"flipped", rep.flipped}, {"global_phase", rep.global_phase}, {"rel_error", rep.rel_error}});
  }
}

void cmd_sweep(const RunConfig& c) {
  if (c.sweep_sizes.empty()) throw InvalidInput("missing required key 'sweep_sizes'");
  const Measurement a = read_measurement(c);
  const SamplingConfig cfg = padded_config(a, c.r);
  const hft::SweepReport rep = hft::support_sweep(a, cfg, c.sweep_sizes, hio_params(c), c.sweep_runs);

  const fs::path out = prepare_out(c);
  std::ofstream os(out / "sweep.csv");
  os << "size,mean_log_S,runs\n";
  os.precision(17);
  for (size_t i = 0; i < rep.sizes.size(); ++i) {
    os << rep.sizes[i] << "," << rep.mean_log_S[i] << "," << rep.runs_per_size << "\n";
  }
  if (!os) throw InvalidInput("cannot write " + (out / "sweep.csv").string());
}

void cmd_mix(const RunConfig& c) {
  const ComplexField o1 = read_cfld_checked(c.object, "object");
  const ComplexField o2 = read_cfld_checked(c.object2, "object2");
  const SamplingConfig cfg(o1.rows(), o1.cols(), c.r);
  const Measurement mag = hft::add_noise(Measurement(hft::hft_forward(o1, cfg).abs()), noise_params(c));
  const ComplexField mix = hft::phase_mix(mag, o2, cfg);

  const fs::path out = prepare_out(c);
  hft::write_cfld(out / "mix.cfld", mix);
  hft::write_png16(out / "mix_imag.png", hft::linear_display(hft::extract(mix, cfg).imag()));
}

void cmd_ingest(const RunConfig& c) {
  if (c.frames.empty()) throw InvalidInput("missing required key 'frames'");
  if (!c.exposure_scales.empty() && c.exposure_scales.size() != c.frames.size()) {
    throw InvalidInput("exposure_scales needs one entry per frame");
  }
  std::vector<hft::RawFrame> frames;
  std::vector<std::string> digests;
  for (size_t i = 0; i < c.frames.size(); ++i) {
    const double scale = c.exposure_scales.empty() ? 1.0 : c.exposure_scales[i];
    frames.push_back({hft::read_png_gray(c.frames[i]), c.saturation, scale});
    digests.push_back(hft::sha256_file(c.frames[i]));
  }
  const hft::HdrComposite hdr = hft::hdr_compose(frames, c.background);

  // Background is removed per frame by the HDR step.
  hft::IngestConfig icfg = ingest_config(c);
  if (c.target) {
    if (!c.crop.empty() || c.bin_factor != 1) {
      throw InvalidInput("target replaces crop and bin_factor; give one or the other");
    }
    const hft::ResamplePlan pr = hft::plan_resample(hdr.values.rows(), *c.target);
    const hft::ResamplePlan pc = hft::plan_resample(hdr.values.cols(), *c.target);
    const Index factor = std::min(pr.factor, pc.factor);
    const Index extent = factor * *c.target;
    icfg.crop = hft::CropWindow{(hdr.values.rows() - extent) / 2, (hdr.values.cols() - extent) / 2,
                                extent, extent};
    icfg.bin_factor = factor;
  }
  hft::IngestResult res = hft::to_measurement(hdr.values, icfg, digests);
  res.provenance["frames"] = c.frames;
  res.provenance["exposure_scales"] = c.exposure_scales;
  res.provenance["saturation"] = c.saturation;
  res.provenance["background"] = c.background;
  res.provenance["hdr_valid_fraction"] =
      static_cast<double>(hdr.valid.count()) / static_cast<double>(hdr.valid.size());

  const fs::path out = prepare_out(c);
  hft::write_mag1(out / "measurement.mag1", res.measurement);
  hft::write_png16(out / "measurement_log.png", hft::log_display(res.measurement.values()));
  write_json(out / "provenance.json", res.provenance);
}

void cmd_make_object(const RunConfig& c) {
  ComplexField obj;
  if (c.kind == "golden3x3") {
    obj = golden3x3();
  } else if (c.kind == "random") {
    obj = random_object(c.n, c.n, c.seed);
  } else if (c.kind == "cthulhu") {
    obj = masked_shape_object(text_shape("CTHULHU", c.n));
  } else {
    throw InvalidInput("kind must be golden3x3, random or cthulhu, got '" + c.kind + "'");
  }
  const fs::path out = prepare_out(c);
  hft::write_cfld(out / "object.cfld", obj);
}

}  // namespace hftpr
