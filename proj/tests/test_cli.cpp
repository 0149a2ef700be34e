#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "golden.hpp"
#include "hft/hft.hpp"
#include "objects.hpp"
#include "run_config.hpp"

using namespace hft;
namespace fs = std::filesystem;

namespace {

const fs::path kWork = fs::temp_directory_path() / "hftpr_cli_test";

int run(const std::string& args) {
  const std::string cmd = std::string(HFTPR_BIN) + " " + args + " > " + (kWork / "log.txt").string() + " 2>&1";
  return std::system(cmd.c_str());
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

struct Workdir {
  Workdir() {
    fs::remove_all(kWork);
    fs::create_directories(kWork);
  }
  ~Workdir() { fs::remove_all(kWork); }
};

std::string path(const std::string& rel) { return (kWork / rel).string(); }

}  // namespace

TEST_CASE("config echo round-trips") {
  hftpr::RunConfig c;
  CHECK(hftpr::parse_config(hftpr::format_config(c)) == c);

  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  for (int i = 0; i < 50; ++i) {
    c.seed = rng();
    c.beta = u(rng);
    c.rnoi = std::abs(u(rng)) / 7.0;
    c.tol = i % 2 ? std::optional<double>(u(rng) * 1e-9) : std::nullopt;
    c.mask_size = i % 3 ? std::optional<Index>(i) : std::nullopt;
    c.sweep_sizes = {static_cast<Index>(i), static_cast<Index>(i + 1)};
    c.exposure_scales = {u(rng), 1.0 / 3.0};
    c.frames = {"a b.png", "c.png"};
    c.input_is_intensity = i % 2 == 0;
    CHECK(hftpr::parse_config(hftpr::format_config(c)) == c);
  }
}

TEST_CASE("config parser rejects bad input") {
  CHECK_THROWS_AS(hftpr::parse_config("nope = 1\n"), InvalidInput);
  CHECK_THROWS_AS(hftpr::parse_config("r = two\n"), InvalidInput);
  CHECK_THROWS_AS(hftpr::parse_config("r 2\n"), InvalidInput);
  CHECK_THROWS_AS(hftpr::parse_config("seed = -1\n"), InvalidInput);
  const hftpr::RunConfig c = hftpr::parse_config("# comment\n\n r = 4  # trailing\nseed=18446744073709551615\n");
  CHECK(c.r == 4);
  CHECK(c.seed == 18446744073709551615ull);
}

TEST_CASE("simulate reproduces the golden tables") {
  Workdir w;
  REQUIRE(run("make-object --kind golden3x3 --out " + path("obj")) == 0);
  CHECK((read_cfld(kWork / "obj" / "object.cfld") == golden::matrix3x3()).all());

  REQUIRE(run("simulate --object " + path("obj/object.cfld") + " --r 1 --out " + path("r1")) == 0);
  const RealField s1 = fftshift(read_mag1(kWork / "r1" / "measurement.mag1").values());
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) CHECK(std::abs(s1(i, j) - golden::kShiftedFft[i][j]) <= 1e-3);
  }

  REQUIRE(run("simulate --object " + path("obj/object.cfld") + " --r 3 --out " + path("r3")) == 0);
  const RealField s3 = fftshift(read_mag1(kWork / "r3" / "measurement.mag1").values());
  for (int i = 0; i < 9; ++i) {
    for (int j = 0; j < 9; ++j) {
      const double want = (i == golden::kTypoRow && j == golden::kTypoCol) ? golden::kTypoCorrected
                                                                           : golden::kShiftedHftPrinted[i][j];
      CHECK(std::abs(s3(i, j) - want) <= 1e-3);
    }
  }
  CHECK(fs::exists(kWork / "r3" / "measurement_log.png"));
  CHECK(hftpr::load_config(path("r3/config.txt")).r == 3);

  REQUIRE(run("simulate --object " + path("obj/object.cfld") + " --r 3 --out " + path("r3b")) == 0);
  CHECK(slurp(kWork / "r3" / "measurement.mag1") == slurp(kWork / "r3b" / "measurement.mag1"));
}

TEST_CASE("flags override the config file and the echo is reusable") {
  Workdir w;
  REQUIRE(run("make-object --kind random --n 4 --seed 9 --out " + path("obj")) == 0);
  {
    std::ofstream cfg(kWork / "run.cfg");
    cfg << "object = " << path("obj/object.cfld") << "\nr = 2\nrnoi = 0.1\nseed = 3\n";
  }
  REQUIRE(run("simulate --config " + path("run.cfg") + " --seed 4 --out " + path("a")) == 0);
  const hftpr::RunConfig echo = hftpr::load_config(path("a/config.txt"));
  CHECK(echo.seed == 4);
  CHECK(echo.r == 2);
  CHECK(echo.rnoi == 0.1);

  REQUIRE(run("simulate --config " + path("a/config.txt") + " --out " + path("b")) == 0);
  CHECK(slurp(kWork / "a" / "measurement.mag1") == slurp(kWork / "b" / "measurement.mag1"));
}

TEST_CASE("reconstruct: early stop, determinism and alignment") {
  Workdir w;
  REQUIRE(run("make-object --kind random --n 6 --seed 1 --out " + path("obj")) == 0);
  REQUIRE(run("simulate --object " + path("obj/object.cfld") + " --r 4 --out " + path("sim")) == 0);
  const std::string base = "reconstruct --measurement " + path("sim/measurement.mag1") + " --r 4 ";

  REQUIRE(run(base + "--tol 1e300 --out " + path("stop")) == 0);
  const auto stop = nlohmann::json::parse(slurp(kWork / "stop" / "recon.json"));
  CHECK(stop["iterations"] == 1);
  CHECK(stop["converged"] == true);

  const std::string det = base + "--init random --seed 7 --max_iter 50 --truth " + path("obj/object.cfld");
  REQUIRE(run(det + " --out " + path("d1")) == 0);
  REQUIRE(run(det + " --out " + path("d2")) == 0);
  const auto j1 = nlohmann::json::parse(slurp(kWork / "d1" / "recon.json"));
  const auto j2 = nlohmann::json::parse(slurp(kWork / "d2" / "recon.json"));
  CHECK(j1["s_trace"] == j2["s_trace"]);
  CHECK(j1["s_trace"].size() == 50);
  CHECK(slurp(kWork / "d1" / "recon.cfld") == slurp(kWork / "d2" / "recon.cfld"));
  const auto al = nlohmann::json::parse(slurp(kWork / "d1" / "alignment.json"));
  CHECK(al["rel_error"].get<double>() >= 0.0);
  for (const char* f : {"recon_real.png", "recon_imag.png", "recon_phase.png"}) {
    CHECK(read_png_gray(kWork / "d1" / f).rows() == 6);
  }
}

TEST_CASE("simulate then reconstruct recovers a random object") {
  Workdir w;
  REQUIRE(run("make-object --kind random --n 8 --seed 5 --out " + path("obj")) == 0);
  REQUIRE(run("simulate --object " + path("obj/object.cfld") + " --r 6 --out " + path("sim")) == 0);
  REQUIRE(run("reconstruct --measurement " + path("sim/measurement.mag1") +
              " --r 6 --init random --restarts 5 --truth " + path("obj/object.cfld") + " --out " +
              path("rec")) == 0);
  const auto al = nlohmann::json::parse(slurp(kWork / "rec" / "alignment.json"));
  CHECK(al["rel_error"].get<double>() <= 5e-2);
}

TEST_CASE("sweep and mix write their outputs") {
  Workdir w;
  REQUIRE(run("make-object --kind random --n 4 --seed 2 --out " + path("obj")) == 0);
  REQUIRE(run("simulate --object " + path("obj/object.cfld") + " --r 4 --out " + path("sim")) == 0);
  REQUIRE(run("sweep --measurement " + path("sim/measurement.mag1") +
              " --r 4 --sweep_sizes 3,4,5 --sweep_runs 2 --max_iter 20 --out " + path("sw")) == 0);
  std::stringstream csv(slurp(kWork / "sw" / "sweep.csv"));
  std::string line;
  std::getline(csv, line);
  CHECK(line == "size,mean_log_S,runs");
  int rows = 0;
  while (std::getline(csv, line)) ++rows;
  CHECK(rows == 3);

  REQUIRE(run("make-object --kind random --n 4 --seed 3 --out " + path("obj2")) == 0);
  REQUIRE(run("mix --object " + path("obj/object.cfld") + " --object2 " + path("obj2/object.cfld") +
              " --r 3 --out " + path("mix")) == 0);
  const ComplexField mix = read_cfld(kWork / "mix" / "mix.cfld");
  const ComplexField direct = phase_mix(read_cfld(kWork / "obj" / "object.cfld"),
                                        read_cfld(kWork / "obj2" / "object.cfld"), SamplingConfig(4, 4, 3));
  CHECK((mix - direct).abs().maxCoeff() < 1e-12);
  CHECK(read_png_gray(kWork / "mix" / "mix_imag.png").rows() == 4);
}

TEST_CASE("ingest builds a measurement with provenance") {
  Workdir w;
  RealField truth(8, 8);
  for (Index i = 0; i < 8; ++i) {
    for (Index j = 0; j < 8; ++j) truth(i, j) = 300.0 + 1000.0 * static_cast<double>(i * 8 + j);
  }
  write_png16(kWork / "f1.png", truth.min(65535.0));
  write_png16(kWork / "f10.png", (truth / 10.0).round());
  REQUIRE(run("ingest --frames " + path("f1.png") + "," + path("f10.png") +
              " --exposure_scales 1,10 --bin_factor 2 --out " + path("ing")) == 0);
  const Measurement m = read_mag1(kWork / "ing" / "measurement.mag1");
  CHECK(m.rows() == 4);
  const RealField expect = bin_average(truth, 2).sqrt();
  CHECK(((m.values() - expect).abs() / expect).maxCoeff() < 0.01);
  const auto prov = nlohmann::json::parse(slurp(kWork / "ing" / "provenance.json"));
  CHECK(prov["input_sha256"][0] == sha256_file(path("f1.png")));
  CHECK(prov["output_shape"] == nlohmann::json({4, 4}));

  REQUIRE(run("ingest --frames " + path("f1.png") + " --target 3 --out " + path("tgt")) == 0);
  CHECK(read_mag1(kWork / "tgt" / "measurement.mag1").rows() == 3);
}

TEST_CASE("errors give a nonzero exit") {
  Workdir w;
  CHECK(run("simulate --object " + path("missing.cfld") + " --out " + path("x")) != 0);
  CHECK(run("simulate --out " + path("x")) != 0);
  CHECK(run("reconstruct --measurement " + path("missing.mag1") + " --out " + path("x")) != 0);
  CHECK(run("simulate --r notanumber --out " + path("x")) != 0);
  CHECK(run("bogus") != 0);
  CHECK(run("") != 0);
  REQUIRE(run("make-object --kind golden3x3 --out " + path("obj")) == 0);
  REQUIRE(run("simulate --object " + path("obj/object.cfld") + " --r 3 --out " + path("sim")) == 0);
  CHECK(run("reconstruct --measurement " + path("sim/measurement.mag1") + " --r 2 --out " + path("x")) != 0);
  CHECK(run("reconstruct --measurement " + path("sim/measurement.mag1") + " --r 3 --mask_shape circle --out " +
            path("x")) != 0);
}

TEST_CASE("text shape") {
  const BoolGrid s = hftpr::text_shape("CTHULHU", 32);
  CHECK(s.count() == 9 + 7 + 11 + 11 + 7 + 11 + 11);
  CHECK_THROWS_AS(hftpr::text_shape("CTHULHU", 20), InvalidInput);
  CHECK_THROWS_AS(hftpr::text_shape("X", 8), InvalidInput);
}
