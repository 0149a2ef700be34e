#include "hft/field_io.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

namespace hft {

Measurement::Measurement(RealField a) : a_(std::move(a)) {
  if (a_.size() == 0) throw InvalidInput("Measurement: empty grid");
  if (!all_finite(a_)) throw InvalidInput("Measurement: non-finite magnitude");
  if ((a_ < 0.0).any()) throw InvalidInput("Measurement: negative magnitude");
}

namespace {

constexpr const char* kFieldMagic = "CFLD1";
constexpr const char* kMagMagic = "MAG1";

static_assert(std::numeric_limits<double>::is_iec559);

void write_doubles(std::ostream& os, const double* data, size_t count) {
  if constexpr (std::endian::native == std::endian::little) {
    os.write(reinterpret_cast<const char*>(data), static_cast<std::streamsize>(count * sizeof(double)));
  } else {
    for (size_t i = 0; i < count; ++i) {
      auto bits = std::bit_cast<uint64_t>(data[i]);
      bits = __builtin_bswap64(bits);
      os.write(reinterpret_cast<const char*>(&bits), sizeof bits);
    }
  }
}

void read_doubles(std::istream& is, double* data, size_t count) {
  is.read(reinterpret_cast<char*>(data), static_cast<std::streamsize>(count * sizeof(double)));
  if (static_cast<size_t>(is.gcount()) != count * sizeof(double)) {
    throw InvalidInput("grid file: truncated payload");
  }
  if constexpr (std::endian::native != std::endian::little) {
    for (size_t i = 0; i < count; ++i) {
      data[i] = std::bit_cast<double>(__builtin_bswap64(std::bit_cast<uint64_t>(data[i])));
    }
  }
}

void write_header(std::ostream& os, const char* magic, Index rows, Index cols, const char* dtype) {
  nlohmann::ordered_json h;
  h["magic"] = magic;
  h["rows"] = rows;
  h["cols"] = cols;
  h["dtype"] = dtype;
  os << h.dump() << '\n';
}

struct Header {
  Index rows;
  Index cols;
};

Header read_header(std::istream& is, const char* magic, const char* dtype) {
  std::string line;
  if (!std::getline(is, line)) throw InvalidInput("grid file: missing header line");
  nlohmann::json h;
  try {
    h = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("grid file: bad header: ") + e.what());
  }
  if (!h.is_object() || h.value("magic", "") != magic) {
    throw InvalidInput(std::string("grid file: expected magic ") + magic);
  }
  if (h.value("dtype", "") != dtype) {
    throw InvalidInput(std::string("grid file: expected dtype ") + dtype);
  }
  if (!h.contains("rows") || !h.contains("cols") || !h["rows"].is_number_integer() ||
      !h["cols"].is_number_integer()) {
    throw InvalidInput("grid file: rows/cols missing");
  }
  const Header out{h["rows"].get<Index>(), h["cols"].get<Index>()};
  if (out.rows < 1 || out.cols < 1) throw InvalidInput("grid file: nonpositive dimensions");
  return out;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw InvalidInput("cannot open for writing: " + path.string());
  return os;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw InvalidInput("cannot open: " + path.string());
  return is;
}

}  // namespace

void write_cfld(std::ostream& os, const ComplexField& field) {
  if (!all_finite(field)) throw InvalidInput("CFLD: non-finite sample");
  write_header(os, kFieldMagic, field.rows(), field.cols(), "c128le");
  write_doubles(os, reinterpret_cast<const double*>(field.data()), static_cast<size_t>(field.size()) * 2);
}

ComplexField read_cfld(std::istream& is) {
  const Header h = read_header(is, kFieldMagic, "c128le");
  ComplexField field(h.rows, h.cols);
  read_doubles(is, reinterpret_cast<double*>(field.data()), static_cast<size_t>(field.size()) * 2);
  if (!all_finite(field)) throw InvalidInput("CFLD: non-finite sample");
  return field;
}

void write_mag1(std::ostream& os, const Measurement& m) {
  write_header(os, kMagMagic, m.rows(), m.cols(), "f64le");
  write_doubles(os, m.values().data(), static_cast<size_t>(m.values().size()));
}

Measurement read_mag1(std::istream& is) {
  const Header h = read_header(is, kMagMagic, "f64le");
  RealField a(h.rows, h.cols);
  read_doubles(is, a.data(), static_cast<size_t>(a.size()));
  return Measurement(std::move(a));
}

void write_cfld(const std::filesystem::path& path, const ComplexField& field) {
  auto os = open_out(path);
  write_cfld(os, field);
  if (!os) throw InvalidInput("write failed: " + path.string());
}

ComplexField read_cfld(const std::filesystem::path& path) {
  auto is = open_in(path);
  return read_cfld(is);
}

void write_mag1(const std::filesystem::path& path, const Measurement& m) {
  auto os = open_out(path);
  write_mag1(os, m);
  if (!os) throw InvalidInput("write failed: " + path.string());
}

Measurement read_mag1(const std::filesystem::path& path) {
  auto is = open_in(path);
  return read_mag1(is);
}

}  // namespace hft
