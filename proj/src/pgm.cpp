#include "rdh/pgm.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <string>

namespace rdh {
namespace {

class Cursor {
 public:
  explicit Cursor(std::span<const std::uint8_t> data) : data_(data) {}

  // Skips whitespace and '#' comments running to end of line.
  void skip_separators() {
    while (pos_ < data_.size()) {
      const char c = static_cast<char>(data_[pos_]);
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '#') {
        while (pos_ < data_.size() && data_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  int read_number() {
    skip_separators();
    if (pos_ >= data_.size() ||
        !std::isdigit(static_cast<unsigned char>(data_[pos_]))) {
      throw FormatError("pgm: expected a decimal number in the header");
    }
    long value = 0;
    while (pos_ < data_.size() &&
           std::isdigit(static_cast<unsigned char>(data_[pos_]))) {
      value = value * 10 + (data_[pos_] - '0');
      if (value > std::numeric_limits<int>::max()) {
        throw FormatError("pgm: header number out of range");
      }
      ++pos_;
    }
    return static_cast<int>(value);
  }

  // The single whitespace byte separating the header from raster data.
  void expect_single_whitespace() {
    if (pos_ >= data_.size() ||
        !std::isspace(static_cast<unsigned char>(data_[pos_]))) {
      throw FormatError("pgm: missing whitespace before raster data");
    }
    ++pos_;
  }

  std::span<const std::uint8_t> rest() const { return data_.subspan(pos_); }
  bool starts_with(const char* magic) {
    const std::size_t n = std::char_traits<char>::length(magic);
    if (data_.size() < n) return false;
    for (std::size_t i = 0; i < n; ++i) {
      if (static_cast<char>(data_[i]) != magic[i]) return false;
    }
    pos_ = n;
    return true;
  }

 private:
  std::span<const std::uint8_t> data_;
  std::size_t pos_ = 0;
};

}  // namespace

GrayImage parse_pgm(std::span<const std::uint8_t> data) {
  Cursor cur(data);
  if (!cur.starts_with("P5")) {
    throw FormatError("pgm: not a binary PGM (magic P5)");
  }
  const int width = cur.read_number();
  const int height = cur.read_number();
  const int maxval = cur.read_number();
  if (maxval != 255) {
    throw FormatError("pgm: maxval must be exactly 255, got " +
                      std::to_string(maxval));
  }
  cur.expect_single_whitespace();

  const auto raster = cur.rest();
  const std::size_t expected =
      static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  if (raster.size() != expected) {
    throw FormatError("pgm: raster holds " + std::to_string(raster.size()) +
                      " bytes, header declares " + std::to_string(expected));
  }
  return GrayImage(width, height,
                   std::vector<std::uint8_t>(raster.begin(), raster.end()));
}

std::vector<std::uint8_t> serialize_pgm(const GrayImage& img) {
  const std::string header = "P5\n" + std::to_string(img.width()) + " " +
                             std::to_string(img.height()) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), img.pixels().begin(), img.pixels().end());
  return out;
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path.string());
  std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)),
                                 std::istreambuf_iterator<char>());
  if (in.bad()) throw FormatError("read failed on " + path.string());
  return data;
}

void write_file(const std::filesystem::path& path,
                std::span<const std::uint8_t> data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FormatError("cannot create " + path.string());
  out.write(reinterpret_cast<const char*>(data.data()),
            static_cast<std::streamsize>(data.size()));
  if (!out) throw FormatError("write failed on " + path.string());
}

GrayImage read_pgm(const std::filesystem::path& path) {
  try {
    return parse_pgm(read_file(path));
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_pgm(const std::filesystem::path& path, const GrayImage& img) {
  write_file(path, serialize_pgm(img));
}

}  // namespace rdh
