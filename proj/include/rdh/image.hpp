#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rdh/errors.hpp"

namespace rdh {

// Pixel coordinate: u is the row, v is the column.
struct Coord {
  int u = 0;
  int v = 0;
  friend bool operator==(const Coord&, const Coord&) = default;
};

// Checkerboard sub-image: A holds pixels with even u+v, B the odd ones.
enum class ParitySet : std::uint8_t { A, B };

constexpr ParitySet parity_of(Coord c) noexcept {
  return ((c.u + c.v) % 2 == 0) ? ParitySet::A : ParitySet::B;
}

constexpr ParitySet opposite(ParitySet s) noexcept {
  return s == ParitySet::A ? ParitySet::B : ParitySet::A;
}

const char* to_string(ParitySet s) noexcept;

// 8-bit grayscale image, row-major. Immutable in spirit: the embedding and
// recovery pipelines copy, then mutate their own working image.
class GrayImage {
 public:
  // Smallest supported size is 5x5; below that no pixel has a defined
  // fluctuation value.
  static constexpr int kMinSide = 5;

  GrayImage(int width, int height, std::vector<std::uint8_t> pixels);
  static GrayImage filled(int width, int height, std::uint8_t value);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  std::int64_t pixel_count() const noexcept {
    return static_cast<std::int64_t>(width_) * height_;
  }

  bool in_bounds(Coord c) const noexcept {
    return c.u >= 0 && c.u < height_ && c.v >= 0 && c.v < width_;
  }

  std::uint8_t at(Coord c) const {
    require_inside(c);
    return pixels_[index(c)];
  }
  std::uint8_t at(int u, int v) const { return at(Coord{u, v}); }

  void set(Coord c, std::uint8_t value) {
    require_inside(c);
    pixels_[index(c)] = value;
  }

  std::span<const std::uint8_t> pixels() const noexcept { return pixels_; }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  std::size_t index(Coord c) const noexcept {
    return static_cast<std::size_t>(c.u) * width_ + c.v;
  }
  void require_inside(Coord c) const;

  int width_;
  int height_;
  std::vector<std::uint8_t> pixels_;
};

// True iff all four cross neighbors (up, down, left, right) are in-image.
constexpr bool has_cross_neighbors(Coord c, int width, int height) noexcept {
  return c.u >= 1 && c.u <= height - 2 && c.v >= 1 && c.v <= width - 2;
}

inline bool has_cross_neighbors(const GrayImage& img, Coord c) noexcept {
  return has_cross_neighbors(c, img.width(), img.height());
}

// Bounds-checked parity lookup.
ParitySet parity_at(const GrayImage& img, Coord c);

// Raster-ordered (row-major) interior coordinates of one parity set.
// Border pixels never appear and are never modified by any operation here.
std::vector<Coord> processable_coords(const GrayImage& img, ParitySet s);

}  // namespace rdh
