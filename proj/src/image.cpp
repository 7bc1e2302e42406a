#include "rdh/image.hpp"

#include <string>

namespace rdh {

const char* to_string(ParitySet s) noexcept {
  return s == ParitySet::A ? "A" : "B";
}

GrayImage::GrayImage(int width, int height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  if (width_ < kMinSide || height_ < kMinSide) {
    throw FormatError("image must be at least 5x5, got " +
                      std::to_string(width_) + "x" + std::to_string(height_));
  }
  if (pixels_.size() != static_cast<std::size_t>(pixel_count())) {
    throw FormatError("pixel buffer size " + std::to_string(pixels_.size()) +
                      " does not match " + std::to_string(width_) + "x" +
                      std::to_string(height_));
  }
}

GrayImage GrayImage::filled(int width, int height, std::uint8_t value) {
  if (width < kMinSide || height < kMinSide) {
    throw FormatError("image must be at least 5x5");
  }
  return GrayImage(width, height,
                   std::vector<std::uint8_t>(
                       static_cast<std::size_t>(width) * height, value));
}

void GrayImage::require_inside(Coord c) const {
  if (!in_bounds(c)) {
    throw BoundsError("coordinate (" + std::to_string(c.u) + "," +
                      std::to_string(c.v) + ") outside " +
                      std::to_string(width_) + "x" + std::to_string(height_));
  }
}

ParitySet parity_at(const GrayImage& img, Coord c) {
  if (!img.in_bounds(c)) {
    throw BoundsError("coordinate (" + std::to_string(c.u) + "," +
                      std::to_string(c.v) + ") outside image");
  }
  return parity_of(c);
}

std::vector<Coord> processable_coords(const GrayImage& img, ParitySet s) {
  std::vector<Coord> coords;
  const int h = img.height();
  const int w = img.width();
  coords.reserve(static_cast<std::size_t>(h - 2) * (w - 2) / 2 + 1);
  for (int u = 1; u <= h - 2; ++u) {
    // First column of the requested parity in this row.
    int v = ((u + 1) % 2 == (s == ParitySet::A ? 0 : 1)) ? 1 : 2;
    for (; v <= w - 2; v += 2) {
      coords.push_back(Coord{u, v});
    }
  }
  return coords;
}

}  // namespace rdh
