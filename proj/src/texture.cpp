#include "rdh/texture.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>

namespace rdh {
namespace {

void require_cross_neighbors(const GrayImage& img, Coord c) {
  if (!has_cross_neighbors(img, c)) {
    throw BoundsError("pixel (" + std::to_string(c.u) + "," +
                      std::to_string(c.v) +
                      ") lacks one or more cross neighbors");
  }
}

int complexity_unchecked(const GrayImage& img, Coord c) {
  const int a = img.at(c.u - 1, c.v);  // upper
  const int b = img.at(c.u, c.v - 1);  // left
  const int r = img.at(c.u, c.v + 1);  // right
  const int d = img.at(c.u + 1, c.v);  // lower
  return std::abs(a - d) + std::abs(b - r) + std::abs(a + r - b - d) +
         std::abs(r + d - a - b);
}

constexpr std::array<Coord, 4> kDiagonalOffsets = {
    Coord{-1, -1}, Coord{-1, 1}, Coord{1, -1}, Coord{1, 1}};

}  // namespace

int local_complexity(const GrayImage& img, Coord c) {
  require_cross_neighbors(img, c);
  return complexity_unchecked(img, c);
}

int fluctuation(const GrayImage& img, Coord c) {
  require_cross_neighbors(img, c);
  const int own = complexity_unchecked(img, c);
  int sum = 0;
  int n = 0;
  for (const Coord& off : kDiagonalOffsets) {
    const Coord d{c.u + off.u, c.v + off.v};
    if (has_cross_neighbors(img, d)) {
      sum += complexity_unchecked(img, d);
      ++n;
    }
  }
  return n == 0 ? own : own + sum / n;
}

std::vector<FluctuationRecord> fluctuation_order(const GrayImage& img,
                                                 ParitySet s) {
  const std::vector<Coord> coords = processable_coords(img, s);

  // Complexity cache for the set's interior coords; the diagonal neighbors
  // consulted below are interior coords of the same parity, so every lookup
  // hits the cache.
  std::vector<int> omega(static_cast<std::size_t>(img.width()) * img.height(),
                         -1);
  auto slot = [&](Coord c) -> int& {
    return omega[static_cast<std::size_t>(c.u) * img.width() + c.v];
  };
  for (const Coord& c : coords) slot(c) = complexity_unchecked(img, c);

  std::vector<FluctuationRecord> records;
  records.reserve(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const Coord c = coords[i];
    int sum = 0;
    int n = 0;
    for (const Coord& off : kDiagonalOffsets) {
      const Coord d{c.u + off.u, c.v + off.v};
      if (has_cross_neighbors(img, d)) {
        sum += slot(d);
        ++n;
      }
    }
    const int f = n == 0 ? slot(c) : slot(c) + sum / n;
    records.push_back({c, f, static_cast<int>(i)});
  }

  std::stable_sort(records.begin(), records.end(),
                   [](const FluctuationRecord& lhs,
                      const FluctuationRecord& rhs) {
                     return lhs.fluctuation < rhs.fluctuation;
                   });
  return records;
}

}  // namespace rdh
