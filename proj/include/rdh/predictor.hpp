#pragma once

#include <cstdint>

#include "rdh/image.hpp"

namespace rdh {

// Reduced fraction with positive denominator.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;
  friend bool operator==(const Fraction&, const Fraction&) = default;
};

// Adaptive weights of the four cross neighbors, kept as exact integer
// numerators over a common denominator. Numerators always sum to den, so
// the weights sum to exactly 1. Embedder and extractor must agree bit for
// bit, which rules out floating point here.
struct NeighborWeights {
  std::int64_t num_up = 1;
  std::int64_t num_down = 1;
  std::int64_t num_left = 1;
  std::int64_t num_right = 1;
  std::int64_t den = 4;

  Fraction up() const;
  Fraction down() const;
  Fraction left() const;
  Fraction right() const;
};

// Floored mean of the four cross neighbors.
int neighbor_mean(const GrayImage& img, Coord c);

// w_i proportional to 1 / (1 + |mean - neighbor_i|); an equidistant
// neighborhood yields the uniform 1/4 weights.
NeighborWeights weights(const GrayImage& img, Coord c);

// Floor of the exact weighted neighbor sum; always within
// [min(neighbors), max(neighbors)] and therefore in [0, 255].
int predict(const GrayImage& img, Coord c);

// e = pixel - predicted, in [-255, 255].
int prediction_error(const GrayImage& img, Coord c);

}  // namespace rdh
