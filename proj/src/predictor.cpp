#include "rdh/predictor.hpp"

#include <array>
#include <cstdlib>
#include <numeric>

namespace rdh {
namespace {

struct CrossNeighbors {
  // Order: up, down, left, right.
  std::array<int, 4> values;
};

CrossNeighbors cross_neighbors(const GrayImage& img, Coord c) {
  if (!has_cross_neighbors(img, c)) {
    throw BoundsError("pixel (" + std::to_string(c.u) + "," +
                      std::to_string(c.v) +
                      ") lacks one or more cross neighbors");
  }
  return CrossNeighbors{{img.at(c.u - 1, c.v), img.at(c.u + 1, c.v),
                         img.at(c.u, c.v - 1), img.at(c.u, c.v + 1)}};
}

NeighborWeights weights_of(const CrossNeighbors& nb) {
  const int mean = (nb.values[0] + nb.values[1] + nb.values[2] + nb.values[3]) / 4;
  // q_i = 1 + |mean - n_i|; weight_i = (prod of other q) / (sum over i of
  // prod of other q). The all-equal case collapses to 1/4 each.
  std::array<std::int64_t, 4> q{};
  for (int i = 0; i < 4; ++i) q[i] = 1 + std::abs(mean - nb.values[i]);
  std::array<std::int64_t, 4> num{};
  for (int i = 0; i < 4; ++i) {
    num[i] = 1;
    for (int j = 0; j < 4; ++j) {
      if (j != i) num[i] *= q[j];
    }
  }
  NeighborWeights w;
  w.num_up = num[0];
  w.num_down = num[1];
  w.num_left = num[2];
  w.num_right = num[3];
  w.den = num[0] + num[1] + num[2] + num[3];
  return w;
}

Fraction reduced(std::int64_t num, std::int64_t den) {
  const std::int64_t g = std::gcd(num, den);
  return Fraction{num / g, den / g};
}

}  // namespace

Fraction NeighborWeights::up() const { return reduced(num_up, den); }
Fraction NeighborWeights::down() const { return reduced(num_down, den); }
Fraction NeighborWeights::left() const { return reduced(num_left, den); }
Fraction NeighborWeights::right() const { return reduced(num_right, den); }

int neighbor_mean(const GrayImage& img, Coord c) {
  const CrossNeighbors nb = cross_neighbors(img, c);
  return (nb.values[0] + nb.values[1] + nb.values[2] + nb.values[3]) / 4;
}

NeighborWeights weights(const GrayImage& img, Coord c) {
  return weights_of(cross_neighbors(img, c));
}

int predict(const GrayImage& img, Coord c) {
  const CrossNeighbors nb = cross_neighbors(img, c);
  const NeighborWeights w = weights_of(nb);
  const std::int64_t sum = w.num_up * nb.values[0] + w.num_down * nb.values[1] +
                           w.num_left * nb.values[2] +
                           w.num_right * nb.values[3];
  return static_cast<int>(sum / w.den);
}

int prediction_error(const GrayImage& img, Coord c) {
  return img.at(c) - predict(img, c);
}

}  // namespace rdh
