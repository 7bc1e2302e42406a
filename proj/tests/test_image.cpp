#include <doctest.h>

#include <set>

#include "rdh/image.hpp"
#include "support/corpus.hpp"

using namespace rdh;

TEST_CASE("parity follows the even/odd checkerboard convention") {
  CHECK(parity_of(Coord{0, 0}) == ParitySet::A);
  CHECK(parity_of(Coord{0, 1}) == ParitySet::B);
  CHECK(parity_of(Coord{3, 5}) == ParitySet::A);
  CHECK(opposite(ParitySet::A) == ParitySet::B);

  const GrayImage img = GrayImage::filled(8, 8, 10);
  CHECK(parity_at(img, Coord{1, 2}) == ParitySet::B);
  CHECK_THROWS_AS(parity_at(img, Coord{8, 0}), BoundsError);
  CHECK_THROWS_AS(parity_at(img, Coord{0, -1}), BoundsError);
}

TEST_CASE("cross-neighbor test matches the interior band") {
  CHECK_FALSE(has_cross_neighbors(Coord{0, 3}, 512, 512));
  CHECK(has_cross_neighbors(Coord{1, 1}, 512, 512));
  CHECK(has_cross_neighbors(Coord{510, 510}, 512, 512));
  CHECK_FALSE(has_cross_neighbors(Coord{511, 5}, 512, 512));
  CHECK_FALSE(has_cross_neighbors(Coord{5, 0}, 512, 512));
}

TEST_CASE("5x5 processable coords, frozen from direct enumeration") {
  const GrayImage img = GrayImage::filled(5, 5, 0);
  const std::vector<Coord> a = processable_coords(img, ParitySet::A);
  const std::vector<Coord> b = processable_coords(img, ParitySet::B);
  CHECK(a == std::vector<Coord>{{1, 1}, {1, 3}, {2, 2}, {3, 1}, {3, 3}});
  CHECK(b == std::vector<Coord>{{1, 2}, {2, 1}, {2, 3}, {3, 2}});
}

TEST_CASE("the two sets partition the interior exactly") {
  for (const auto [w, h] : {std::pair{5, 5}, {6, 9}, {13, 7}, {32, 32}}) {
    const GrayImage img = corpus::noise_image(7, w, h);
    const auto a = processable_coords(img, ParitySet::A);
    const auto b = processable_coords(img, ParitySet::B);
    CHECK(a.size() + b.size() ==
          static_cast<std::size_t>((w - 2) * (h - 2)));

    std::set<std::pair<int, int>> seen;
    for (const auto& list : {a, b}) {
      int prev_u = -1, prev_v = -1;
      for (const Coord& c : list) {
        CHECK(has_cross_neighbors(img, c));
        CHECK(seen.insert({c.u, c.v}).second);  // no duplicates across sets
        // raster order within the list
        CHECK((c.u > prev_u || (c.u == prev_u && c.v > prev_v)));
        prev_u = c.u;
        prev_v = c.v;
      }
    }
    // pure function of dims and parity
    CHECK(processable_coords(img, ParitySet::A) == a);
  }
}

TEST_CASE("image construction validates size and bounds") {
  CHECK_THROWS_AS(GrayImage::filled(4, 10, 0), FormatError);
  CHECK_THROWS_AS(GrayImage(5, 5, std::vector<std::uint8_t>(24, 0)),
                  FormatError);
  const GrayImage img = GrayImage::filled(5, 6, 200);
  CHECK(img.pixel_count() == 30);
  CHECK_THROWS_AS(img.at(5, 5), BoundsError);
  CHECK(img.at(4, 4) == 200);
}
