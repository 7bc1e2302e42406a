#pragma once

#include <vector>

#include "rdh/image.hpp"

namespace rdh {

// Per-pixel smoothness score. Lower F means a smoother neighborhood and
// higher embedding priority. raster_index is the coordinate's position in
// processable_coords and breaks ties in the ascending sort.
struct FluctuationRecord {
  Coord coord;
  int fluctuation = 0;
  int raster_index = 0;
  friend bool operator==(const FluctuationRecord&,
                         const FluctuationRecord&) = default;
};

// Local complexity of the cross neighborhood, in [0, 1530]. Reads only the
// four cross neighbors, which all lie in the opposite parity set.
int local_complexity(const GrayImage& img, Coord c);

// Fluctuation F in [0, 3060]: the pixel's own complexity plus the floored
// mean complexity of its interior diagonal neighbors (the nearest pixels of
// the same parity). Depends only on opposite-parity pixel values, so
// embedding into a set never disturbs that set's own fluctuation values.
int fluctuation(const GrayImage& img, Coord c);

// All records of the set, sorted by ascending F; ties keep raster order.
std::vector<FluctuationRecord> fluctuation_order(const GrayImage& img,
                                                 ParitySet s);

}  // namespace rdh
