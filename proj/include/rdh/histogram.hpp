#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "rdh/image.hpp"

namespace rdh {

// Integer-binned prediction-error histogram for one parity set.
class ErrorHistogram {
 public:
  static constexpr int kMinBin = -255;
  static constexpr int kMaxBin = 255;

  void add(int error);
  std::int64_t count(int bin) const;
  std::int64_t total() const noexcept { return total_; }
  int nonzero_bin_count() const noexcept { return nonzero_bins_; }

  friend bool operator==(const ErrorHistogram&,
                         const ErrorHistogram&) = default;

 private:
  std::size_t slot(int bin) const;

  std::array<std::int64_t, kMaxBin - kMinBin + 1> counts_{};
  std::int64_t total_ = 0;
  int nonzero_bins_ = 0;
};

// Selected double peaks and their flanking zero points.
// Invariants: pk1 != pk2, |pk1 - pk2| = 1, z1 < min(pk1,pk2) < max(pk1,pk2)
// < z2, and both z bins were empty in the histogram they came from.
struct PeakZeroParams {
  int pk1 = 0;
  int pk2 = 0;
  int z1 = 0;
  int z2 = 0;

  int min_peak() const noexcept { return pk1 < pk2 ? pk1 : pk2; }
  int max_peak() const noexcept { return pk1 > pk2 ? pk1 : pk2; }
  std::int64_t peak_capacity(const ErrorHistogram& h) const {
    return h.count(pk1) + h.count(pk2);
  }

  friend bool operator==(const PeakZeroParams&,
                         const PeakZeroParams&) = default;
};

// Shape check used when accepting params from metadata.
bool params_well_formed(const PeakZeroParams& p) noexcept;

ErrorHistogram build_peh(const GrayImage& img, ParitySet s);
ErrorHistogram build_peh(const GrayImage& img, std::span<const Coord> coords);

// Peaks are the two highest-count bins (ties: smaller |bin|, then smaller
// bin). When the top two are not adjacent, falls back to the adjacent pair
// with the highest combined count (ties: nearer zero, then leftmost); the
// shift ranges of non-adjacent peaks would collide with the decode
// positions. Zero points are the empty bins nearest each side of the peak
// span. Throws CapacityError when fewer than two bins are occupied or a
// flank has no empty bin.
PeakZeroParams select_peaks_zeros(const ErrorHistogram& h);

}  // namespace rdh
