#include "rdh/histogram.hpp"

#include <cstdlib>
#include <optional>

#include "rdh/predictor.hpp"

namespace rdh {

std::size_t ErrorHistogram::slot(int bin) const {
  if (bin < kMinBin || bin > kMaxBin) {
    throw BoundsError("error bin " + std::to_string(bin) +
                      " outside [-255, 255]");
  }
  return static_cast<std::size_t>(bin - kMinBin);
}

void ErrorHistogram::add(int error) {
  auto& c = counts_[slot(error)];
  if (c == 0) ++nonzero_bins_;
  ++c;
  ++total_;
}

std::int64_t ErrorHistogram::count(int bin) const { return counts_[slot(bin)]; }

bool params_well_formed(const PeakZeroParams& p) noexcept {
  return p.pk1 != p.pk2 && std::abs(p.pk1 - p.pk2) == 1 &&
         p.z1 < p.min_peak() && p.z2 > p.max_peak() &&
         p.z1 >= ErrorHistogram::kMinBin && p.z2 <= ErrorHistogram::kMaxBin;
}

ErrorHistogram build_peh(const GrayImage& img, ParitySet s) {
  const std::vector<Coord> coords = processable_coords(img, s);
  return build_peh(img, coords);
}

ErrorHistogram build_peh(const GrayImage& img, std::span<const Coord> coords) {
  ErrorHistogram h;
  for (const Coord& c : coords) h.add(prediction_error(img, c));
  return h;
}

namespace {

// Peak preference: higher count, then smaller |bin|, then smaller bin.
bool better_peak(const ErrorHistogram& h, int a, int b) {
  const auto ca = h.count(a);
  const auto cb = h.count(b);
  if (ca != cb) return ca > cb;
  if (std::abs(a) != std::abs(b)) return std::abs(a) < std::abs(b);
  return a < b;
}

}  // namespace

PeakZeroParams select_peaks_zeros(const ErrorHistogram& h) {
  constexpr int kLo = ErrorHistogram::kMinBin;
  constexpr int kHi = ErrorHistogram::kMaxBin;

  if (h.nonzero_bin_count() < 2) {
    throw CapacityError(
        "prediction-error histogram has fewer than two occupied bins");
  }

  std::optional<int> top1;
  std::optional<int> top2;
  for (int bin = kLo; bin <= kHi; ++bin) {
    if (h.count(bin) == 0) continue;
    if (!top1 || better_peak(h, bin, *top1)) {
      top2 = top1;
      top1 = bin;
    } else if (!top2 || better_peak(h, bin, *top2)) {
      top2 = bin;
    }
  }

  int pk1;
  int pk2;
  if (std::abs(*top1 - *top2) == 1) {
    pk1 = *top1;
    pk2 = *top2;
  } else {
    // Fall back to the adjacent pair with the highest combined count;
    // ties prefer the pair nearer zero, then the leftmost.
    std::optional<int> best;
    auto better_pair = [&](int a, int b) {
      const auto ca = h.count(a) + h.count(a + 1);
      const auto cb = h.count(b) + h.count(b + 1);
      if (ca != cb) return ca > cb;
      const int da = std::min(std::abs(a), std::abs(a + 1));
      const int db = std::min(std::abs(b), std::abs(b + 1));
      if (da != db) return da < db;
      return a < b;
    };
    for (int bin = kLo; bin < kHi; ++bin) {
      if (h.count(bin) + h.count(bin + 1) == 0) continue;
      if (!best || better_pair(bin, *best)) best = bin;
    }
    pk1 = better_peak(h, *best, *best + 1) ? *best : *best + 1;
    pk2 = (pk1 == *best) ? *best + 1 : *best;
  }

  const int min_pk = std::min(pk1, pk2);
  const int max_pk = std::max(pk1, pk2);

  std::optional<int> z1;
  for (int bin = min_pk - 1; bin >= kLo; --bin) {
    if (h.count(bin) == 0) {
      z1 = bin;
      break;
    }
  }
  std::optional<int> z2;
  for (int bin = max_pk + 1; bin <= kHi; ++bin) {
    if (h.count(bin) == 0) {
      z2 = bin;
      break;
    }
  }
  if (!z1 || !z2) {
    throw CapacityError("no empty histogram bin flanks the peaks within "
                        "[-255, 255]; the image cannot host a lossless shift");
  }

  return PeakZeroParams{pk1, pk2, *z1, *z2};
}

}  // namespace rdh
