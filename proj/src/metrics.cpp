#include "rdh/metrics.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "rdh/predictor.hpp"

namespace rdh {

double mse(const GrayImage& a, const GrayImage& b) {
  if (a.width() != b.width() || a.height() != b.height()) {
    throw FormatError("mse: image dimensions differ");
  }
  const auto pa = a.pixels();
  const auto pb = b.pixels();
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < pa.size(); ++i) {
    const std::int64_t d = static_cast<int>(pa[i]) - static_cast<int>(pb[i]);
    sum += d * d;
  }
  return static_cast<double>(sum) / static_cast<double>(pa.size());
}

double psnr(const GrayImage& a, const GrayImage& b) {
  const double m = mse(a, b);
  if (m == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(255.0 * 255.0 / m);
}

std::pair<double, double> mse_decomposition(const EmbedStats& stats,
                                            int width, int height) {
  const double n = static_cast<double>(width) * height;
  return {static_cast<double>(stats.valid_shift_count) / n,
          static_cast<double>(stats.isp_count) / n};
}

namespace {

std::string render_db(double value) {
  if (std::isinf(value)) return "inf";
  std::ostringstream os;
  os.precision(6);
  os << std::fixed << value;
  return os.str();
}

std::string render(double value) {
  std::ostringstream os;
  os.precision(12);
  os << value;
  return os.str();
}

}  // namespace

std::string QualityReport::to_text() const {
  std::ostringstream os;
  os << "payload_bits: " << payload_bits << "\n"
     << "bpp: " << render(bpp) << "\n"
     << "valid_shift_count: " << valid_shift_count << "\n"
     << "isp_count: " << isp_count << "\n"
     << "mse: " << render(mse_cover) << "\n"
     << "psnr_db: " << render_db(psnr_cover) << "\n"
     << "mse_preprocessed: " << render(mse_preprocessed) << "\n"
     << "psnr_preprocessed_db: " << render_db(psnr_preprocessed) << "\n";
  return os.str();
}

QualityReport make_quality_report(const GrayImage& cover,
                                  const GrayImage& stego,
                                  const EmbedStats& stats,
                                  std::int64_t payload_bits) {
  const GrayImage pre = preprocess(cover).first;
  QualityReport report;
  report.payload_bits = payload_bits;
  report.bpp = static_cast<double>(payload_bits) /
               static_cast<double>(cover.pixel_count());
  report.valid_shift_count = stats.valid_shift_count;
  report.isp_count = stats.isp_count;
  report.mse_cover = mse(cover, stego);
  report.psnr_cover = psnr(cover, stego);
  report.mse_preprocessed = mse(pre, stego);
  report.psnr_preprocessed = psnr(pre, stego);
  return report;
}

namespace {

GrayImage crop(const GrayImage& img, const Rect& r) {
  if (r.u0 < 0 || r.v0 < 0 || r.height < GrayImage::kMinSide ||
      r.width < GrayImage::kMinSide || r.u0 + r.height > img.height() ||
      r.v0 + r.width > img.width()) {
    throw FormatError("block rectangle out of bounds or below 5x5");
  }
  std::vector<std::uint8_t> px;
  px.reserve(static_cast<std::size_t>(r.height) * r.width);
  for (int u = r.u0; u < r.u0 + r.height; ++u) {
    for (int v = r.v0; v < r.v0 + r.width; ++v) {
      px.push_back(img.at(u, v));
    }
  }
  return GrayImage(r.width, r.height, std::move(px));
}

std::int64_t block_isp(const GrayImage& img, const Rect& r, int payload_bits) {
  // Standalone single-region embedder over the cropped block: every
  // interior pixel in raster order, one peak pair, writes applied as the
  // scan advances. Only the ISP count is of interest, so no map or side
  // info is kept.
  GrayImage blk = preprocess(crop(img, r)).first;

  std::vector<Coord> coords;
  for (int u = 1; u <= blk.height() - 2; ++u) {
    for (int v = 1; v <= blk.width() - 2; ++v) coords.push_back(Coord{u, v});
  }

  const ErrorHistogram peh = build_peh(blk, coords);
  const PeakZeroParams params = select_peaks_zeros(peh);
  if (params.peak_capacity(peh) < payload_bits) {
    throw CapacityError("block peak capacity " +
                        std::to_string(params.peak_capacity(peh)) +
                        " below payload " + std::to_string(payload_bits));
  }

  std::int64_t isp = 0;
  int placed = 0;
  for (const Coord& c : coords) {
    if (placed == payload_bits) break;
    const int predicted = predict(blk, c);
    const int e = blk.at(c) - predicted;
    const bool on_peak = (e == params.pk1 || e == params.pk2);
    const ModifiedError m = modify_error(
        e, params, on_peak ? std::optional<int>(0) : std::nullopt);
    if (on_peak) ++placed;
    if (m.action == ShiftAction::shifted) ++isp;
    blk.set(c, static_cast<std::uint8_t>(predicted + m.error));
  }
  if (placed < payload_bits) {
    throw CapacityError("block exhausted before placing all payload bits");
  }
  return isp;
}

}  // namespace

std::pair<std::int64_t, std::int64_t> block_isp_experiment(
    const GrayImage& img, const Rect& block_a, const Rect& block_b,
    int payload_bits) {
  if (block_a.height != block_b.height || block_a.width != block_b.width) {
    throw FormatError("blocks must share dimensions");
  }
  if (payload_bits < 0) throw FormatError("negative payload");
  return {block_isp(img, block_a, payload_bits),
          block_isp(img, block_b, payload_bits)};
}

}  // namespace rdh
