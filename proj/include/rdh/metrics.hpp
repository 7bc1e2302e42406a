#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "rdh/codec.hpp"
#include "rdh/image.hpp"

namespace rdh {

// Mean squared error; FormatError on mismatched dimensions.
double mse(const GrayImage& a, const GrayImage& b);

// 10*log10(255^2 / MSE); +infinity for identical images.
double psnr(const GrayImage& a, const GrayImage& b);

// (mse1, mse2): distortion split between bit-carrying changes and invalid
// shifts. Every change has unit magnitude, so mse1 + mse2 equals the MSE
// against the preprocessed cover.
std::pair<double, double> mse_decomposition(const EmbedStats& stats,
                                            int width, int height);

// Quality summary for one embed. PSNR appears against both references:
// the untouched cover for figures comparable to published numbers, and the
// preprocessed cover for the exact decomposition identity.
struct QualityReport {
  std::int64_t payload_bits = 0;
  double bpp = 0.0;
  std::int64_t valid_shift_count = 0;
  std::int64_t isp_count = 0;
  double mse_cover = 0.0;
  double psnr_cover = 0.0;
  double mse_preprocessed = 0.0;
  double psnr_preprocessed = 0.0;

  // key: value lines; infinite PSNR renders as "inf".
  std::string to_text() const;
};

QualityReport make_quality_report(const GrayImage& cover,
                                  const GrayImage& stego,
                                  const EmbedStats& stats,
                                  std::int64_t payload_bits);

// Axis-aligned pixel rectangle.
struct Rect {
  int u0 = 0;
  int v0 = 0;
  int height = 0;
  int width = 0;
};

// Smooth-vs-rough demonstration: each block is cropped and embedded as a
// standalone single-region image (all interior pixels, one peak pair,
// raster order) until `payload_bits` bits are placed; returns the two ISP
// counts. Blocks must have equal dimensions.
std::pair<std::int64_t, std::int64_t> block_isp_experiment(
    const GrayImage& img, const Rect& block_a, const Rect& block_b,
    int payload_bits);

}  // namespace rdh
