#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>

#include "rdh/bits.hpp"
#include "rdh/histogram.hpp"
#include "rdh/image.hpp"

namespace rdh {

// Which traversal drives the sequential embedding pass. Raster order exists
// as the comparison baseline: capacities match, only which pixels end up
// shifted differs.
enum class OrderMode : std::uint8_t { fluctuation, raster };

const char* to_string(OrderMode m) noexcept;
std::optional<OrderMode> order_mode_from_string(const std::string& name);

// One bit per interior pixel whose post-preprocessing value is 1 or 254, in
// raster order over the whole image; 1 marks a pixel that was premodified
// from 0 or 255.
struct LocationMap {
  BitVec bits;
  friend bool operator==(const LocationMap&, const LocationMap&) = default;
};

// Per-set side information the extractor needs.
struct SetSideInfo {
  PeakZeroParams params;
  std::int64_t bits_embedded = 0;
  std::int64_t prefix_len = 0;  // coords visited in embedding order
  friend bool operator==(const SetSideInfo&, const SetSideInfo&) = default;
};

struct EmbedStats {
  std::int64_t valid_shift_count = 0;  // pixels changed while carrying a bit
  std::int64_t isp_count = 0;          // pixels shifted carrying no bit
  std::int64_t unchanged_count = 0;    // visited but left in place
  friend bool operator==(const EmbedStats&, const EmbedStats&) = default;
};

// Sidecar metadata; see metadata_json.hpp for the wire format.
struct StegoMetadata {
  static constexpr int kVersion = 1;
  static constexpr const char* kParityConvention = "A-even";

  int width = 0;
  int height = 0;
  OrderMode order = OrderMode::fluctuation;
  SetSideInfo set_a;
  SetSideInfo set_b;
  std::int64_t payload_bits = 0;
  LocationMap locmap;

  friend bool operator==(const StegoMetadata&,
                         const StegoMetadata&) = default;
};

// Clamps interior 0/255 pixels to 1/254 so that every later +-1 change stays
// in range, recording the map needed to undo it. Border pixels are left
// alone; they are never touched by embedding either.
std::pair<GrayImage, LocationMap> preprocess(const GrayImage& img);

// Restores the premodified pixels. Throws CorruptStegoError when the map
// length does not match the image's 1/254 interior population.
void postprocess(GrayImage& img, const LocationMap& map);

enum class ShiftAction : std::uint8_t { embedded, shifted, none };

struct ModifiedError {
  int error = 0;
  ShiftAction action = ShiftAction::none;
};

// The embedding rule for one prediction error. next_bit must be present
// exactly when e sits on a peak.
ModifiedError modify_error(int e, const PeakZeroParams& params,
                           std::optional<int> next_bit);

struct RecoveredError {
  int error = 0;
  std::optional<int> bit;
};

// The inverse rule: decodes the carried bit (if any) and undoes the shift.
// The shift-back ranges include the zero bins themselves; pixels adjacent
// to a zero land on it.
RecoveredError recover_error(int marked, const PeakZeroParams& params);

struct SetEmbedResult {
  GrayImage image;
  SetSideInfo info;
  EmbedStats stats;
};

// Embeds `bits` into set s: walks the set in the requested order, consuming
// one bit at every peak-valued error, shifting in-range errors, and stops
// right after the last bit. Coordinates past the stop point stay untouched.
// Throws CapacityError before modifying anything when the bits cannot fit.
SetEmbedResult embed_set(const GrayImage& img, ParitySet s,
                         std::span<const std::uint8_t> bits,
                         OrderMode order = OrderMode::fluctuation);

struct EmbedResult {
  GrayImage stego;
  StegoMetadata meta;
  EmbedStats stats;
};

// Full pipeline: preprocess, embed ceil(L/2) bits into A, then the rest
// into B on top of the A-modified image. No partial image ever escapes a
// capacity failure.
EmbedResult embed(const GrayImage& cover,
                  std::span<const std::uint8_t> payload,
                  OrderMode order = OrderMode::fluctuation);

struct SetExtractResult {
  GrayImage image;
  BitVec bits;
};

// Reverse of embed_set. Works because a set's fluctuation values and
// predictions read only opposite-parity pixels, so the traversal order seen
// here equals the one used at embed time.
SetExtractResult extract_set(const GrayImage& img, ParitySet s,
                             const SetSideInfo& info,
                             OrderMode order = OrderMode::fluctuation);

struct ExtractResult {
  BitVec payload;
  GrayImage cover;
};

// Extracts B then A, undoes preprocessing via the location map, and returns
// the payload (A bits first) with the bit-exact cover.
ExtractResult extract(const GrayImage& stego, const StegoMetadata& meta);

// Gross double-peak capacity in bits: sum of both sets' peak counts on the
// preprocessed cover. B's term is an estimate; its true histogram shifts
// slightly once A is embedded. Propagates CapacityError from peak
// selection.
std::int64_t capacity(const GrayImage& img);

// Deployable payload estimate: min(2*capA, 2*capB + 1) (the even split
// caps the total at twice the smaller side) minus the compressed location
// map size in bits, clamped at zero. Returns 0 for images with no usable
// peaks.
std::int64_t net_capacity(const GrayImage& img);

}  // namespace rdh
