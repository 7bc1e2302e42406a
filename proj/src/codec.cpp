#include "rdh/codec.hpp"

#include <algorithm>

#include "rdh/predictor.hpp"
#include "rdh/rle.hpp"
#include "rdh/texture.hpp"

namespace rdh {

const char* to_string(OrderMode m) noexcept {
  return m == OrderMode::fluctuation ? "fluctuation" : "raster";
}

std::optional<OrderMode> order_mode_from_string(const std::string& name) {
  if (name == "fluctuation") return OrderMode::fluctuation;
  if (name == "raster") return OrderMode::raster;
  return std::nullopt;
}

std::pair<GrayImage, LocationMap> preprocess(const GrayImage& img) {
  GrayImage out = img;
  LocationMap map;
  for (int u = 1; u <= img.height() - 2; ++u) {
    for (int v = 1; v <= img.width() - 2; ++v) {
      const Coord c{u, v};
      switch (out.at(c)) {
        case 0:
          out.set(c, 1);
          map.bits.push_back(1);
          break;
        case 255:
          out.set(c, 254);
          map.bits.push_back(1);
          break;
        case 1:
        case 254:
          map.bits.push_back(0);
          break;
        default:
          break;
      }
    }
  }
  return {std::move(out), std::move(map)};
}

void postprocess(GrayImage& img, const LocationMap& map) {
  std::size_t next = 0;
  for (int u = 1; u <= img.height() - 2; ++u) {
    for (int v = 1; v <= img.width() - 2; ++v) {
      const Coord c{u, v};
      const std::uint8_t p = img.at(c);
      if (p != 1 && p != 254) continue;
      if (next >= map.bits.size()) {
        throw CorruptStegoError("location map shorter than the recovered "
                                "image's 1/254 population");
      }
      if (map.bits[next++]) img.set(c, p == 1 ? 0 : 255);
    }
  }
  if (next != map.bits.size()) {
    throw CorruptStegoError("location map longer than the recovered image's "
                            "1/254 population");
  }
}

ModifiedError modify_error(int e, const PeakZeroParams& params,
                           std::optional<int> next_bit) {
  const int min_pk = params.min_peak();
  const int max_pk = params.max_peak();
  const bool on_peak = (e == min_pk || e == max_pk);
  if (on_peak != next_bit.has_value()) {
    throw std::invalid_argument(
        "modify_error: a bit must be supplied exactly on peak errors");
  }
  if (next_bit && *next_bit != 0 && *next_bit != 1) {
    throw std::invalid_argument("modify_error: bit must be 0 or 1");
  }
  if (e == max_pk) return {e + *next_bit, ShiftAction::embedded};
  if (e == min_pk) return {e - *next_bit, ShiftAction::embedded};
  if (e > max_pk && e < params.z2) return {e + 1, ShiftAction::shifted};
  if (e < min_pk && e > params.z1) return {e - 1, ShiftAction::shifted};
  return {e, ShiftAction::none};
}

RecoveredError recover_error(int marked, const PeakZeroParams& params) {
  const int min_pk = params.min_peak();
  const int max_pk = params.max_peak();
  if (marked == max_pk + 1) return {marked - 1, 1};
  if (marked == min_pk - 1) return {marked + 1, 1};
  if (marked == params.pk1 || marked == params.pk2) return {marked, 0};
  if (marked <= params.z2 && marked > max_pk)
    return {marked - 1, std::nullopt};
  if (marked >= params.z1 && marked < min_pk)
    return {marked + 1, std::nullopt};
  return {marked, std::nullopt};
}

namespace {

// Traversal order over the set's processable coords.
std::vector<Coord> embedding_order(const GrayImage& img, ParitySet s,
                                   OrderMode order) {
  if (order == OrderMode::raster) return processable_coords(img, s);
  std::vector<FluctuationRecord> records = fluctuation_order(img, s);
  std::vector<Coord> coords;
  coords.reserve(records.size());
  for (const FluctuationRecord& r : records) coords.push_back(r.coord);
  return coords;
}

// Placeholder side info for a set that carries no bits; the extractor never
// consults the params in that case.
SetSideInfo empty_side_info() {
  return SetSideInfo{PeakZeroParams{0, 1, -1, 2}, 0, 0};
}

void embed_set_inplace(GrayImage& img, ParitySet s,
                       std::span<const std::uint8_t> bits, OrderMode order,
                       SetSideInfo& info, EmbedStats& stats) {
  if (bits.empty()) {
    info = empty_side_info();
    return;
  }

  const std::vector<Coord> coords = embedding_order(img, s, order);
  const ErrorHistogram peh = build_peh(img, coords);
  const PeakZeroParams params = select_peaks_zeros(peh);
  const std::int64_t cap = params.peak_capacity(peh);
  if (static_cast<std::int64_t>(bits.size()) > cap) {
    throw CapacityError("set " + std::string(to_string(s)) + " holds " +
                        std::to_string(cap) + " bits, payload needs " +
                        std::to_string(bits.size()));
  }

  std::size_t next = 0;
  std::int64_t visited = 0;
  for (const Coord& c : coords) {
    if (next == bits.size()) break;
    ++visited;
    const int predicted = predict(img, c);
    const int e = img.at(c) - predicted;
    const bool on_peak = (e == params.pk1 || e == params.pk2);
    const ModifiedError m = modify_error(
        e, params, on_peak ? std::optional<int>(bits[next]) : std::nullopt);
    if (on_peak) ++next;
    const int marked = predicted + m.error;
    if (marked < 0 || marked > 255) {
      throw Error("pixel escapes [0,255] after shifting; the image was not "
                  "preprocessed");
    }
    img.set(c, static_cast<std::uint8_t>(marked));
    switch (m.action) {
      case ShiftAction::embedded:
        if (bits[next - 1])
          ++stats.valid_shift_count;
        else
          ++stats.unchanged_count;
        break;
      case ShiftAction::shifted:
        ++stats.isp_count;
        break;
      case ShiftAction::none:
        ++stats.unchanged_count;
        break;
    }
  }
  // bits.size() <= cap guarantees the loop consumed everything.
  info = SetSideInfo{params, static_cast<std::int64_t>(next), visited};
}

BitVec extract_set_inplace(GrayImage& img, ParitySet s,
                           const SetSideInfo& info, OrderMode order) {
  if (info.bits_embedded == 0) {
    if (info.prefix_len != 0) {
      throw FormatError("side info carries a prefix but no bits");
    }
    return {};
  }
  if (!params_well_formed(info.params)) {
    throw FormatError("malformed peak/zero parameters in side info");
  }

  const std::vector<Coord> coords = embedding_order(img, s, order);
  BitVec bits;
  bits.reserve(static_cast<std::size_t>(info.bits_embedded));
  std::int64_t visited = 0;
  for (const Coord& c : coords) {
    if (static_cast<std::int64_t>(bits.size()) == info.bits_embedded) break;
    ++visited;
    const int predicted = predict(img, c);
    const int marked = img.at(c) - predicted;
    const RecoveredError r = recover_error(marked, info.params);
    if (r.bit) bits.push_back(static_cast<std::uint8_t>(*r.bit));
    const int original = predicted + r.error;
    if (original < 0 || original > 255) {
      throw CorruptStegoError("recovered pixel escapes [0,255]");
    }
    img.set(c, static_cast<std::uint8_t>(original));
  }
  if (static_cast<std::int64_t>(bits.size()) != info.bits_embedded) {
    throw CorruptStegoError("set " + std::string(to_string(s)) +
                            " ran out of pixels before recovering all bits");
  }
  if (visited != info.prefix_len) {
    throw CorruptStegoError("set " + std::string(to_string(s)) +
                            " prefix length mismatch: visited " +
                            std::to_string(visited) + ", expected " +
                            std::to_string(info.prefix_len));
  }
  return bits;
}

std::int64_t peak_capacity_of(const GrayImage& img, ParitySet s) {
  const ErrorHistogram peh = build_peh(img, s);
  const PeakZeroParams params = select_peaks_zeros(peh);
  return params.peak_capacity(peh);
}

}  // namespace

SetEmbedResult embed_set(const GrayImage& img, ParitySet s,
                         std::span<const std::uint8_t> bits, OrderMode order) {
  SetEmbedResult result{img, {}, {}};
  embed_set_inplace(result.image, s, bits, order, result.info, result.stats);
  return result;
}

EmbedResult embed(const GrayImage& cover,
                  std::span<const std::uint8_t> payload, OrderMode order) {
  auto [work, locmap] = preprocess(cover);

  const std::size_t bits_a = (payload.size() + 1) / 2;  // A takes the odd bit
  EmbedStats stats;
  SetSideInfo info_a;
  SetSideInfo info_b;
  embed_set_inplace(work, ParitySet::A, payload.subspan(0, bits_a), order,
                    info_a, stats);
  embed_set_inplace(work, ParitySet::B, payload.subspan(bits_a), order,
                    info_b, stats);

  StegoMetadata meta;
  meta.width = cover.width();
  meta.height = cover.height();
  meta.order = order;
  meta.set_a = info_a;
  meta.set_b = info_b;
  meta.payload_bits = static_cast<std::int64_t>(payload.size());
  meta.locmap = std::move(locmap);
  return EmbedResult{std::move(work), std::move(meta), stats};
}

SetExtractResult extract_set(const GrayImage& img, ParitySet s,
                             const SetSideInfo& info, OrderMode order) {
  SetExtractResult result{img, {}};
  result.bits = extract_set_inplace(result.image, s, info, order);
  return result;
}

ExtractResult extract(const GrayImage& stego, const StegoMetadata& meta) {
  if (meta.width != stego.width() || meta.height != stego.height()) {
    throw FormatError("metadata dimensions " + std::to_string(meta.width) +
                      "x" + std::to_string(meta.height) +
                      " do not match the stego image");
  }
  if (meta.payload_bits !=
      meta.set_a.bits_embedded + meta.set_b.bits_embedded) {
    throw FormatError("payload length does not equal the per-set bit counts");
  }

  GrayImage work = stego;
  // B was embedded last, so it comes off first.
  BitVec bits_b = extract_set_inplace(work, ParitySet::B, meta.set_b,
                                      meta.order);
  BitVec bits_a = extract_set_inplace(work, ParitySet::A, meta.set_a,
                                      meta.order);
  postprocess(work, meta.locmap);

  BitVec payload = std::move(bits_a);
  payload.insert(payload.end(), bits_b.begin(), bits_b.end());
  return ExtractResult{std::move(payload), std::move(work)};
}

std::int64_t capacity(const GrayImage& img) {
  const GrayImage pre = preprocess(img).first;
  return peak_capacity_of(pre, ParitySet::A) +
         peak_capacity_of(pre, ParitySet::B);
}

std::int64_t net_capacity(const GrayImage& img) {
  auto [pre, locmap] = preprocess(img);
  std::int64_t cap_a = 0;
  std::int64_t cap_b = 0;
  try {
    cap_a = peak_capacity_of(pre, ParitySet::A);
    cap_b = peak_capacity_of(pre, ParitySet::B);
  } catch (const CapacityError&) {
    return 0;
  }
  const std::int64_t split_cap = std::min(2 * cap_a, 2 * cap_b + 1);
  const std::int64_t locmap_bits =
      static_cast<std::int64_t>(rle_encode(locmap.bits).size()) * 8;
  return std::max<std::int64_t>(0, split_cap - locmap_bits);
}

}  // namespace rdh
