#include "rdh/metadata_json.hpp"

#include <json.hpp>

#include "rdh/rle.hpp"

namespace rdh {
namespace {

using nlohmann::json;

constexpr const char* kLocmapEncoding = "rle-v1";

std::string to_hex(std::span<const std::uint8_t> bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (const std::uint8_t b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xF]);
  }
  return out;
}

std::vector<std::uint8_t> from_hex(const std::string& text) {
  if (text.size() % 2 != 0) throw FormatError("metadata: odd hex length");
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    throw FormatError("metadata: invalid hex digit");
  };
  std::vector<std::uint8_t> out(text.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<std::uint8_t>((nibble(text[2 * i]) << 4) |
                                       nibble(text[2 * i + 1]));
  }
  return out;
}

json set_to_json(const char* tag, const SetSideInfo& info) {
  return json{{"tag", tag},
              {"pk1", info.params.pk1},
              {"pk2", info.params.pk2},
              {"z1", info.params.z1},
              {"z2", info.params.z2},
              {"bits", info.bits_embedded},
              {"prefix_len", info.prefix_len}};
}

SetSideInfo set_from_json(const json& j, const char* tag) {
  if (j.at("tag").get<std::string>() != tag) {
    throw FormatError("metadata: sets must appear as A then B");
  }
  SetSideInfo info;
  info.params.pk1 = j.at("pk1").get<int>();
  info.params.pk2 = j.at("pk2").get<int>();
  info.params.z1 = j.at("z1").get<int>();
  info.params.z2 = j.at("z2").get<int>();
  info.bits_embedded = j.at("bits").get<std::int64_t>();
  info.prefix_len = j.at("prefix_len").get<std::int64_t>();
  if (info.bits_embedded < 0 || info.prefix_len < 0 ||
      info.bits_embedded > info.prefix_len) {
    throw FormatError("metadata: invalid bit/prefix counts for set " +
                      std::string(tag));
  }
  if (info.bits_embedded > 0 && !params_well_formed(info.params)) {
    throw FormatError("metadata: malformed peak/zero params for set " +
                      std::string(tag));
  }
  if (info.bits_embedded == 0 && info.prefix_len != 0) {
    throw FormatError("metadata: prefix without bits for set " +
                      std::string(tag));
  }
  return info;
}

}  // namespace

std::string metadata_to_json(const StegoMetadata& meta) {
  json j{{"version", StegoMetadata::kVersion},
         {"width", meta.width},
         {"height", meta.height},
         {"parity", StegoMetadata::kParityConvention},
         {"order", to_string(meta.order)},
         {"sets", json::array({set_to_json("A", meta.set_a),
                               set_to_json("B", meta.set_b)})},
         {"payload_bits", meta.payload_bits},
         {"locmap_encoding", kLocmapEncoding},
         {"locmap", to_hex(rle_encode(meta.locmap.bits))}};
  return j.dump(2) + "\n";
}

StegoMetadata metadata_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw FormatError(std::string("metadata: invalid JSON: ") + e.what());
  }

  try {
    StegoMetadata meta;
    if (j.at("version").get<int>() != StegoMetadata::kVersion) {
      throw FormatError("metadata: unsupported version");
    }
    if (j.at("parity").get<std::string>() !=
        StegoMetadata::kParityConvention) {
      throw FormatError("metadata: unknown parity convention");
    }
    if (j.at("locmap_encoding").get<std::string>() != kLocmapEncoding) {
      throw FormatError("metadata: unknown location map encoding");
    }
    const auto order = order_mode_from_string(j.at("order").get<std::string>());
    if (!order) throw FormatError("metadata: unknown order mode");
    meta.order = *order;

    meta.width = j.at("width").get<int>();
    meta.height = j.at("height").get<int>();
    if (meta.width < GrayImage::kMinSide || meta.height < GrayImage::kMinSide) {
      throw FormatError("metadata: dimensions below the 5x5 minimum");
    }

    const json& sets = j.at("sets");
    if (!sets.is_array() || sets.size() != 2) {
      throw FormatError("metadata: expected exactly two sets");
    }
    meta.set_a = set_from_json(sets[0], "A");
    meta.set_b = set_from_json(sets[1], "B");

    meta.payload_bits = j.at("payload_bits").get<std::int64_t>();
    if (meta.payload_bits !=
        meta.set_a.bits_embedded + meta.set_b.bits_embedded) {
      throw FormatError("metadata: payload_bits does not equal the per-set "
                        "bit counts");
    }

    meta.locmap.bits = rle_decode(from_hex(j.at("locmap").get<std::string>()));
    return meta;
  } catch (const json::exception& e) {
    throw FormatError(std::string("metadata: missing or mistyped field: ") +
                      e.what());
  }
}

}  // namespace rdh
