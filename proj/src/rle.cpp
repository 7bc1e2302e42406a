#include "rdh/rle.hpp"

#include <limits>

#include "rdh/errors.hpp"

namespace rdh {
namespace {

void append_varint(std::vector<std::uint8_t>& out, std::uint64_t value) {
  while (value >= 0x80) {
    out.push_back(static_cast<std::uint8_t>(value) | 0x80);
    value >>= 7;
  }
  out.push_back(static_cast<std::uint8_t>(value));
}

std::uint64_t read_varint(std::span<const std::uint8_t> bytes,
                          std::size_t& pos) {
  std::uint64_t value = 0;
  int shift = 0;
  while (true) {
    if (pos >= bytes.size()) throw FormatError("rle-v1: truncated varint");
    if (shift > 56) throw FormatError("rle-v1: varint overflow");
    const std::uint8_t b = bytes[pos++];
    value |= static_cast<std::uint64_t>(b & 0x7F) << shift;
    if ((b & 0x80) == 0) return value;
    shift += 7;
  }
}

}  // namespace

std::vector<std::uint8_t> rle_encode(std::span<const std::uint8_t> bits) {
  std::vector<std::uint8_t> out;
  if (bits.empty()) return out;

  std::uint8_t current = 0;  // first run counts zeros
  std::uint64_t run = 0;
  for (const std::uint8_t b : bits) {
    const std::uint8_t bit = b ? 1 : 0;
    if (bit == current) {
      ++run;
    } else {
      append_varint(out, run);
      current = bit;
      run = 1;
    }
  }
  append_varint(out, run);
  return out;
}

std::vector<std::uint8_t> rle_decode(std::span<const std::uint8_t> bytes) {
  std::vector<std::uint8_t> bits;
  std::size_t pos = 0;
  std::uint8_t current = 0;
  bool first = true;
  while (pos < bytes.size()) {
    const std::uint64_t run = read_varint(bytes, pos);
    if (run == 0 && !first) {
      throw FormatError("rle-v1: zero-length run after the first");
    }
    if (run > static_cast<std::uint64_t>(std::numeric_limits<int>::max())) {
      throw FormatError("rle-v1: run length out of range");
    }
    bits.insert(bits.end(), static_cast<std::size_t>(run), current);
    current ^= 1;
    first = false;
  }
  return bits;
}

}  // namespace rdh
