#include "rdh/bits.hpp"

#include <random>
#include <string>

#include "rdh/errors.hpp"

namespace rdh {

BitVec bytes_to_bits(std::span<const std::uint8_t> bytes,
                     std::int64_t bit_count) {
  if (bit_count < 0 ||
      bit_count > static_cast<std::int64_t>(bytes.size()) * 8) {
    throw FormatError("bit count " + std::to_string(bit_count) +
                      " does not fit in " + std::to_string(bytes.size()) +
                      " bytes");
  }
  BitVec bits;
  bits.reserve(static_cast<std::size_t>(bit_count));
  for (std::int64_t i = 0; i < bit_count; ++i) {
    const std::uint8_t byte = bytes[static_cast<std::size_t>(i / 8)];
    bits.push_back((byte >> (7 - i % 8)) & 1);
  }
  return bits;
}

std::vector<std::uint8_t> bits_to_bytes(std::span<const std::uint8_t> bits) {
  std::vector<std::uint8_t> bytes((bits.size() + 7) / 8, 0);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) bytes[i / 8] |= static_cast<std::uint8_t>(1u << (7 - i % 8));
  }
  return bytes;
}

BitVec random_bits(std::int64_t count, std::uint64_t seed) {
  if (count < 0) throw FormatError("negative bit count");
  std::mt19937_64 gen(seed);
  std::vector<std::uint8_t> bytes(static_cast<std::size_t>((count + 7) / 8));
  for (auto& b : bytes) b = static_cast<std::uint8_t>(gen() & 0xFF);
  return bytes_to_bits(bytes, count);
}

}  // namespace rdh
