#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace rdh {

// Bit sequences are vectors of 0/1 bytes; payload files store them packed
// most-significant-bit first.
using BitVec = std::vector<std::uint8_t>;

// Unpack bit_count bits, MSB first. Throws FormatError when bit_count does
// not fit in the buffer or is negative.
BitVec bytes_to_bits(std::span<const std::uint8_t> bytes,
                     std::int64_t bit_count);

// Pack MSB first; the final byte is zero-padded in its low bits.
std::vector<std::uint8_t> bits_to_bytes(std::span<const std::uint8_t> bits);

// Deterministic payload generator: bytes are successive low-order bytes of
// std::mt19937_64 seeded with `seed`, unpacked MSB first.
BitVec random_bits(std::int64_t count, std::uint64_t seed);

}  // namespace rdh
