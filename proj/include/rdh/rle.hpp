#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace rdh {

// rle-v1: byte-aligned run-length code for a bit sequence. Runs alternate
// bit values starting with a run of zeros (possibly of length 0 when the
// sequence starts with a one); every later run is non-empty. Run lengths
// are LEB128 varints. The empty sequence encodes to zero bytes.
std::vector<std::uint8_t> rle_encode(std::span<const std::uint8_t> bits);

// Inverse of rle_encode. Throws FormatError on truncated varints,
// non-canonical zero-length runs, or varint overflow.
std::vector<std::uint8_t> rle_decode(std::span<const std::uint8_t> bytes);

}  // namespace rdh
