#pragma once

#include <string>

#include "rdh/codec.hpp"

namespace rdh {

// Sidecar wire format (JSON): {version, width, height, parity: "A-even",
// order, sets: [{tag, pk1, pk2, z1, z2, bits, prefix_len}, ...],
// payload_bits, locmap_encoding: "rle-v1", locmap: lowercase hex}.
// Sets appear as A then B.
std::string metadata_to_json(const StegoMetadata& meta);

// Parses and validates; any structural or invariant violation raises
// FormatError.
StegoMetadata metadata_from_json(const std::string& text);

}  // namespace rdh
