#pragma once

#include <stdexcept>
#include <string>

namespace rdh {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Coordinate outside the image or missing required neighbors.
struct BoundsError : Error {
  using Error::Error;
};

// Malformed file, metadata, or mismatched dimensions.
struct FormatError : Error {
  using Error::Error;
};

// Payload does not fit, or the histogram admits no lossless shift.
struct CapacityError : Error {
  using Error::Error;
};

// Stego data inconsistent with its metadata.
struct CorruptStegoError : Error {
  using Error::Error;
};

}  // namespace rdh
