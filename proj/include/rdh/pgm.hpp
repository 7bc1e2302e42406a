#pragma once

#include <filesystem>
#include <span>
#include <vector>

#include "rdh/image.hpp"

namespace rdh {

// Binary PGM (magic P5), maxval exactly 255. Header comments are accepted
// on read and never written. Byte counts must match the declared
// dimensions exactly.
GrayImage parse_pgm(std::span<const std::uint8_t> data);
std::vector<std::uint8_t> serialize_pgm(const GrayImage& img);

GrayImage read_pgm(const std::filesystem::path& path);
void write_pgm(const std::filesystem::path& path, const GrayImage& img);

// Whole-file helpers used for payload bytes.
std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path,
                std::span<const std::uint8_t> data);

}  // namespace rdh
