#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace ovt {

/// Interleaved 16-bit RGB raster, row-major.
struct Image16 {
  int width = 0;
  int height = 0;
  std::vector<std::uint16_t> rgb;

  [[nodiscard]] std::size_t index(int x, int y) const {
    return (static_cast<std::size_t>(y) * static_cast<std::size_t>(width) + static_cast<std::size_t>(x)) * 3;
  }
  friend bool operator==(const Image16&, const Image16&) = default;
};

/// Encodes a 16-bit RGB PNG with no colour-management chunks. Optionally
/// embeds an ICC profile (iCCP chunk).
std::vector<std::uint8_t> encode_png16(const Image16& image,
                                       std::span<const std::uint8_t> icc_profile = {});

Image16 decode_png16(std::span<const std::uint8_t> png);

}  // namespace ovt
