#pragma once

#include <array>
#include <cstddef>

namespace ovt::data {

inline constexpr int kTableStartNm = 360;
inline constexpr std::size_t kTableSize = 361;

extern const std::array<double, kTableSize> kCie1931X;
extern const std::array<double, kTableSize> kCie1931Y;
extern const std::array<double, kTableSize> kCie1931Z;
extern const std::array<double, kTableSize> kCie1964X;
extern const std::array<double, kTableSize> kCie1964Y;
extern const std::array<double, kTableSize> kCie1964Z;
extern const std::array<double, kTableSize> kD65;

}  // namespace ovt::data
