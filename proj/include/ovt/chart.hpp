#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ovt/atlas.hpp"
#include "ovt/png.hpp"

namespace ovt {

enum class TransferFunction { rec709, linear };

/// BT.709 opto-electronic transfer function and its exact inverse.
double rec709_oetf(double L);
double rec709_inverse_oetf(double V);

double encode_transfer(double linear, TransferFunction tf);
double decode_transfer(double signal, TransferFunction tf);

/// q = round(65535 * encoded)
std::uint16_t quantize16(double encoded);

struct ChartLayout {
  int rows = 4;
  int cols = 4;
  int patch_px = 128;
  int gap_px = 16;
  std::array<double, 3> background_rgb{0.2, 0.2, 0.2};

  [[nodiscard]] int width() const { return cols * patch_px + (cols + 1) * gap_px; }
  [[nodiscard]] int height() const { return rows * patch_px + (rows + 1) * gap_px; }
  friend bool operator==(const ChartLayout&, const ChartLayout&) = default;
};

enum class PatchSource { optimal, matched, atlas };

std::string_view to_string(PatchSource source);
PatchSource parse_patch_source(std::string_view text);
std::string_view to_string(TransferFunction tf);

struct ChartPatch {
  std::string name;
  std::array<double, 3> rgb_linear{};
  PatchSource source = PatchSource::optimal;
  std::optional<double> L_C;
  std::optional<UcsPoint> ucs;
};

struct PatchMetadata {
  std::string name;
  int row = 0;
  int col = 0;
  double x = 0.0;
  double y = 0.0;
  std::array<double, 3> rgb_linear{};
  std::optional<double> L_C;
  std::optional<UcsPoint> ucs;
  PatchSource source = PatchSource::optimal;

  friend bool operator==(const PatchMetadata&, const PatchMetadata&) = default;
};

struct ViewingMetadata {
  double L_A = 50.0;
  double Y_b = 20.0;
  std::string surround = "average";

  friend bool operator==(const ViewingMetadata&, const ViewingMetadata&) = default;
};

struct ChartMetadata {
  ChartLayout layout;
  TransferFunction transfer = TransferFunction::rec709;
  std::string illuminant = "D65";
  std::string observer = "degree2";
  std::array<Chromaticity, 3> primaries{};
  Chromaticity white{};
  std::optional<ViewingMetadata> viewing;
  std::vector<PatchMetadata> patches;

  friend bool operator==(const ChartMetadata&, const ChartMetadata&) = default;
};

struct ChartOptions {
  TransferFunction transfer = TransferFunction::rec709;
  DisplayGamut gamut = DisplayGamut::rec709();
  std::string illuminant = "D65";
  std::string observer = "degree2";
  std::optional<ViewingMetadata> viewing;
  /// Embedded as an iCCP chunk when non-empty.
  std::vector<std::uint8_t> icc_profile;
};

struct RenderedChart {
  Image16 image;
  std::vector<std::uint8_t> png;
  ChartMetadata metadata;
};

/// Lays the patches out row-major in input order and encodes them through
/// the chosen transfer function into a 16-bit PNG.
RenderedChart render_chart(std::span<const ChartPatch> patches, const ChartLayout& layout,
                           const ChartOptions& options = {});

/// Pixel origin (top-left) of the patch at (row, col).
std::array<int, 2> patch_origin(const ChartLayout& layout, int row, int col);

std::string metadata_to_json(const ChartMetadata& meta);
ChartMetadata metadata_from_json(std::string_view text);
void export_metadata(const ChartMetadata& meta, const std::filesystem::path& path);
ChartMetadata import_metadata(const std::filesystem::path& path);

}  // namespace ovt
