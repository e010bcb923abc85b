#pragma once

#include <array>
#include <iosfwd>
#include <span>
#include <vector>

#include "ovt/cam16.hpp"
#include "ovt/colorimetry.hpp"
#include "ovt/svg.hpp"

namespace ovt {

/// Display primaries plus the luminance that drives all channels to 1.
/// Stimuli are expressed in the same units as `white_luminance`.
struct DisplayGamut {
  RgbColorspace space = RgbColorspace::rec709();
  double white_luminance = 100.0;

  static DisplayGamut rec709(double white_luminance = 100.0) {
    return {RgbColorspace::rec709(), white_luminance};
  }

  [[nodiscard]] std::array<double, 3> to_rgb_linear(const Tristimulus& xyz) const;
  [[nodiscard]] Tristimulus from_rgb_linear(const std::array<double, 3>& rgb) const;
  /// Display white as a stimulus: chromaticity of the white point at Y = white_luminance.
  [[nodiscard]] Tristimulus white_xyz() const;
};

inline constexpr double kGamutTolerance = 1e-9;

/// True iff the linear RGB drive values all lie in [0, 1] (within 1e-9).
bool gamut_contains(const Tristimulus& xyz, const DisplayGamut& gamut);

struct AtlasSpec {
  Cam16ViewingConditions vc;
  double J = 50.0;
  double spacing = 2.0;
  DisplayGamut gamut = DisplayGamut::rec709();
  /// Candidates are drawn from |a'_M|, |b'_M| <= bound.
  double bound = 60.0;
};

struct AtlasPoint {
  int i = 0;  ///< a'_M = i * spacing
  int j = 0;  ///< b'_M = j * spacing
  double J = 0.0;  ///< lightness level of the slice
  UcsPoint ucs;
  Cam16Appearance appearance;
  Tristimulus xyz;
  Chromaticity xy;
  std::array<double, 3> rgb_linear{};
};

struct AtlasDiagnostics {
  std::size_t candidates = 0;
  std::size_t out_of_gamut = 0;
  std::size_t inversion_failures = 0;
};

struct Atlas {
  std::vector<AtlasPoint> points;  ///< sorted by (b'_M, a'_M)
  AtlasDiagnostics diagnostics;
};

/// Builds the square (a'_M, b'_M) lattice through the origin at fixed CAM16
/// lightness J, inverts every node and keeps the ones the display can show.
Atlas generate_atlas(const AtlasSpec& spec);

/// Viewing conditions whose adopted white is the display white.
Cam16ViewingConditions display_viewing_conditions(const DisplayGamut& gamut, double L_A, double Y_b,
                                                  Surround surround,
                                                  std::optional<double> D = std::nullopt);

std::vector<Chromaticity> atlas_to_xy(std::span<const AtlasPoint> points);

/// Header: J,a_m_prime,b_m_prime,X,Y,Z,x,y,R_lin,G_lin,B_lin
void write_atlas_csv(std::ostream& out, std::span<const AtlasPoint> points);

/// Scatter of the slice in (a'_M, b'_M), points filled with their display colour.
ScatterPlot ucs_scatter(std::span<const AtlasPoint> points, double J, double bound);
/// Scatter of the slice in (x, y) with the display triangle outlined.
ScatterPlot xy_scatter(std::span<const AtlasPoint> points, const DisplayGamut& gamut, double J);

}  // namespace ovt
