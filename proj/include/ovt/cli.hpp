#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ovt::cli {

/// Resolved command-line and config-file settings.
struct RunConfig {
  std::string illuminant = "D65";
  std::string observer = "degree2";
  std::string gamut = "rec709";
  std::vector<double> primaries;    ///< xr,yr,xg,yg,xb,yb; overrides the preset
  std::vector<double> white_point;  ///< x,y
  double white_luminance = 100.0;
  double L_A = 50.0;
  double Y_b = 20.0;
  std::string surround = "average";
  std::optional<double> D;
  std::string out;
  bool json = false;
  std::string config;

  // solve-optimal
  std::vector<double> target;
  std::string genus = "auto";
  double tolerance = 1e-5;
  std::vector<double> init{490.0, 545.0};
  std::optional<double> L_C;

  // match / chart --set matched
  std::string db;
  std::string format = "wide_csv";

  // atlas / chart --set atlas
  double J = 50.0;
  double spacing = 2.0;
  double bound = 60.0;
  std::string svg;
  std::string svg_xy;

  // chart
  std::string set = "targets";
  int rows = 0;
  int cols = 0;
  int patch_px = 128;
  int gap_px = 16;
  bool linear = false;
  std::string icc;
};

/// Entry point behind the `ovt` executable. Returns 0 on success, 1 on a
/// domain error and 2 on a usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ovt::cli
