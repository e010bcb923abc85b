#pragma once

#include <array>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace ovt {

struct ScatterPoint {
  double x = 0.0;
  double y = 0.0;
  std::array<double, 3> rgb{0.5, 0.5, 0.5};  ///< display-encoded fill, 0..1
};

struct ScatterPlot {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::array<double, 2> x_range{0.0, 1.0};
  std::array<double, 2> y_range{0.0, 1.0};
  std::vector<ScatterPoint> points;
  /// Optional closed outline, e.g. the display primaries triangle.
  std::vector<std::array<double, 2>> outline;
  double marker_radius = 3.0;
};

/// Writes a self-contained SVG document. Output depends only on the input.
void write_scatter_svg(std::ostream& out, const ScatterPlot& plot);

}  // namespace ovt
