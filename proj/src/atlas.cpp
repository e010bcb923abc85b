#include "ovt/atlas.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

#include "ovt/chart.hpp"

namespace ovt {

std::array<double, 3> DisplayGamut::to_rgb_linear(const Tristimulus& xyz) const {
  Eigen::Vector3d rgb = space.from_xyz() * (xyz.vec() / white_luminance);
  return {rgb.x(), rgb.y(), rgb.z()};
}

Tristimulus DisplayGamut::from_rgb_linear(const std::array<double, 3>& rgb) const {
  Eigen::Vector3d xyz = space.to_xyz() * Eigen::Vector3d(rgb[0], rgb[1], rgb[2]);
  return Tristimulus::from(xyz * white_luminance);
}

Tristimulus DisplayGamut::white_xyz() const {
  return chromaticity_to_xyz(space.white(), white_luminance);
}

bool gamut_contains(const Tristimulus& xyz, const DisplayGamut& gamut) {
  for (double c : gamut.to_rgb_linear(xyz)) {
    if (!(c >= -kGamutTolerance && c <= 1.0 + kGamutTolerance)) return false;
  }
  return true;
}

Cam16ViewingConditions display_viewing_conditions(const DisplayGamut& gamut, double L_A, double Y_b,
                                                  Surround surround, std::optional<double> D) {
  return {chromaticity_to_xyz(gamut.space.white(), 100.0), L_A, Y_b, surround, D};
}

Atlas generate_atlas(const AtlasSpec& spec) {
  if (!(spec.spacing > 0.0)) throw Error("atlas spacing must be positive");
  if (!(spec.J > 0.0 && spec.J < 100.0)) throw Error("atlas lightness J must lie in (0, 100)");
  if (!(spec.bound >= 0.0)) throw Error("atlas bound must be non-negative");

  const double J_prime = ucs_lightness(spec.J);
  const int reach = static_cast<int>(std::floor(spec.bound / spec.spacing));
  const double pi = std::numbers::pi;

  Atlas atlas;
  // Row-major over (j, i) so the output is already in (b'_M, a'_M) order.
  for (int j = -reach; j <= reach; ++j) {
    for (int i = -reach; i <= reach; ++i) {
      ++atlas.diagnostics.candidates;
      double a = i * spec.spacing;
      double b = j * spec.spacing;
      double M = colourfulness_from_ucs(std::hypot(a, b));
      double h = std::atan2(b, a) * 180.0 / pi;
      if (h < 0.0) h += 360.0;
      double C = M / std::pow(spec.vc.F_L(), 0.25);

      auto xyz = try_cam16_inverse(spec.J, C, h, spec.vc);
      if (!xyz) {
        ++atlas.diagnostics.inversion_failures;
        continue;
      }
      if (!gamut_contains(*xyz, spec.gamut)) {
        ++atlas.diagnostics.out_of_gamut;
        continue;
      }
      AtlasPoint p;
      p.i = i;
      p.j = j;
      p.J = spec.J;
      p.ucs = {J_prime, a, b};
      p.xyz = *xyz;
      p.appearance = cam16_forward(*xyz, spec.vc);
      p.xy = xyz_to_chromaticity(*xyz);
      p.rgb_linear = spec.gamut.to_rgb_linear(*xyz);
      for (double& c : p.rgb_linear) c = std::clamp(c, 0.0, 1.0);
      atlas.points.push_back(p);
    }
  }
  return atlas;
}

std::vector<Chromaticity> atlas_to_xy(std::span<const AtlasPoint> points) {
  std::vector<Chromaticity> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(xyz_to_chromaticity(p.xyz));
  return out;
}

void write_atlas_csv(std::ostream& out, std::span<const AtlasPoint> points) {
  out << "J,a_m_prime,b_m_prime,X,Y,Z,x,y,R_lin,G_lin,B_lin\n";
  auto old = out.precision(std::numeric_limits<double>::max_digits10);
  for (const auto& p : points) {
    out << p.J << ',' << p.ucs.a_M << ',' << p.ucs.b_M << ',' << p.xyz.X << ','
        << p.xyz.Y << ',' << p.xyz.Z << ',' << p.xy.x << ',' << p.xy.y << ',' << p.rgb_linear[0]
        << ',' << p.rgb_linear[1] << ',' << p.rgb_linear[2] << '\n';
  }
  out.precision(old);
}

namespace {

std::array<double, 3> display_fill(const AtlasPoint& p) {
  return {rec709_oetf(p.rgb_linear[0]), rec709_oetf(p.rgb_linear[1]), rec709_oetf(p.rgb_linear[2])};
}

std::string level(double J) {
  std::ostringstream s;
  s << "J = " << J;
  return s.str();
}

}  // namespace

ScatterPlot ucs_scatter(std::span<const AtlasPoint> points, double J, double bound) {
  ScatterPlot plot;
  plot.title = "CAM16-UCS slice, " + level(J);
  plot.x_label = "a'_M";
  plot.y_label = "b'_M";
  plot.x_range = {-bound, bound};
  plot.y_range = {-bound, bound};
  plot.marker_radius = 2.5;
  for (const auto& p : points) plot.points.push_back({p.ucs.a_M, p.ucs.b_M, display_fill(p)});
  return plot;
}

ScatterPlot xy_scatter(std::span<const AtlasPoint> points, const DisplayGamut& gamut, double J) {
  ScatterPlot plot;
  plot.title = "Chromaticity of slice, " + level(J);
  plot.x_label = "x";
  plot.y_label = "y";
  plot.x_range = {0.0, 0.8};
  plot.y_range = {0.0, 0.9};
  plot.marker_radius = 2.0;
  for (const auto& c : gamut.space.primaries()) plot.outline.push_back({c.x, c.y});
  for (const auto& p : points) plot.points.push_back({p.xy.x, p.xy.y, display_fill(p)});
  return plot;
}

}  // namespace ovt
