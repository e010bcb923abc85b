#include "ovt/colorimetry.hpp"

#include <cmath>
#include <limits>
#include <optional>

#include <Eigen/LU>

namespace ovt {

Chromaticity Chromaticity::from_xy(double x, double y) {
  if (!std::isfinite(x) || !std::isfinite(y) || x < 0.0 || y < 0.0 || x + y > 1.0) {
    throw Error("invalid chromaticity (" + std::to_string(x) + ", " + std::to_string(y) + ")");
  }
  return {x, y, 1.0 - x - y};
}

Chromaticity xyz_to_chromaticity(const Tristimulus& t) {
  double s = t.sum();
  if (!std::isfinite(s) || s <= 0.0) {
    throw Error("tristimulus sum is zero; chromaticity undefined");
  }
  return {t.X / s, t.Y / s, t.Z / s};
}

Tristimulus chromaticity_to_xyz(const Chromaticity& c, double Y) {
  if (c.y <= 0.0) throw Error("chromaticity y must be positive");
  return {c.x * Y / c.y, Y, c.z * Y / c.y};
}

double delta_e_xyz(const Chromaticity& a, const Chromaticity& b) {
  double dx = a.x - b.x;
  double dy = a.y - b.y;
  double dz = a.z - b.z;
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

Colorimeter::Colorimeter(const SpectralDistribution& illuminant, Observer observer)
    : Colorimeter(illuminant, observer_tables(observer)) {}

Colorimeter::Colorimeter()
    : Colorimeter(standard_illuminant(StandardIlluminant::D65), Observer::degree2) {}

Colorimeter::Colorimeter(const SpectralDistribution& illuminant, const ObserverTables& tables)
    : observer_(tables.observer_id) {
  if (illuminant.grid() != kWorkingGrid || tables.cmf_y.grid() != kWorkingGrid) {
    throw Error("illuminant and observer must be sampled on the working grid");
  }
  std::size_t n = kWorkingGrid.count;
  wx_.resize(n);
  wy_.resize(n);
  wz_.resize(n);
  double norm = 0.0;
  for (std::size_t i = 0; i < n; ++i) norm += illuminant[i] * tables.cmf_y[i];
  if (!(norm > 0.0)) throw Error("illuminant has no luminous power");
  k_ = 100.0 / norm;
  for (std::size_t i = 0; i < n; ++i) {
    wx_[i] = k_ * illuminant[i] * tables.cmf_x[i];
    wy_[i] = k_ * illuminant[i] * tables.cmf_y[i];
    wz_[i] = k_ * illuminant[i] * tables.cmf_z[i];
  }
  white_ = (*this)(SpectralDistribution::constant(kWorkingGrid, 1.0));
}

Tristimulus Colorimeter::operator()(const SpectralDistribution& reflectance) const {
  if (reflectance.grid() != kWorkingGrid) {
    throw Error("reflectance must be resampled to the working grid");
  }
  Tristimulus t;
  auto s = reflectance.values();
  for (std::size_t i = 0; i < s.size(); ++i) {
    t.X += s[i] * wx_[i];
    t.Y += s[i] * wy_[i];
    t.Z += s[i] * wz_[i];
  }
  return t;
}

Tristimulus spd_to_xyz(const SpectralDistribution& reflectance, const SpectralDistribution& illuminant,
                       const ObserverTables& observer) {
  if (reflectance.grid() != illuminant.grid() || reflectance.grid() != observer.cmf_x.grid()) {
    throw Error("spectral grid mismatch");
  }
  return Colorimeter(illuminant, observer)(reflectance);
}

RgbColorspace::RgbColorspace(const std::array<Chromaticity, 3>& primaries, const Chromaticity& white)
    : primaries_(primaries), white_(white) {
  Eigen::Matrix3d p;
  for (int i = 0; i < 3; ++i) {
    const auto& c = primaries[static_cast<std::size_t>(i)];
    if (c.y <= 0.0) throw Error("primary chromaticity y must be positive");
    p.col(i) << c.x / c.y, 1.0, c.z / c.y;
  }
  Eigen::FullPivLU<Eigen::Matrix3d> lu(p);
  if (!lu.isInvertible() || std::abs(p.determinant()) < 1e-9) {
    throw Error("degenerate primaries: the RGB matrix is singular");
  }
  if (white.y <= 0.0) throw Error("white chromaticity y must be positive");
  Eigen::Vector3d w(white.x / white.y, 1.0, white.z / white.y);
  Eigen::Vector3d scale = lu.solve(w);
  to_xyz_ = p * scale.asDiagonal();
  from_xyz_ = to_xyz_.inverse();
  if (!contains(white)) throw Error("white point lies outside the primaries triangle");
}

const RgbColorspace& RgbColorspace::rec709() {
  static const RgbColorspace space(
      {Chromaticity::from_xy(0.64, 0.33), Chromaticity::from_xy(0.30, 0.60),
       Chromaticity::from_xy(0.15, 0.06)},
      Chromaticity::from_xy(0.3127, 0.3290));
  return space;
}

bool RgbColorspace::contains(const Chromaticity& c, double tolerance) const {
  // Barycentric coordinates with respect to the primaries triangle.
  auto cross = [](double ax, double ay, double bx, double by) { return ax * by - ay * bx; };
  const auto& r = primaries_[0];
  const auto& g = primaries_[1];
  const auto& b = primaries_[2];
  double area = cross(g.x - r.x, g.y - r.y, b.x - r.x, b.y - r.y);
  double w_r = cross(g.x - c.x, g.y - c.y, b.x - c.x, b.y - c.y) / area;
  double w_g = cross(b.x - c.x, b.y - c.y, r.x - c.x, r.y - c.y) / area;
  double w_b = 1.0 - w_r - w_g;
  return w_r >= -tolerance && w_g >= -tolerance && w_b >= -tolerance;
}

TargetColor target_from_weights(const std::array<double, 3>& rgb_weights, std::string name) {
  for (double w : rgb_weights) {
    if (!std::isfinite(w) || w < 0.0) throw Error("RGB weights must be non-negative");
  }
  if (rgb_weights[0] == 0.0 && rgb_weights[1] == 0.0 && rgb_weights[2] == 0.0) {
    throw Error("RGB weights are all zero");
  }
  const auto& space = RgbColorspace::rec709();
  Eigen::Vector3d xyz = space.to_xyz() * Eigen::Vector3d(rgb_weights[0], rgb_weights[1], rgb_weights[2]);
  TargetColor target;
  target.name = std::move(name);
  target.rgb_weights = rgb_weights;
  target.xy = xyz_to_chromaticity(Tristimulus::from(xyz));
  target.L_C = xyz.y();
  return target;
}

namespace {

std::vector<Eigen::Vector2d> spectral_locus(const ObserverTables& observer) {
  std::vector<Eigen::Vector2d> locus;
  locus.reserve(observer.cmf_x.size());
  for (std::size_t i = 0; i < observer.cmf_x.size(); ++i) {
    double s = observer.cmf_x[i] + observer.cmf_y[i] + observer.cmf_z[i];
    locus.emplace_back(observer.cmf_x[i] / s, observer.cmf_y[i] / s);
  }
  return locus;
}

struct RayHit {
  double t;
  double wavelength_nm;
  bool purple;
};

std::optional<RayHit> cast(const std::vector<Eigen::Vector2d>& locus, WavelengthGrid grid,
                           const Eigen::Vector2d& origin, const Eigen::Vector2d& dir,
                           bool include_purple) {
  auto cross = [](const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
    return a.x() * b.y() - a.y() * b.x();
  };
  std::optional<RayHit> best;
  auto test = [&](const Eigen::Vector2d& p, const Eigen::Vector2d& q, double nm0, double step,
                  bool purple) {
    Eigen::Vector2d e = q - p;
    double denom = cross(dir, e);
    if (std::abs(denom) < 1e-18) return;
    Eigen::Vector2d w = p - origin;
    double t = cross(w, e) / denom;
    double u = cross(w, dir) / denom;
    if (t <= 0.0 || u < 0.0 || u > 1.0) return;
    if (!best || t < best->t) best = RayHit{t, nm0 + u * step, purple};
  };
  for (std::size_t i = 0; i + 1 < locus.size(); ++i) {
    test(locus[i], locus[i + 1], grid.wavelength(i), grid.step_nm, false);
  }
  if (include_purple) test(locus.back(), locus.front(), 0.0, 0.0, true);
  return best;
}

}  // namespace

bool inside_spectral_locus(const Chromaticity& c, const ObserverTables& observer) {
  auto locus = spectral_locus(observer);
  bool inside = false;
  for (std::size_t i = 0, j = locus.size() - 1; i < locus.size(); j = i++) {
    const auto& a = locus[i];
    const auto& b = locus[j];
    if ((a.y() > c.y) != (b.y() > c.y) &&
        c.x < (b.x() - a.x()) * (c.y - a.y()) / (b.y() - a.y()) + a.x()) {
      inside = !inside;
    }
  }
  return inside;
}

DominantWavelength dominant_wavelength(const Chromaticity& c, const Chromaticity& white,
                                       const ObserverTables& observer) {
  Eigen::Vector2d origin(white.x, white.y);
  Eigen::Vector2d dir(c.x - white.x, c.y - white.y);
  if (dir.norm() < 1e-6) throw Error("colour coincides with the white point");

  auto locus = spectral_locus(observer);
  auto grid = observer.cmf_x.grid();

  auto hit = cast(locus, grid, origin, dir, true);
  if (!hit) throw Error("ray from white does not meet the spectral locus");
  if (!hit->purple) return {hit->wavelength_nm, false};

  auto back = cast(locus, grid, origin, -dir, false);
  if (!back) throw Error("no complementary wavelength found");
  return {back->wavelength_nm, true};
}

}  // namespace ovt
