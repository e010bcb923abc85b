#pragma once

#include <array>
#include <string>

#include <Eigen/Core>

#include "ovt/observer.hpp"
#include "ovt/spectral.hpp"

namespace ovt {

/// CIE XYZ. Y is on the 0-100 scale unless a function says otherwise.
struct Tristimulus {
  double X = 0.0;
  double Y = 0.0;
  double Z = 0.0;

  [[nodiscard]] double sum() const { return X + Y + Z; }
  [[nodiscard]] Eigen::Vector3d vec() const { return {X, Y, Z}; }
  static Tristimulus from(const Eigen::Vector3d& v) { return {v.x(), v.y(), v.z()}; }

  friend Tristimulus operator+(const Tristimulus& a, const Tristimulus& b) {
    return {a.X + b.X, a.Y + b.Y, a.Z + b.Z};
  }
  friend Tristimulus operator*(double k, const Tristimulus& t) { return {k * t.X, k * t.Y, k * t.Z}; }
  friend bool operator==(const Tristimulus&, const Tristimulus&) = default;
};

/// Chromaticity coordinates; x + y + z = 1.
struct Chromaticity {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  /// Validating factory; z is completed as 1 - x - y.
  static Chromaticity from_xy(double x, double y);

  friend bool operator==(const Chromaticity&, const Chromaticity&) = default;
};

/// Projects XYZ onto the chromaticity plane. Throws for a zero-sum input.
Chromaticity xyz_to_chromaticity(const Tristimulus& t);

/// Chromaticity plus luminance back to XYZ.
Tristimulus chromaticity_to_xyz(const Chromaticity& c, double Y);

/// Euclidean distance over the (x, y, z) triples. This is the objective of
/// the optimal colour search and of database matching.
double delta_e_xyz(const Chromaticity& a, const Chromaticity& b);

/// TV relative luminance (0..1) from Y on the 0..100 scale, and back.
inline double relative_luminance_to_lc(double Y) { return Y / 100.0; }
inline double lc_to_relative_luminance(double L_C) { return L_C * 100.0; }

/// Integrates reflectance x illuminant x CMF on the working grid with the
/// perfect-reflector normalisation (S = 1 gives Y = 100). Construct once per
/// illuminant/observer pair; evaluation is then a single weighted sum.
class Colorimeter {
 public:
  Colorimeter(const SpectralDistribution& illuminant, Observer observer);
  Colorimeter(const SpectralDistribution& illuminant, const ObserverTables& tables);
  /// D65 with the 2 degree observer.
  Colorimeter();

  [[nodiscard]] Tristimulus operator()(const SpectralDistribution& reflectance) const;
  [[nodiscard]] const Tristimulus& white() const { return white_; }
  [[nodiscard]] Chromaticity white_chromaticity() const { return xyz_to_chromaticity(white_); }
  [[nodiscard]] Observer observer() const { return observer_; }
  [[nodiscard]] double normalisation() const { return k_; }

 private:
  std::vector<double> wx_, wy_, wz_;
  double k_ = 0.0;
  Tristimulus white_;
  Observer observer_;
};

/// One-shot form of Colorimeter. All three inputs must share the working grid.
Tristimulus spd_to_xyz(const SpectralDistribution& reflectance, const SpectralDistribution& illuminant,
                       const ObserverTables& observer);

/// Additive RGB system defined by primary and white chromaticities.
class RgbColorspace {
 public:
  RgbColorspace(const std::array<Chromaticity, 3>& primaries, const Chromaticity& white);

  static const RgbColorspace& rec709();

  [[nodiscard]] const std::array<Chromaticity, 3>& primaries() const { return primaries_; }
  [[nodiscard]] const Chromaticity& white() const { return white_; }
  /// Linear RGB to XYZ with the white at Y = 1.
  [[nodiscard]] const Eigen::Matrix3d& to_xyz() const { return to_xyz_; }
  [[nodiscard]] const Eigen::Matrix3d& from_xyz() const { return from_xyz_; }
  /// Luminance row of to_xyz().
  [[nodiscard]] Eigen::Vector3d luma_weights() const { return to_xyz_.row(1).transpose(); }
  /// True if the chromaticity lies inside or on the primaries triangle.
  [[nodiscard]] bool contains(const Chromaticity& c, double tolerance = 1e-9) const;

 private:
  std::array<Chromaticity, 3> primaries_;
  Chromaticity white_;
  Eigen::Matrix3d to_xyz_;
  Eigen::Matrix3d from_xyz_;
};

/// Named HDTV reference colour.
struct TargetColor {
  std::string name;
  std::array<double, 3> rgb_weights{};
  Chromaticity xy;
  double L_C = 0.0;
};

/// Mixes the Rec.709 primaries with the given linear weights.
TargetColor target_from_weights(const std::array<double, 3>& rgb_weights, std::string name = {});

/// Result of a dominant wavelength query. For colours whose ray leaves
/// through the purple line, `complementary` is set and `wavelength_nm`
/// holds the complementary wavelength instead.
struct DominantWavelength {
  double wavelength_nm = 0.0;
  bool complementary = false;
};

/// True if c lies inside the region bounded by the spectral locus and the
/// purple line.
bool inside_spectral_locus(const Chromaticity& c, const ObserverTables& observer);

DominantWavelength dominant_wavelength(const Chromaticity& c, const Chromaticity& white,
                                       const ObserverTables& observer);

}  // namespace ovt
