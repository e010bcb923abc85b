#pragma once

#include <optional>
#include <string_view>

#include "ovt/colorimetry.hpp"

namespace ovt {

enum class Surround { average, dim, dark };

struct SurroundParams {
  double F;
  double c;
  double Nc;
};

SurroundParams surround_params(Surround surround);
Surround parse_surround(std::string_view text);
std::string_view to_string(Surround surround);

/// CAM16 adapting field. Derived constants are computed once in the
/// constructor; the object is immutable afterwards.
class Cam16ViewingConditions {
 public:
  /// `white` is rescaled to Y_w = 100. An empty `D` selects the
  /// surround-derived degree of adaptation, clamped to [0, 1].
  Cam16ViewingConditions(const Tristimulus& white, double L_A, double Y_b, Surround surround,
                         std::optional<double> D = std::nullopt);

  [[nodiscard]] const Tristimulus& white() const { return white_; }
  [[nodiscard]] double L_A() const { return L_A_; }
  [[nodiscard]] double Y_b() const { return Y_b_; }
  [[nodiscard]] Surround surround() const { return surround_; }
  [[nodiscard]] double D() const { return D_; }

  [[nodiscard]] double F_L() const { return F_L_; }
  [[nodiscard]] double n() const { return n_; }
  [[nodiscard]] double z() const { return z_; }
  [[nodiscard]] double N_bb() const { return N_bb_; }
  [[nodiscard]] double N_cb() const { return N_cb_; }
  [[nodiscard]] double A_w() const { return A_w_; }
  [[nodiscard]] const SurroundParams& surround_params() const { return sp_; }
  [[nodiscard]] const Eigen::Vector3d& D_RGB() const { return D_RGB_; }

 private:
  Tristimulus white_;
  double L_A_;
  double Y_b_;
  Surround surround_;
  SurroundParams sp_;
  double D_;
  Eigen::Vector3d D_RGB_;
  double F_L_;
  double n_;
  double z_;
  double N_bb_;
  double N_cb_;
  double A_w_;
};

struct Cam16Appearance {
  double J = 0.0;  ///< lightness
  double C = 0.0;  ///< chroma
  double h = 0.0;  ///< hue angle, degrees in [0, 360)
  double M = 0.0;  ///< colourfulness
  double s = 0.0;  ///< saturation
  double Q = 0.0;  ///< brightness
};

/// CAM16-UCS coordinates (J', a'_M, b'_M).
struct UcsPoint {
  double J_prime = 0.0;
  double a_M = 0.0;
  double b_M = 0.0;

  friend bool operator==(const UcsPoint&, const UcsPoint&) = default;
};

Cam16Appearance cam16_forward(const Tristimulus& stimulus, const Cam16ViewingConditions& vc);

/// Inverse model from lightness, chroma and hue. Throws when the
/// appearance lies outside the invertible range (compression saturates,
/// the hue cannot be realised, or the result is not a physical stimulus).
Tristimulus cam16_inverse(double J, double C, double h, const Cam16ViewingConditions& vc);

/// Same, from colourfulness instead of chroma.
Tristimulus cam16_inverse_jmh(double J, double M, double h, const Cam16ViewingConditions& vc);

/// Non-throwing variant; empty on inversion failure.
std::optional<Tristimulus> try_cam16_inverse(double J, double C, double h,
                                             const Cam16ViewingConditions& vc);

UcsPoint to_ucs(const Cam16Appearance& appearance);

/// J' = 1.7 J / (1 + 0.007 J) and its inverse.
double ucs_lightness(double J);
double lightness_from_ucs(double J_prime);
/// M' = ln(1 + 0.0228 M) / 0.0228 and its inverse.
double ucs_colourfulness(double M);
double colourfulness_from_ucs(double M_prime);

double delta_e_ucs(const UcsPoint& p, const UcsPoint& q);

}  // namespace ovt
