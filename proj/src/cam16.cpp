#include "ovt/cam16.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/LU>

namespace ovt {

namespace {

// CAT16 cone-like space.
const Eigen::Matrix3d& m16() {
  static const Eigen::Matrix3d m = (Eigen::Matrix3d() << 0.401288, 0.650173, -0.051461,  //
                                    -0.250268, 1.204414, 0.045854,                      //
                                    -0.002079, 0.048952, 0.953127)
                                       .finished();
  return m;
}

const Eigen::Matrix3d& m16_inverse() {
  static const Eigen::Matrix3d m = m16().inverse();
  return m;
}

constexpr double kDegToRad = std::numbers::pi / 180.0;

double compress(double x, double F_L) {
  double p = std::pow(F_L * std::abs(x) / 100.0, 0.42);
  return std::copysign(400.0 * p / (p + 27.13), x) + 0.1;
}

double eccentricity(double h_deg) {
  double hp = h_deg < 20.14 ? h_deg + 360.0 : h_deg;
  return 0.25 * (std::cos(hp * kDegToRad + 2.0) + 3.8);
}

double achromatic(const Eigen::Vector3d& a, double N_bb) {
  return (2.0 * a.x() + a.y() + 0.05 * a.z() - 0.305) * N_bb;
}

std::string lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

SurroundParams surround_params(Surround surround) {
  switch (surround) {
    case Surround::average:
      return {1.0, 0.69, 1.0};
    case Surround::dim:
      return {0.9, 0.59, 0.9};
    case Surround::dark:
      return {0.8, 0.525, 0.8};
  }
  throw Error("unknown surround");
}

Surround parse_surround(std::string_view text) {
  auto key = lower(text);
  if (key == "average") return Surround::average;
  if (key == "dim") return Surround::dim;
  if (key == "dark") return Surround::dark;
  throw Error("unknown surround '" + std::string(text) + "' (expected average, dim or dark)");
}

std::string_view to_string(Surround surround) {
  switch (surround) {
    case Surround::average:
      return "average";
    case Surround::dim:
      return "dim";
    case Surround::dark:
      return "dark";
  }
  return "?";
}

Cam16ViewingConditions::Cam16ViewingConditions(const Tristimulus& white, double L_A, double Y_b,
                                               Surround surround, std::optional<double> D)
    : L_A_(L_A), Y_b_(Y_b), surround_(surround), sp_(ovt::surround_params(surround)) {
  if (!(white.X > 0.0 && white.Y > 0.0 && white.Z > 0.0)) {
    throw Error("adopted white must have positive tristimulus values");
  }
  if (!(L_A > 0.0) || !std::isfinite(L_A)) throw Error("adapting luminance L_A must be positive");
  if (!(Y_b > 0.0 && Y_b <= 100.0)) throw Error("background Y_b must lie in (0, 100]");
  white_ = (100.0 / white.Y) * white;

  if (D) {
    if (!(*D >= 0.0 && *D <= 1.0)) throw Error("degree of adaptation D must lie in [0, 1]");
    D_ = *D;
  } else {
    D_ = std::clamp(sp_.F * (1.0 - (1.0 / 3.6) * std::exp((-L_A - 42.0) / 92.0)), 0.0, 1.0);
  }

  Eigen::Vector3d rgb_w = m16() * white_.vec();
  for (int i = 0; i < 3; ++i) D_RGB_[i] = D_ * white_.Y / rgb_w[i] + 1.0 - D_;

  double k = 1.0 / (5.0 * L_A + 1.0);
  double k4 = k * k * k * k;
  F_L_ = 0.2 * k4 * (5.0 * L_A) + 0.1 * (1.0 - k4) * (1.0 - k4) * std::cbrt(5.0 * L_A);
  n_ = Y_b / white_.Y;
  z_ = 1.48 + std::sqrt(n_);
  N_bb_ = 0.725 * std::pow(n_, -0.2);
  N_cb_ = N_bb_;

  Eigen::Vector3d rgb_wc = D_RGB_.cwiseProduct(rgb_w);
  Eigen::Vector3d rgb_aw(compress(rgb_wc[0], F_L_), compress(rgb_wc[1], F_L_),
                         compress(rgb_wc[2], F_L_));
  A_w_ = achromatic(rgb_aw, N_bb_);
}

Cam16Appearance cam16_forward(const Tristimulus& stimulus, const Cam16ViewingConditions& vc) {
  if (!(stimulus.X >= 0.0 && stimulus.Y >= 0.0 && stimulus.Z >= 0.0)) {
    throw Error("CAM16 stimulus must be non-negative");
  }
  if (!std::isfinite(stimulus.sum())) throw Error("CAM16 stimulus is not finite");

  const auto& sp = vc.surround_params();
  Eigen::Vector3d rgb_c = vc.D_RGB().cwiseProduct(m16() * stimulus.vec());
  Eigen::Vector3d ra(compress(rgb_c[0], vc.F_L()), compress(rgb_c[1], vc.F_L()),
                     compress(rgb_c[2], vc.F_L()));

  double a = ra.x() - 12.0 * ra.y() / 11.0 + ra.z() / 11.0;
  double b = (ra.x() + ra.y() - 2.0 * ra.z()) / 9.0;
  double h = std::atan2(b, a) / kDegToRad;
  if (h < 0.0) h += 360.0;
  if (h >= 360.0) h -= 360.0;

  double A = achromatic(ra, vc.N_bb());
  if (A < 0.0) throw Error("stimulus lies below the model's achromatic floor");

  Cam16Appearance out;
  out.h = h;
  out.J = 100.0 * std::pow(A / vc.A_w(), sp.c * vc.z());
  out.Q = (4.0 / sp.c) * std::sqrt(out.J / 100.0) * (vc.A_w() + 4.0) * std::pow(vc.F_L(), 0.25);

  double e_t = eccentricity(h);
  double t = (50000.0 / 13.0 * sp.Nc * vc.N_cb() * e_t * std::hypot(a, b)) /
             (ra.x() + ra.y() + 21.0 / 20.0 * ra.z());
  out.C = std::pow(t, 0.9) * std::sqrt(out.J / 100.0) * std::pow(1.64 - std::pow(0.29, vc.n()), 0.73);
  out.M = out.C * std::pow(vc.F_L(), 0.25);
  out.s = out.Q > 0.0 ? 100.0 * std::sqrt(out.M / out.Q) : 0.0;
  return out;
}

std::optional<Tristimulus> try_cam16_inverse(double J, double C, double h,
                                             const Cam16ViewingConditions& vc) {
  if (!(J > 0.0) || !std::isfinite(J) || !(C >= 0.0) || !std::isfinite(C) || !std::isfinite(h)) {
    return std::nullopt;
  }
  const auto& sp = vc.surround_params();
  h = std::fmod(h, 360.0);
  if (h < 0.0) h += 360.0;

  double t = std::pow(C / (std::sqrt(J / 100.0) * std::pow(1.64 - std::pow(0.29, vc.n()), 0.73)),
                      1.0 / 0.9);
  double A = vc.A_w() * std::pow(J / 100.0, 1.0 / (sp.c * vc.z()));
  double p2 = A / vc.N_bb() + 0.305;
  constexpr double p3 = 21.0 / 20.0;

  double a = 0.0;
  double b = 0.0;
  if (t > 0.0) {
    double e_t = eccentricity(h);
    double p1 = (50000.0 / 13.0) * sp.Nc * vc.N_cb() * e_t / t;
    double hr = h * kDegToRad;
    double sin_h = std::sin(hr);
    double cos_h = std::cos(hr);
    if (std::abs(sin_h) >= std::abs(cos_h)) {
      double p4 = p1 / sin_h;
      b = p2 * (2.0 + p3) * (460.0 / 1403.0) /
          (p4 + (2.0 + p3) * (220.0 / 1403.0) * (cos_h / sin_h) - 27.0 / 1403.0 +
           p3 * (6300.0 / 1403.0));
      a = b * cos_h / sin_h;
    } else {
      double p5 = p1 / cos_h;
      a = p2 * (2.0 + p3) * (460.0 / 1403.0) /
          (p5 + (2.0 + p3) * (220.0 / 1403.0) -
           (27.0 / 1403.0 - p3 * (6300.0 / 1403.0)) * (sin_h / cos_h));
      b = a * sin_h / cos_h;
    }
    // The closed form can land on the opposite hue when the denominator
    // changes sign; such appearances have no stimulus.
    if (!(a * cos_h + b * sin_h > 0.0)) return std::nullopt;
  }

  Eigen::Vector3d ra((460.0 * p2 + 451.0 * a + 288.0 * b) / 1403.0,
                     (460.0 * p2 - 891.0 * a - 261.0 * b) / 1403.0,
                     (460.0 * p2 - 220.0 * a - 6300.0 * b) / 1403.0);
  Eigen::Vector3d rgb_c;
  for (int i = 0; i < 3; ++i) {
    double x = ra[i] - 0.1;
    if (!(std::abs(x) < 400.0)) return std::nullopt;
    rgb_c[i] = std::copysign(
        (100.0 / vc.F_L()) * std::pow(27.13 * std::abs(x) / (400.0 - std::abs(x)), 1.0 / 0.42), x);
  }
  Eigen::Vector3d xyz = m16_inverse() * rgb_c.cwiseQuotient(vc.D_RGB());

  double floor = -1e-9 * vc.white().Y;
  for (int i = 0; i < 3; ++i) {
    if (!std::isfinite(xyz[i]) || xyz[i] < floor) return std::nullopt;
    xyz[i] = std::max(xyz[i], 0.0);
  }
  return Tristimulus::from(xyz);
}

Tristimulus cam16_inverse(double J, double C, double h, const Cam16ViewingConditions& vc) {
  if (!(J > 0.0)) throw Error("CAM16 inverse requires J > 0");
  if (!(C >= 0.0)) throw Error("CAM16 inverse requires non-negative chroma");
  auto xyz = try_cam16_inverse(J, C, h, vc);
  if (!xyz) {
    throw Error("appearance (J=" + std::to_string(J) + ", C=" + std::to_string(C) +
                ", h=" + std::to_string(h) + ") is outside the invertible range of CAM16");
  }
  return *xyz;
}

Tristimulus cam16_inverse_jmh(double J, double M, double h, const Cam16ViewingConditions& vc) {
  return cam16_inverse(J, M / std::pow(vc.F_L(), 0.25), h, vc);
}

double ucs_lightness(double J) { return 1.7 * J / (1.0 + 0.007 * J); }
double lightness_from_ucs(double J_prime) { return J_prime / (1.7 - 0.007 * J_prime); }
double ucs_colourfulness(double M) { return std::log1p(0.0228 * M) / 0.0228; }
double colourfulness_from_ucs(double M_prime) { return std::expm1(0.0228 * M_prime) / 0.0228; }

UcsPoint to_ucs(const Cam16Appearance& appearance) {
  double Mp = ucs_colourfulness(appearance.M);
  double hr = appearance.h * kDegToRad;
  UcsPoint p{ucs_lightness(appearance.J), Mp * std::cos(hr), Mp * std::sin(hr)};
  if (appearance.M == 0.0) p.a_M = p.b_M = 0.0;
  return p;
}

double delta_e_ucs(const UcsPoint& p, const UcsPoint& q) {
  double dj = p.J_prime - q.J_prime;
  double da = p.a_M - q.a_M;
  double db = p.b_M - q.b_M;
  return std::sqrt(dj * dj + da * da + db * db);
}

}  // namespace ovt
