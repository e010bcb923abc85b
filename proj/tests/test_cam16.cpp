#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ovt/atlas.hpp"
#include "ovt/cam16.hpp"
#include "ovt/error.hpp"

using namespace ovt;

namespace {

struct Fixture {
  Tristimulus xyz;
  Tristimulus white;
  double L_A;
  Surround surround;
  Cam16Appearance expected;
  UcsPoint ucs;
};

// Reference values from the colour-science implementation (XYZ_to_CAM16,
// illuminant not discounted, Y_b = 20). The first case is the standard
// CAM16 worked example.
const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> f{
      {{19.01, 20.00, 21.78}, {95.05, 100.0, 108.88}, 318.31, Surround::average,
       {41.7312079051, 0.1033557387, 217.0679597674, 0.1074367723, 2.3450150730, 195.3717089928},
       {54.90445024274, -0.085621245626, -0.06467960478}},
      {{57.06, 43.06, 31.96}, {95.05, 100.0, 108.88}, 31.83, Surround::dim,
       {69.5733982401, 46.0184342983, 17.3808613540, 39.4835082850, 46.4069380844, 183.3369090833},
       {79.538453501893, 26.871028194996, 8.411013541682}},
      {{3.53, 6.56, 2.14}, {109.85, 100.0, 35.58}, 318.31, Surround::dark,
       {30.8873258279, 48.6880745859, 174.5429179813, 50.6105384190, 47.8294276689, 221.2333468056},
       {43.173792857038, -33.500525863523, 3.200409004531}},
      {{19.01, 20.00, 21.78}, {95.05, 100.0, 108.88}, 50.0, Surround::average,
       {41.4990779325, 1.2803168094, 209.9872692531, 1.1406326099, 9.2646814600, 132.8877045847},
       {54.667791814842, -0.975315544869, -0.562809784464}},
  };
  return f;
}

Cam16ViewingConditions d65_vc(Surround s, double L_A = 50.0) {
  return display_viewing_conditions(DisplayGamut::rec709(), L_A, 20.0, s);
}

}  // namespace

TEST(Cam16, PinnedFixtures) {
  for (const auto& f : fixtures()) {
    Cam16ViewingConditions vc(f.white, f.L_A, 20.0, f.surround);
    auto a = cam16_forward(f.xyz, vc);
    EXPECT_NEAR(a.J, f.expected.J, 1e-6);
    EXPECT_NEAR(a.C, f.expected.C, 1e-6);
    EXPECT_NEAR(a.h, f.expected.h, 1e-6);
    EXPECT_NEAR(a.M, f.expected.M, 1e-6);
    EXPECT_NEAR(a.s, f.expected.s, 1e-6);
    EXPECT_NEAR(a.Q, f.expected.Q, 1e-6);
    auto u = to_ucs(a);
    EXPECT_NEAR(u.J_prime, f.ucs.J_prime, 1e-6);
    EXPECT_NEAR(u.a_M, f.ucs.a_M, 1e-6);
    EXPECT_NEAR(u.b_M, f.ucs.b_M, 1e-6);
  }
}

TEST(Cam16, WhiteHasLightness100) {
  for (auto s : {Surround::average, Surround::dim, Surround::dark}) {
    auto vc = d65_vc(s);
    EXPECT_NEAR(cam16_forward(vc.white(), vc).J, 100.0, 1e-6);
  }
}

TEST(Cam16, NeutralGreyIsAchromaticWithFullAdaptation) {
  auto vc = display_viewing_conditions(DisplayGamut::rec709(), 50.0, 20.0, Surround::average, 1.0);
  auto a = cam16_forward(0.2 * vc.white(), vc);
  EXPECT_NEAR(a.C, 0.0, 1e-6);
  auto u = to_ucs(a);
  EXPECT_LT(std::abs(u.a_M), 1e-6);
  EXPECT_LT(std::abs(u.b_M), 1e-6);
}

TEST(Cam16, AchromaticRayWithFullAdaptation) {
  for (auto s : {Surround::average, Surround::dim, Surround::dark}) {
    auto vc = display_viewing_conditions(DisplayGamut::rec709(), 50.0, 20.0, s, 1.0);
    for (double k : {0.05, 0.2, 0.6, 1.0}) {
      auto u = to_ucs(cam16_forward(k * vc.white(), vc));
      EXPECT_LT(std::abs(u.a_M), 1e-6) << k;
      EXPECT_LT(std::abs(u.b_M), 1e-6) << k;
    }
  }
}

// With D < 1 the grey axis is not the adopted white's chromaticity, so this
// runs with full adaptation.
TEST(Cam16, AchromaticInverse) {
  auto vc = display_viewing_conditions(DisplayGamut::rec709(), 50.0, 20.0, Surround::average, 1.0);
  auto x = cam16_inverse(40.0, 0.0, 123.0, vc);
  EXPECT_NEAR(x.X / x.Y, vc.white().X / vc.white().Y, 1e-9);
  EXPECT_NEAR(x.Z / x.Y, vc.white().Z / vc.white().Y, 1e-9);
}

TEST(Cam16, ReverseRoundTrip) {
  for (auto s : {Surround::average, Surround::dim, Surround::dark}) {
    auto vc = d65_vc(s);
    auto a = cam16_forward(cam16_inverse(40.0, 30.0, 120.0, vc), vc);
    EXPECT_NEAR(a.J, 40.0, 1e-6);
    EXPECT_NEAR(a.C, 30.0, 1e-6);
    EXPECT_NEAR(a.h, 120.0, 1e-6);
    auto m = cam16_forward(cam16_inverse_jmh(40.0, a.M, 120.0, vc), vc);
    EXPECT_NEAR(m.C, 30.0, 1e-6);
  }
}

TEST(Cam16, RandomRoundTripsPerSurround) {
  const auto gamut = DisplayGamut::rec709();
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (auto s : {Surround::average, Surround::dim, Surround::dark}) {
    auto vc = d65_vc(s);
    for (int n = 0; n < 1000; ++n) {
      auto xyz = gamut.from_rgb_linear({u(rng), u(rng), u(rng)});
      if (xyz.Y < 1e-3) continue;
      auto a = cam16_forward(xyz, vc);
      auto back = cam16_inverse(a.J, a.C, a.h, vc);
      double scale = std::max(1.0, std::max({xyz.X, xyz.Y, xyz.Z}));
      ASSERT_NEAR(back.X, xyz.X, 1e-6 * scale);
      ASSERT_NEAR(back.Y, xyz.Y, 1e-6 * scale);
      ASSERT_NEAR(back.Z, xyz.Z, 1e-6 * scale);
      auto again = cam16_forward(back, vc);
      ASSERT_NEAR(again.J, a.J, 1e-6);
      ASSERT_NEAR(again.C, a.C, 1e-6);
    }
  }
}

TEST(Cam16, HueContinuousAcrossWrap) {
  auto vc = d65_vc(Surround::average);
  auto below = cam16_forward(cam16_inverse(50.0, 40.0, 359.9999, vc), vc);
  auto above = cam16_forward(cam16_inverse(50.0, 40.0, 0.0001, vc), vc);
  double dh = std::remainder(above.h - below.h, 360.0);
  EXPECT_LT(std::abs(dh), 1e-3);
  EXPECT_NEAR(above.J, below.J, 1e-3);
  EXPECT_NEAR(above.C, below.C, 1e-3);
  EXPECT_NEAR(above.M, below.M, 1e-3);
  auto u1 = to_ucs(below);
  auto u2 = to_ucs(above);
  EXPECT_LT(delta_e_ucs(u1, u2), 1e-3);
}

TEST(Cam16, Errors) {
  auto vc = d65_vc(Surround::average);
  EXPECT_THROW(cam16_forward({-1.0, 10.0, 10.0}, vc), Error);
  EXPECT_THROW(cam16_inverse(50.0, 5000.0, 10.0, vc), Error);
  EXPECT_FALSE(try_cam16_inverse(50.0, 5000.0, 10.0, vc).has_value());
  EXPECT_THROW(Cam16ViewingConditions({95.05, 100.0, 108.88}, 0.0, 20.0, Surround::average), Error);
  EXPECT_THROW(Cam16ViewingConditions({95.05, 100.0, 108.88}, 50.0, 0.0, Surround::average), Error);
}

TEST(Cam16, SurroundTable) {
  EXPECT_EQ(surround_params(Surround::average).c, 0.69);
  EXPECT_EQ(surround_params(Surround::dim).c, 0.59);
  EXPECT_EQ(surround_params(Surround::dark).c, 0.525);
  EXPECT_EQ(parse_surround("Dark"), Surround::dark);
  EXPECT_THROW(parse_surround("bright"), Error);
}

TEST(Cam16, LightnessMonotoneInLuminance) {
  auto vc = d65_vc(Surround::dim);
  double prev = -1.0;
  for (double k = 0.01; k <= 1.0; k += 0.01) {
    double J = cam16_forward(k * vc.white(), vc).J;
    EXPECT_GT(J, prev);
    prev = J;
  }
}

TEST(Ucs, Examples) {
  Cam16Appearance grey{50.0, 0.0, 77.0, 0.0, 0.0, 100.0};
  auto g = to_ucs(grey);
  EXPECT_EQ(g.a_M, 0.0);
  EXPECT_EQ(g.b_M, 0.0);
  EXPECT_NEAR(g.J_prime, 1.7 * 50.0 / (1.0 + 0.007 * 50.0), 1e-12);
  Cam16Appearance red{50.0, 20.0, 0.0, 20.0, 30.0, 100.0};
  auto r = to_ucs(red);
  EXPECT_EQ(r.b_M, 0.0);
  EXPECT_GT(r.a_M, 0.0);
  EXPECT_EQ(delta_e_ucs({50, 0, 0}, {50, 2, 0}), 2.0);
  EXPECT_EQ(delta_e_ucs(r, r), 0.0);
  EXPECT_EQ(delta_e_ucs(r, g), delta_e_ucs(g, r));
  for (double x : {0.0, 1.0, 37.5, 99.0}) {
    EXPECT_NEAR(lightness_from_ucs(ucs_lightness(x)), x, 1e-12);
    EXPECT_NEAR(colourfulness_from_ucs(ucs_colourfulness(x)), x, 1e-12);
  }
}
