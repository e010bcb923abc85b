#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include "ovt/atlas.hpp"
#include "ovt/error.hpp"
#include "ovt/svg.hpp"

using namespace ovt;

namespace {

AtlasSpec spec_for(double J, Surround s, double spacing = 2.0) {
  auto gamut = DisplayGamut::rec709();
  return {display_viewing_conditions(gamut, 50.0, 20.0, s), J, spacing, gamut, 60.0};
}

std::string csv(const Atlas& a) {
  std::ostringstream s;
  write_atlas_csv(s, a.points);
  return s.str();
}

double max_radius(const Atlas& a) {
  double r = 0.0;
  for (const auto& p : a.points) r = std::max(r, std::hypot(p.ucs.a_M, p.ucs.b_M));
  return r;
}

}  // namespace

TEST(GamutContains, Examples) {
  auto g = DisplayGamut::rec709();
  EXPECT_TRUE(gamut_contains(g.white_xyz(), g));
  auto red = g.from_rgb_linear({1, 0, 0});
  EXPECT_TRUE(gamut_contains(red, g));
  EXPECT_FALSE(gamut_contains(1.2 * red, g));
  EXPECT_FALSE(gamut_contains(1.01 * g.white_xyz(), g));
  EXPECT_TRUE(gamut_contains({0, 0, 0}, g));
}

TEST(Atlas, ContainsOrigin) {
  auto a = generate_atlas(spec_for(50.0, Surround::average));
  bool found = false;
  for (const auto& p : a.points) found |= (p.i == 0 && p.j == 0);
  EXPECT_TRUE(found);
}

TEST(Atlas, EveryPointInGamutAndOnSlice) {
  for (auto s : {Surround::average, Surround::dim, Surround::dark}) {
    auto spec = spec_for(50.0, s);
    auto a = generate_atlas(spec);
    ASSERT_FALSE(a.points.empty());
    for (const auto& p : a.points) {
      EXPECT_TRUE(gamut_contains(p.xyz, spec.gamut));
      EXPECT_NEAR(p.appearance.J, 50.0, 1e-6);
      EXPECT_NEAR(p.ucs.a_M, 2.0 * p.i, 1e-6);
      EXPECT_NEAR(p.ucs.b_M, 2.0 * p.j, 1e-6);
    }
  }
}

TEST(Atlas, GridNeighboursAreTwoUnitsApart) {
  auto a = generate_atlas(spec_for(50.0, Surround::average));
  std::map<std::pair<int, int>, UcsPoint> at;
  for (const auto& p : a.points) at[{p.i, p.j}] = UcsPoint{ucs_lightness(p.J), 2.0 * p.i, 2.0 * p.j};
  int pairs = 0;
  for (const auto& [key, u] : at) {
    for (auto [di, dj] : {std::pair{1, 0}, std::pair{0, 1}}) {
      auto it = at.find({key.first + di, key.second + dj});
      if (it == at.end()) continue;
      EXPECT_EQ(delta_e_ucs(u, it->second), 2.0);
      ++pairs;
    }
  }
  EXPECT_GT(pairs, 100);
}

TEST(Atlas, SortedByBThenA) {
  auto a = generate_atlas(spec_for(50.0, Surround::dim));
  for (std::size_t k = 1; k < a.points.size(); ++k) {
    const auto& p = a.points[k - 1];
    const auto& q = a.points[k];
    EXPECT_TRUE(p.j < q.j || (p.j == q.j && p.i < q.i));
  }
}

TEST(Atlas, CoarserSpacingHasFewerPoints) {
  auto fine = generate_atlas(spec_for(50.0, Surround::average, 2.0));
  auto coarse = generate_atlas(spec_for(50.0, Surround::average, 4.0));
  EXPECT_LT(coarse.points.size(), fine.points.size());
}

TEST(Atlas, DarkLowLightnessSmallerThanMidLightness) {
  auto low = generate_atlas(spec_for(10.0, Surround::average));
  auto mid = generate_atlas(spec_for(50.0, Surround::dark));
  EXPECT_LT(low.points.size(), mid.points.size());
}

TEST(Atlas, ChromaticExtentShrinksAtHighLightness) {
  auto mid = generate_atlas(spec_for(50.0, Surround::average));
  auto high = generate_atlas(spec_for(90.0, Surround::average));
  EXPECT_LT(max_radius(high), max_radius(mid));
}

TEST(Atlas, DiagnosticsAccountForEveryCandidate) {
  auto a = generate_atlas(spec_for(50.0, Surround::average));
  const auto& d = a.diagnostics;
  EXPECT_EQ(d.candidates, 61u * 61u);
  EXPECT_EQ(d.candidates, a.points.size() + d.out_of_gamut + d.inversion_failures);
}

TEST(Atlas, RejectedCandidatesFailGamutTest) {
  auto spec = spec_for(50.0, Surround::average);
  auto a = generate_atlas(spec);
  std::map<std::pair<int, int>, bool> kept;
  for (const auto& p : a.points) kept[{p.i, p.j}] = true;
  double M_scale = std::pow(spec.vc.F_L(), 0.25);
  for (int j = -30; j <= 30; ++j) {
    for (int i = -30; i <= 30; ++i) {
      if (kept.count({i, j})) continue;
      double a_m = 2.0 * i, b_m = 2.0 * j;
      double M = colourfulness_from_ucs(std::hypot(a_m, b_m));
      double h = std::fmod(std::atan2(b_m, a_m) * 180.0 / std::numbers::pi + 360.0, 360.0);
      auto xyz = try_cam16_inverse(50.0, M / M_scale, h, spec.vc);
      if (xyz) EXPECT_FALSE(gamut_contains(*xyz, spec.gamut)) << i << "," << j;
    }
  }
}

TEST(Atlas, Deterministic) {
  auto a = generate_atlas(spec_for(50.0, Surround::dark));
  auto b = generate_atlas(spec_for(50.0, Surround::dark));
  EXPECT_EQ(csv(a), csv(b));
}

TEST(Atlas, CsvHeader) {
  auto text = csv(generate_atlas(spec_for(50.0, Surround::dark)));
  EXPECT_EQ(text.substr(0, text.find('\n')), "J,a_m_prime,b_m_prime,X,Y,Z,x,y,R_lin,G_lin,B_lin");
}

TEST(Atlas, ProjectionInsideTriangle) {
  auto a = generate_atlas(spec_for(50.0, Surround::average));
  auto xy = atlas_to_xy(a.points);
  ASSERT_EQ(xy.size(), a.points.size());
  for (const auto& c : xy) EXPECT_TRUE(RgbColorspace::rec709().contains(c, 1e-7));
}

TEST(Atlas, OriginProjectsToWhiteWithFullAdaptation) {
  auto gamut = DisplayGamut::rec709();
  AtlasSpec spec{display_viewing_conditions(gamut, 50.0, 20.0, Surround::average, 1.0), 50.0, 2.0,
                 gamut, 60.0};
  for (const auto& p : generate_atlas(spec).points) {
    if (p.i != 0 || p.j != 0) continue;
    EXPECT_NEAR(p.xy.x, 0.3127, 1e-3);
    EXPECT_NEAR(p.xy.y, 0.3290, 1e-3);
  }
}

TEST(Atlas, RejectsBadSpec) {
  EXPECT_THROW(generate_atlas(spec_for(0.0, Surround::average)), Error);
  EXPECT_THROW(generate_atlas(spec_for(50.0, Surround::average, 0.0)), Error);
}

TEST(Atlas, SvgIsDeterministic) {
  auto a = generate_atlas(spec_for(50.0, Surround::average, 4.0));
  std::ostringstream s1, s2;
  write_scatter_svg(s1, ucs_scatter(a.points, 50.0, 60.0));
  write_scatter_svg(s2, ucs_scatter(a.points, 50.0, 60.0));
  EXPECT_EQ(s1.str(), s2.str());
  EXPECT_NE(s1.str().find("<svg"), std::string::npos);
  std::ostringstream s3;
  write_scatter_svg(s3, xy_scatter(a.points, DisplayGamut::rec709(), 50.0));
  EXPECT_NE(s3.str().find("<svg"), std::string::npos);
}
