#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "ovt/chart.hpp"
#include "ovt/error.hpp"
#include "ovt/spectra_db.hpp"

using namespace ovt;

namespace {

std::vector<ChartPatch> target_patches() {
  std::vector<ChartPatch> out;
  for (const auto& t : build_target_set()) {
    out.push_back({t.name, t.rgb_weights, PatchSource::optimal, t.L_C, std::nullopt});
  }
  return out;
}

std::array<double, 3> decode_patch(const Image16& img, const ChartLayout& layout, int row, int col,
                                   TransferFunction tf) {
  auto [x0, y0] = patch_origin(layout, row, col);
  std::size_t at = img.index(x0 + layout.patch_px / 2, y0 + layout.patch_px / 2);
  std::array<double, 3> rgb{};
  for (std::size_t k = 0; k < 3; ++k) rgb[k] = decode_transfer(img.rgb[at + k] / 65535.0, tf);
  return rgb;
}

}  // namespace

TEST(Transfer, Rec709Oetf) {
  EXPECT_EQ(rec709_oetf(0.0), 0.0);
  EXPECT_NEAR(rec709_oetf(1.0), 1.0, 1e-12);
  EXPECT_NEAR(rec709_oetf(0.018), 4.5 * 0.018, 1e-3);
  EXPECT_EQ(rec709_oetf(0.01), 0.045);
  for (double L = 0.0; L <= 1.0; L += 0.001) EXPECT_NEAR(rec709_inverse_oetf(rec709_oetf(L)), L, 1e-12);
  EXPECT_EQ(quantize16(1.0), 65535);
  EXPECT_EQ(quantize16(0.0), 0);
  EXPECT_EQ(quantize16(0.5), 32768);
}

TEST(RenderChart, RedPatchPixel) {
  ChartLayout layout;
  auto chart = render_chart(target_patches(), layout);
  EXPECT_EQ(chart.image.width, 4 * 128 + 5 * 16);
  auto [x0, y0] = patch_origin(layout, 0, 0);
  EXPECT_EQ(x0, 16);
  EXPECT_EQ(y0, 16);
  std::size_t at = chart.image.index(x0, y0);
  EXPECT_EQ(chart.image.rgb[at], 65535);
  EXPECT_EQ(chart.image.rgb[at + 1], 0);
  EXPECT_EQ(chart.image.rgb[at + 2], 0);
  // Background between patches.
  std::size_t bg = chart.image.index(0, 0);
  EXPECT_EQ(chart.image.rgb[bg], quantize16(rec709_oetf(0.2)));
  // W sits last, at row 3 col 3.
  auto [xw, yw] = patch_origin(layout, 3, 3);
  EXPECT_EQ(chart.image.rgb[chart.image.index(xw + 127, yw + 127)], 65535);
}

TEST(RenderChart, Errors) {
  std::vector<ChartPatch> none;
  EXPECT_THROW(render_chart(none, {}), Error);
  ChartLayout small{3, 3, 16, 2, {0.2, 0.2, 0.2}};
  EXPECT_THROW(render_chart(target_patches(), small), Error);
  std::vector<ChartPatch> bad{{"bad", {1.2, 0, 0}, PatchSource::optimal, std::nullopt, std::nullopt}};
  EXPECT_THROW(render_chart(bad, {}), Error);
  std::vector<ChartPatch> black{{"k", {0, 0, 0}, PatchSource::optimal, std::nullopt, std::nullopt}};
  EXPECT_THROW(render_chart(black, {}), Error);
}

TEST(RenderChart, Deterministic) {
  auto a = render_chart(target_patches(), {});
  auto b = render_chart(target_patches(), {});
  EXPECT_EQ(a.png, b.png);
  EXPECT_EQ(metadata_to_json(a.metadata), metadata_to_json(b.metadata));
}

TEST(RenderChart, DecodedTargetSetWithinOneStep) {
  for (auto tf : {TransferFunction::rec709, TransferFunction::linear}) {
    ChartLayout layout;
    ChartOptions options;
    options.transfer = tf;
    auto patches = target_patches();
    auto chart = render_chart(patches, layout, options);
    auto img = decode_png16(chart.png);
    EXPECT_EQ(img, chart.image);
    for (int k = 0; k < 16; ++k) {
      auto rgb = decode_patch(img, layout, k / 4, k % 4, tf);
      for (std::size_t c = 0; c < 3; ++c) {
        EXPECT_LE(std::abs(rgb[c] - patches[k].rgb_linear[c]), 1.0 / 65535.0) << patches[k].name;
      }
    }
  }
}

TEST(RenderChart, DecodeErrorBoundedByHalfStepOverSlope) {
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<ChartPatch> patches;
  for (int k = 0; k < 64; ++k) {
    patches.push_back({"p" + std::to_string(k), {u(rng), u(rng), u(rng)}, PatchSource::atlas,
                       std::nullopt, std::nullopt});
  }
  ChartLayout layout{8, 8, 8, 2, {0.2, 0.2, 0.2}};
  auto chart = render_chart(patches, layout);
  auto img = decode_png16(chart.png);
  for (int k = 0; k < 64; ++k) {
    auto rgb = decode_patch(img, layout, k / 8, k % 8, TransferFunction::rec709);
    for (std::size_t c = 0; c < 3; ++c) {
      double L = patches[k].rgb_linear[c];
      // Inverse slope is largest where the forward curve is flattest, i.e. at L = 1.
      double slope = L < 0.018 ? 4.5 : 1.099 * 0.45 * std::pow(std::min(1.0, L + 1e-4), -0.55);
      EXPECT_LE(std::abs(rgb[c] - L), 0.5 / 65535.0 / slope + 1e-12);
    }
  }
}

TEST(RenderChart, MetadataConsistentWithPatches) {
  auto patches = target_patches();
  auto chart = render_chart(patches, {});
  ASSERT_EQ(chart.metadata.patches.size(), 16u);
  const auto& space = RgbColorspace::rec709();
  for (std::size_t k = 0; k < 16; ++k) {
    const auto& m = chart.metadata.patches[k];
    auto xyz = Tristimulus::from(space.to_xyz() * Eigen::Vector3d(m.rgb_linear[0], m.rgb_linear[1],
                                                                   m.rgb_linear[2]));
    auto xy = xyz_to_chromaticity(xyz);
    EXPECT_NEAR(m.x, xy.x, 1e-6);
    EXPECT_NEAR(m.y, xy.y, 1e-6);
    EXPECT_EQ(m.row, static_cast<int>(k) / 4);
    EXPECT_EQ(m.col, static_cast<int>(k) % 4);
    EXPECT_EQ(m.name, patches[k].name);
  }
}

TEST(Metadata, FileRoundTripAndStability) {
  auto chart = render_chart(target_patches(), {});
  chart.metadata.viewing = ViewingMetadata{50.0, 20.0, "dark"};
  chart.metadata.patches[0].ucs = UcsPoint{42.5, -3.0, 7.25};
  auto dir = std::filesystem::temp_directory_path() / "ovt_meta_test";
  std::filesystem::create_directories(dir);
  auto p1 = dir / "a.meta.json";
  auto p2 = dir / "b.meta.json";
  export_metadata(chart.metadata, p1);
  export_metadata(import_metadata(p1), p2);
  EXPECT_EQ(import_metadata(p1), chart.metadata);
  std::ifstream f1(p1), f2(p2);
  std::string s1((std::istreambuf_iterator<char>(f1)), {}), s2((std::istreambuf_iterator<char>(f2)), {});
  EXPECT_EQ(s1, s2);
  EXPECT_THROW(metadata_from_json("{\"layout\": 3}"), Error);
  std::filesystem::remove_all(dir);
}

namespace {

// Header-only display profile: 132 bytes, no tags.
std::vector<std::uint8_t> minimal_icc() {
  std::vector<std::uint8_t> p(132, 0);
  auto put = [&](std::size_t at, std::uint32_t v) {
    for (int k = 0; k < 4; ++k) p[at + k] = static_cast<std::uint8_t>(v >> (24 - 8 * k));
  };
  auto tag = [&](std::size_t at, const char* s) {
    for (int k = 0; k < 4; ++k) p[at + k] = static_cast<std::uint8_t>(s[k]);
  };
  put(0, 132);
  put(8, 0x02100000);
  tag(12, "mntr");
  tag(16, "RGB ");
  tag(20, "XYZ ");
  tag(36, "acsp");
  put(68, 0x0000F6D6);
  put(72, 0x00010000);
  put(76, 0x0000D32D);
  return p;
}

}  // namespace

TEST(Png, IccProfileIsEmbedded) {
  Image16 img{2, 1, {0, 1, 2, 65535, 65534, 65533}};
  auto plain = encode_png16(img);
  auto icc = minimal_icc();
  auto with_icc = encode_png16(img, icc);
  EXPECT_NE(plain, with_icc);
  std::string raw(with_icc.begin(), with_icc.end());
  EXPECT_NE(raw.find("iCCP"), std::string::npos);
  EXPECT_EQ(std::string(plain.begin(), plain.end()).find("iCCP"), std::string::npos);
  EXPECT_EQ(decode_png16(plain), img);
  std::vector<std::uint8_t> junk{1, 2, 3};
  EXPECT_THROW(decode_png16(junk), Error);
}
