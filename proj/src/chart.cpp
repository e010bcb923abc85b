#include "ovt/chart.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iterator>
#include <sstream>

#include <json.hpp>

namespace ovt {

using json = nlohmann::ordered_json;

double rec709_oetf(double L) {
  return L < 0.018 ? 4.5 * L : 1.099 * std::pow(L, 0.45) - 0.099;
}

double rec709_inverse_oetf(double V) {
  return V < 0.081 ? V / 4.5 : std::pow((V + 0.099) / 1.099, 1.0 / 0.45);
}

double encode_transfer(double linear, TransferFunction tf) {
  return tf == TransferFunction::rec709 ? rec709_oetf(linear) : linear;
}

double decode_transfer(double signal, TransferFunction tf) {
  return tf == TransferFunction::rec709 ? rec709_inverse_oetf(signal) : signal;
}

std::uint16_t quantize16(double encoded) {
  return static_cast<std::uint16_t>(std::lround(std::clamp(encoded, 0.0, 1.0) * 65535.0));
}

std::string_view to_string(PatchSource source) {
  switch (source) {
    case PatchSource::optimal: return "optimal";
    case PatchSource::matched: return "matched";
    case PatchSource::atlas: return "atlas";
  }
  return "?";
}

PatchSource parse_patch_source(std::string_view text) {
  if (text == "optimal") return PatchSource::optimal;
  if (text == "matched") return PatchSource::matched;
  if (text == "atlas") return PatchSource::atlas;
  throw Error("unknown patch source '" + std::string(text) + "'");
}

std::string_view to_string(TransferFunction tf) {
  return tf == TransferFunction::rec709 ? "rec709" : "linear";
}

std::array<int, 2> patch_origin(const ChartLayout& layout, int row, int col) {
  return {layout.gap_px + col * (layout.patch_px + layout.gap_px),
          layout.gap_px + row * (layout.patch_px + layout.gap_px)};
}

RenderedChart render_chart(std::span<const ChartPatch> patches, const ChartLayout& layout,
                           const ChartOptions& options) {
  if (patches.empty()) throw Error("chart has no colours");
  if (layout.rows <= 0 || layout.cols <= 0 || layout.patch_px <= 0 || layout.gap_px < 0) {
    throw Error("chart layout dimensions must be positive");
  }
  if (static_cast<std::size_t>(layout.rows) * static_cast<std::size_t>(layout.cols) < patches.size()) {
    throw Error("layout " + std::to_string(layout.rows) + "x" + std::to_string(layout.cols) +
                " is too small for " + std::to_string(patches.size()) + " colours");
  }
  auto check_rgb = [](const std::array<double, 3>& rgb, const std::string& what) {
    for (double c : rgb) {
      if (!(c >= 0.0 && c <= 1.0)) throw Error(what + " has linear RGB outside [0, 1]");
    }
  };
  check_rgb(layout.background_rgb, "background");

  RenderedChart chart;
  Image16& img = chart.image;
  img.width = layout.width();
  img.height = layout.height();
  img.rgb.resize(static_cast<std::size_t>(img.width) * static_cast<std::size_t>(img.height) * 3);

  auto encode = [&](const std::array<double, 3>& rgb) {
    return std::array<std::uint16_t, 3>{quantize16(encode_transfer(rgb[0], options.transfer)),
                                        quantize16(encode_transfer(rgb[1], options.transfer)),
                                        quantize16(encode_transfer(rgb[2], options.transfer))};
  };
  auto fill = [&](int x0, int y0, int w, int h, const std::array<std::uint16_t, 3>& code) {
    for (int y = y0; y < y0 + h; ++y) {
      for (int x = x0; x < x0 + w; ++x) {
        auto k = img.index(x, y);
        img.rgb[k] = code[0];
        img.rgb[k + 1] = code[1];
        img.rgb[k + 2] = code[2];
      }
    }
  };
  fill(0, 0, img.width, img.height, encode(layout.background_rgb));

  ChartMetadata& meta = chart.metadata;
  meta.layout = layout;
  meta.transfer = options.transfer;
  meta.illuminant = options.illuminant;
  meta.observer = options.observer;
  meta.primaries = options.gamut.space.primaries();
  meta.white = options.gamut.space.white();
  meta.viewing = options.viewing;

  for (std::size_t n = 0; n < patches.size(); ++n) {
    const auto& patch = patches[n];
    check_rgb(patch.rgb_linear, "patch '" + patch.name + "'");
    int row = static_cast<int>(n) / layout.cols;
    int col = static_cast<int>(n) % layout.cols;
    auto [x0, y0] = patch_origin(layout, row, col);
    fill(x0, y0, layout.patch_px, layout.patch_px, encode(patch.rgb_linear));

    Tristimulus xyz = options.gamut.from_rgb_linear(patch.rgb_linear);
    if (!(xyz.sum() > 0.0)) throw Error("patch '" + patch.name + "' is black; chromaticity undefined");
    Chromaticity xy = xyz_to_chromaticity(xyz);
    meta.patches.push_back({patch.name, row, col, xy.x, xy.y, patch.rgb_linear, patch.L_C, patch.ucs,
                            patch.source});
  }

  chart.png = encode_png16(img, options.icc_profile);
  return chart;
}

namespace {

json rgb_json(const std::array<double, 3>& rgb) { return json::array({rgb[0], rgb[1], rgb[2]}); }

std::array<double, 3> rgb_from(const json& j) {
  return {j.at(0).get<double>(), j.at(1).get<double>(), j.at(2).get<double>()};
}

json xy_json(const Chromaticity& c) { return json::array({c.x, c.y}); }

Chromaticity xy_from(const json& j) {
  double x = j.at(0).get<double>();
  double y = j.at(1).get<double>();
  return {x, y, 1.0 - x - y};
}

}  // namespace

std::string metadata_to_json(const ChartMetadata& meta) {
  json root;
  root["layout"] = {{"rows", meta.layout.rows},
                    {"cols", meta.layout.cols},
                    {"patch_px", meta.layout.patch_px},
                    {"gap_px", meta.layout.gap_px},
                    {"background_rgb", rgb_json(meta.layout.background_rgb)}};
  root["transfer"] = std::string(to_string(meta.transfer));
  root["illuminant"] = meta.illuminant;
  root["observer"] = meta.observer;
  root["primaries"] = json::array({xy_json(meta.primaries[0]), xy_json(meta.primaries[1]),
                                   xy_json(meta.primaries[2])});
  root["white"] = xy_json(meta.white);
  if (meta.viewing) {
    root["viewing"] = {{"L_A", meta.viewing->L_A},
                       {"Y_b", meta.viewing->Y_b},
                       {"surround", meta.viewing->surround}};
  } else {
    root["viewing"] = nullptr;
  }
  json patches = json::array();
  for (const auto& p : meta.patches) {
    json e;
    e["name"] = p.name;
    e["row"] = p.row;
    e["col"] = p.col;
    e["x"] = p.x;
    e["y"] = p.y;
    e["rgb_linear"] = rgb_json(p.rgb_linear);
    e["L_C"] = p.L_C ? json(*p.L_C) : json(nullptr);
    if (p.ucs) {
      e["ucs"] = {{"J_prime", p.ucs->J_prime}, {"a_M", p.ucs->a_M}, {"b_M", p.ucs->b_M}};
    } else {
      e["ucs"] = nullptr;
    }
    e["source"] = std::string(to_string(p.source));
    patches.push_back(std::move(e));
  }
  root["patches"] = std::move(patches);
  return root.dump(2) + "\n";
}

ChartMetadata metadata_from_json(std::string_view text) {
  ChartMetadata meta;
  try {
    json root = json::parse(text);
    const auto& l = root.at("layout");
    meta.layout.rows = l.at("rows").get<int>();
    meta.layout.cols = l.at("cols").get<int>();
    meta.layout.patch_px = l.at("patch_px").get<int>();
    meta.layout.gap_px = l.at("gap_px").get<int>();
    meta.layout.background_rgb = rgb_from(l.at("background_rgb"));
    auto tf = root.at("transfer").get<std::string>();
    if (tf != "rec709" && tf != "linear") throw Error("unknown transfer function '" + tf + "'");
    meta.transfer = tf == "rec709" ? TransferFunction::rec709 : TransferFunction::linear;
    meta.illuminant = root.at("illuminant").get<std::string>();
    meta.observer = root.at("observer").get<std::string>();
    for (std::size_t k = 0; k < 3; ++k) meta.primaries[k] = xy_from(root.at("primaries").at(k));
    meta.white = xy_from(root.at("white"));
    if (!root.at("viewing").is_null()) {
      const auto& v = root.at("viewing");
      meta.viewing = ViewingMetadata{v.at("L_A").get<double>(), v.at("Y_b").get<double>(),
                                     v.at("surround").get<std::string>()};
    }
    for (const auto& e : root.at("patches")) {
      PatchMetadata p;
      p.name = e.at("name").get<std::string>();
      p.row = e.at("row").get<int>();
      p.col = e.at("col").get<int>();
      p.x = e.at("x").get<double>();
      p.y = e.at("y").get<double>();
      p.rgb_linear = rgb_from(e.at("rgb_linear"));
      if (!e.at("L_C").is_null()) p.L_C = e.at("L_C").get<double>();
      if (!e.at("ucs").is_null()) {
        const auto& u = e.at("ucs");
        p.ucs = UcsPoint{u.at("J_prime").get<double>(), u.at("a_M").get<double>(),
                         u.at("b_M").get<double>()};
      }
      p.source = parse_patch_source(e.at("source").get<std::string>());
      meta.patches.push_back(std::move(p));
    }
  } catch (const json::exception& e) {
    throw Error(std::string("malformed chart metadata: ") + e.what());
  }
  return meta;
}

void export_metadata(const ChartMetadata& meta, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << metadata_to_json(meta);
  if (!out) throw Error("write failed: " + path.string());
}

ChartMetadata import_metadata(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return metadata_from_json(text);
}

}  // namespace ovt
