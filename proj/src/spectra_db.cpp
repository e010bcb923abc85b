#include "ovt/spectra_db.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <unordered_set>

#include "csv.hpp"

namespace ovt {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw Error("line " + std::to_string(line) + ": " + what);
}

struct RawRecord {
  std::string id;
  std::size_t line = 0;
  std::vector<double> wavelengths;
  std::vector<double> values;
};

std::vector<RawRecord> read_wide(std::istream& in) {
  std::vector<RawRecord> raw;
  std::vector<double> wavelengths;
  std::string text;
  std::size_t line = 0;
  bool header = false;
  while (std::getline(in, text)) {
    ++line;
    if (csv::blank(text)) continue;
    auto fields = csv::split(text);
    if (!header) {
      if (fields.size() < 2 || fields[0] != "id") fail(line, "expected header 'id,<wavelength>,...'");
      for (std::size_t k = 1; k < fields.size(); ++k) {
        auto nm = csv::parse_double(fields[k]);
        if (!nm) fail(line, "header column '" + fields[k] + "' is not a wavelength");
        if (!wavelengths.empty() && !(*nm > wavelengths.back())) {
          fail(line, "header wavelengths must strictly increase");
        }
        wavelengths.push_back(*nm);
      }
      header = true;
      continue;
    }
    if (fields.size() != wavelengths.size() + 1) {
      fail(line, "expected " + std::to_string(wavelengths.size() + 1) + " fields, got " +
                     std::to_string(fields.size()));
    }
    RawRecord r{fields[0], line, wavelengths, {}};
    if (r.id.empty()) fail(line, "empty id");
    for (std::size_t k = 1; k < fields.size(); ++k) {
      auto v = csv::parse_double(fields[k]);
      if (!v) fail(line, "malformed value '" + fields[k] + "'");
      if (!(*v >= 0.0) || !std::isfinite(*v)) fail(line, "negative reflectance in record '" + r.id + "'");
      r.values.push_back(*v);
    }
    raw.push_back(std::move(r));
  }
  return raw;
}

std::vector<RawRecord> read_long(std::istream& in) {
  std::vector<RawRecord> raw;
  std::string text;
  std::size_t line = 0;
  bool header = false;
  while (std::getline(in, text)) {
    ++line;
    if (csv::blank(text)) continue;
    auto fields = csv::split(text);
    if (!header) {
      if (fields.size() != 3 || fields[0] != "id" || fields[1] != "wavelength_nm" ||
          fields[2] != "value") {
        fail(line, "expected header 'id,wavelength_nm,value'");
      }
      header = true;
      continue;
    }
    if (fields.size() != 3) fail(line, "expected 3 fields, got " + std::to_string(fields.size()));
    auto nm = csv::parse_double(fields[1]);
    auto v = csv::parse_double(fields[2]);
    if (!nm || !v) fail(line, "malformed number");
    if (fields[0].empty()) fail(line, "empty id");
    if (!(*v >= 0.0) || !std::isfinite(*v)) fail(line, "negative reflectance in record '" + fields[0] + "'");
    if (raw.empty() || raw.back().id != fields[0]) {
      raw.push_back({fields[0], line, {}, {}});
    } else if (!(*nm > raw.back().wavelengths.back())) {
      fail(line, "wavelengths of record '" + fields[0] + "' must strictly increase");
    }
    raw.back().wavelengths.push_back(*nm);
    raw.back().values.push_back(*v);
  }
  return raw;
}

}  // namespace

DbFormat parse_db_format(std::string_view text) {
  std::string key(text);
  std::transform(key.begin(), key.end(), key.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (key == "long_csv" || key == "long") return DbFormat::long_csv;
  if (key == "wide_csv" || key == "wide") return DbFormat::wide_csv;
  throw Error("unknown database format '" + std::string(text) + "' (expected long_csv or wide_csv)");
}

SpectraRecord make_record(std::string id, const SpectralDistribution& spectrum,
                          const Colorimeter& colorimeter) {
  auto resampled = resample(spectrum, kWorkingGrid);
  Tristimulus t = colorimeter(resampled);
  if (!(t.sum() > 0.0)) throw Error("record '" + id + "' has zero tristimulus values");
  return {std::move(id), std::move(resampled), xyz_to_chromaticity(t)};
}

std::vector<SpectraRecord> load_database(std::istream& in, DbFormat format,
                                         const Colorimeter& colorimeter) {
  auto raw = format == DbFormat::wide_csv ? read_wide(in) : read_long(in);
  if (raw.empty()) throw Error("database is empty");

  std::vector<SpectraRecord> records;
  records.reserve(raw.size());
  std::unordered_set<std::string> seen;
  for (auto& r : raw) {
    if (!seen.insert(r.id).second) fail(r.line, "duplicate id '" + r.id + "'");
    try {
      auto spd = resample(r.wavelengths, r.values, kWorkingGrid);
      Tristimulus t = colorimeter(spd);
      if (!(t.sum() > 0.0)) throw Error("spectrum has no response on 360-720 nm");
      records.push_back({r.id, std::move(spd), xyz_to_chromaticity(t)});
    } catch (const Error& e) {
      fail(r.line, "record '" + r.id + "': " + e.what());
    }
  }
  return records;
}

std::vector<SpectraRecord> load_database(const std::string& path, DbFormat format,
                                         const Colorimeter& colorimeter) {
  std::ifstream in(path);
  if (!in) throw Error("database not found: " + path);
  return load_database(in, format, colorimeter);
}

std::vector<MatchResult> match_nearest(std::span<const TargetColor> targets,
                                       std::span<const SpectraRecord> db) {
  if (db.empty()) throw Error("database is empty");
  std::vector<MatchResult> results;
  results.reserve(targets.size());
  for (const auto& target : targets) {
    const SpectraRecord* best = nullptr;
    double best_de = std::numeric_limits<double>::infinity();
    for (const auto& record : db) {
      double de = delta_e_xyz(target.xy, record.cached_xy);
      if (de < best_de || (de == best_de && best && record.id < best->id)) {
        best = &record;
        best_de = de;
      }
    }
    results.push_back({target.name, best->id, best->cached_xy.x, best->cached_xy.y, best_de});
  }
  return results;
}

std::array<double, 3> saturation_mix(const std::array<double, 3>& primary, double s) {
  if (!(s >= 0.0 && s <= 1.0)) throw Error("saturation must lie in [0, 1]");
  std::array<double, 3> out{};
  for (std::size_t k = 0; k < 3; ++k) out[k] = s * primary[k] + (1.0 - s) / 3.0;
  return out;
}

std::vector<TargetColor> build_target_set() {
  struct Base {
    const char* name;
    std::array<double, 3> weights;
  };
  static constexpr Base kSix[] = {
      {"R", {1.0, 0.0, 0.0}}, {"G", {0.0, 1.0, 0.0}}, {"B", {0.0, 0.0, 1.0}},
      {"C", {0.0, 0.5, 0.5}}, {"M", {0.5, 0.0, 0.5}}, {"Ye", {0.5, 0.5, 0.0}},
  };
  std::vector<TargetColor> set;
  for (const auto& b : kSix) set.push_back(target_from_weights(b.weights, b.name));
  for (const auto& b : kSix) {
    set.push_back(target_from_weights(saturation_mix(b.weights, 0.9), std::string(b.name) + "0.9"));
  }
  for (std::size_t k = 0; k < 3; ++k) {
    set.push_back(
        target_from_weights(saturation_mix(kSix[k].weights, 0.5), std::string(kSix[k].name) + "0.5"));
  }
  set.push_back(target_from_weights({1.0, 1.0, 1.0}, "W"));
  return set;
}

void write_match_csv(std::ostream& out, std::span<const MatchResult> results) {
  out << "target,x_spectral,y_spectral,color_id,delta_e\n";
  auto old = out.precision(std::numeric_limits<double>::max_digits10);
  for (const auto& r : results) {
    out << csv::quote(r.target_name) << ',' << r.x_spectral << ',' << r.y_spectral << ','
        << csv::quote(r.record_id) << ',' << r.delta_e << '\n';
  }
  out.precision(old);
}

}  // namespace ovt
