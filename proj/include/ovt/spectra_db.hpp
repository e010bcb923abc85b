#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ovt/colorimetry.hpp"
#include "ovt/spectral.hpp"

namespace ovt {

/// One reflectance spectrum from a database, with its chromaticity under the
/// session illuminant and observer.
struct SpectraRecord {
  std::string id;
  SpectralDistribution spectrum;
  Chromaticity cached_xy;
};

/// wide_csv: `id,<nm>,<nm>,...` with one spectrum per row.
/// long_csv: `id,wavelength_nm,value` with one sample per row, records in
/// contiguous blocks.
enum class DbFormat { long_csv, wide_csv };

DbFormat parse_db_format(std::string_view text);

std::vector<SpectraRecord> load_database(std::istream& in, DbFormat format,
                                         const Colorimeter& colorimeter);
std::vector<SpectraRecord> load_database(const std::string& path, DbFormat format,
                                         const Colorimeter& colorimeter);

/// Builds a record from an in-memory spectrum.
SpectraRecord make_record(std::string id, const SpectralDistribution& spectrum,
                          const Colorimeter& colorimeter);

struct MatchResult {
  std::string target_name;
  std::string record_id;
  double x_spectral = 0.0;
  double y_spectral = 0.0;
  double delta_e = 0.0;

  friend bool operator==(const MatchResult&, const MatchResult&) = default;
};

/// For each target, the record with the smallest delta_e_xyz; ties go to
/// the lexicographically smallest id. Exhaustive scan.
std::vector<MatchResult> match_nearest(std::span<const TargetColor> targets,
                                       std::span<const SpectraRecord> db);

/// Saturation mix s * primary + (1 - s) * (1/3, 1/3, 1/3) in linear RGB.
std::array<double, 3> saturation_mix(const std::array<double, 3>& primary, double s);

/// R, G, B, C, M, Ye at s = 1 and s = 0.9; R, G, B at s = 0.5; W.
std::vector<TargetColor> build_target_set();

/// Header: target,x_spectral,y_spectral,color_id,delta_e
void write_match_csv(std::ostream& out, std::span<const MatchResult> results);

}  // namespace ovt
