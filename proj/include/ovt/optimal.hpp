#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ovt/colorimetry.hpp"
#include "ovt/spectral.hpp"

namespace ovt {

/// Rectangular optimal-colour spectra. A band-pass spectrum is K on
/// [lambda1, lambda2]; a band-stop spectrum is K on [360, lambda1] and
/// [lambda2, 720].
enum class Genus { band_pass, band_stop };

inline constexpr double kSpectrumStartNm = 360.0;
inline constexpr double kSpectrumEndNm = 720.0;

struct OptimalSpectrumParams {
  Genus genus = Genus::band_pass;
  double lambda1_nm = kSpectrumStartNm;
  double lambda2_nm = kSpectrumEndNm;
  double K = 1.0;

  friend bool operator==(const OptimalSpectrumParams&, const OptimalSpectrumParams&) = default;
};

/// Samples the rectangular spectrum. Each sample stands for the bin of
/// width step_nm centred on its wavelength, clipped to [360, 720]; a cut
/// falling inside a bin fills it with the covered fraction of K.
SpectralDistribution synthesize(const OptimalSpectrumParams& params,
                                WavelengthGrid grid = kWorkingGrid);

struct SolveOptions {
  double tolerance = 1e-5;
  std::array<double, 2> init{490.0, 545.0};
  int max_iterations = 500;
};

struct SolveReport {
  OptimalSpectrumParams params;
  double achieved_delta_e = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Searches (lambda1, lambda2) with the downhill simplex method so that the
/// chromaticity of the rectangular spectrum matches `target`. K stays at 1
/// during the search. A second simplex is started from the best point
/// before giving up. Throws if the target lies outside the spectral locus.
SolveReport solve_optimal(const Chromaticity& target, Genus genus, const Colorimeter& colorimeter,
                          const SolveOptions& options = {});

/// Picks band-stop for purple targets and for dominant wavelengths in the
/// red (> 600 nm) or violet-blue (< 480 nm) sectors, band-pass otherwise.
Genus auto_genus(const Chromaticity& target, const Colorimeter& colorimeter);

/// Sets K so that the spectrum's Y equals target_lc * 100.
OptimalSpectrumParams scale_to_luminance(const OptimalSpectrumParams& params, double target_lc,
                                         const Colorimeter& colorimeter);

Genus parse_genus(std::string_view text);
std::string_view to_string(Genus genus);

/// One column of the HDTV optimal-colour reference table.
struct Table1Column {
  std::string_view name;
  std::array<double, 3> rgb_weights;
  double L_C;
  double x;
  double y;
  std::optional<double> dominant_nm;
  Genus genus;
  double lambda1_nm;
  double lambda2_nm;
  double K_listed;
};

/// The ten published columns R, G, B, Ye, C, M, R0.5, G0.5, B0.5, WW.
const std::array<Table1Column, 10>& table1_reference();

struct Table1Entry {
  std::string name;
  SolveReport report;
};

/// Solves every reference column with its published genus and scales K to
/// the column's L_C.
std::vector<Table1Entry> table1_suite(const Colorimeter& colorimeter, const SolveOptions& options = {});

}  // namespace ovt
