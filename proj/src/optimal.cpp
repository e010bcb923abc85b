#include "ovt/optimal.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

#include "ovt/nelder_mead.hpp"

namespace ovt {

SpectralDistribution synthesize(const OptimalSpectrumParams& params, WavelengthGrid grid) {
  if (!(params.lambda1_nm <= params.lambda2_nm)) throw Error("lambda1 must not exceed lambda2");
  if (!std::isfinite(params.K) || params.K < 0.0) throw Error("amplitude K must be non-negative");
  if (grid.step_nm <= 0 || grid.count == 0) throw Error("grid is not increasing");

  double half = 0.5 * grid.step_nm;
  std::vector<double> values(grid.count);
  for (std::size_t i = 0; i < grid.count; ++i) {
    double centre = grid.wavelength(i);
    double lo = std::max(centre - half, kSpectrumStartNm);
    double hi = std::min(centre + half, kSpectrumEndNm);
    double coverage = 0.0;
    if (hi > lo) {
      double overlap = std::min(hi, params.lambda2_nm) - std::max(lo, params.lambda1_nm);
      coverage = std::clamp(overlap / (hi - lo), 0.0, 1.0);
    }
    double fill = params.genus == Genus::band_pass ? coverage : 1.0 - coverage;
    values[i] = params.K * fill;
  }
  return {grid, std::move(values)};
}

namespace {

constexpr double kInfeasible = std::numeric_limits<double>::infinity();

double objective(const Chromaticity& target, Genus genus, const Colorimeter& colorimeter,
                 const std::array<double, 2>& cuts) {
  double l1 = cuts[0];
  double l2 = cuts[1];
  if (!(l1 >= kSpectrumStartNm && l2 <= kSpectrumEndNm && l1 <= l2)) return kInfeasible;
  Tristimulus t = colorimeter(synthesize({genus, l1, l2, 1.0}));
  if (!(t.sum() > 0.0)) return kInfeasible;
  return delta_e_xyz(target, xyz_to_chromaticity(t));
}

}  // namespace

SolveReport solve_optimal(const Chromaticity& target, Genus genus, const Colorimeter& colorimeter,
                          const SolveOptions& options) {
  if (!(options.tolerance > 0.0)) throw Error("tolerance must be positive");
  if (!inside_spectral_locus(target, observer_tables(colorimeter.observer()))) {
    throw Error("target (" + std::to_string(target.x) + ", " + std::to_string(target.y) +
                ") is unreachable: it lies outside the spectral locus");
  }
  auto f = [&](const std::array<double, 2>& cuts) {
    return objective(target, genus, colorimeter, cuts);
  };
  if (!std::isfinite(f(options.init))) {
    throw Error("initial cut wavelengths are infeasible for this genus");
  }

  NelderMeadOptions nm;
  nm.max_iterations = options.max_iterations;
  nm.x_tolerance = 1e-7;
  nm.f_tolerance = 1e-15;

  auto first = nelder_mead(f, options.init, nm);
  auto best = first;
  int iterations = first.iterations;
  if (first.value > options.tolerance) {
    auto second = nelder_mead(f, first.x, nm);
    iterations += second.iterations;
    if (second.value < best.value) best = second;
  }

  SolveReport report;
  report.params = {genus, best.x[0], best.x[1], 1.0};
  report.achieved_delta_e = best.value;
  report.iterations = iterations;
  report.converged = best.value <= options.tolerance;
  return report;
}

Genus auto_genus(const Chromaticity& target, const Colorimeter& colorimeter) {
  Chromaticity white = colorimeter.white_chromaticity();
  if (std::hypot(target.x - white.x, target.y - white.y) < 1e-6) return Genus::band_pass;
  auto dw = dominant_wavelength(target, white, observer_tables(colorimeter.observer()));
  if (dw.complementary || dw.wavelength_nm < 480.0 || dw.wavelength_nm > 600.0) {
    return Genus::band_stop;
  }
  return Genus::band_pass;
}

OptimalSpectrumParams scale_to_luminance(const OptimalSpectrumParams& params, double target_lc,
                                         const Colorimeter& colorimeter) {
  if (!(target_lc >= 0.0 && target_lc <= 1.0)) throw Error("target L_C must lie in [0, 1]");
  OptimalSpectrumParams unit = params;
  unit.K = 1.0;
  double Y = colorimeter(synthesize(unit)).Y;
  if (!(Y > 0.0)) throw Error("spectrum has zero luminance; cannot scale K");
  unit.K = lc_to_relative_luminance(target_lc) / Y;
  return unit;
}

Genus parse_genus(std::string_view text) {
  std::string key(text);
  std::transform(key.begin(), key.end(), key.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  std::replace(key.begin(), key.end(), '-', '_');
  if (key == "band_pass" || key == "first" || key == "1") return Genus::band_pass;
  if (key == "band_stop" || key == "second" || key == "2") return Genus::band_stop;
  throw Error("unknown genus '" + std::string(text) + "' (expected band_pass or band_stop)");
}

std::string_view to_string(Genus genus) {
  return genus == Genus::band_pass ? "band_pass" : "band_stop";
}

const std::array<Table1Column, 10>& table1_reference() {
  using G = Genus;
  static const std::array<Table1Column, 10> columns{{
      {"R", {1.0, 0.0, 0.0}, 0.213, 0.64, 0.33, 611.0, G::band_stop, 412, 584, 0.823},
      {"G", {0.0, 1.0, 0.0}, 0.715, 0.30, 0.60, 547.0, G::band_pass, 481, 592, 0.869},
      {"B", {0.0, 0.0, 1.0}, 0.072, 0.15, 0.06, 464.0, G::band_stop, 497, 660, 0.858},
      {"Ye", {0.5, 0.5, 0.0}, 0.464, 0.4193, 0.5053, 569.0, G::band_pass, 480, 609, 0.908},
      {"C", {0.0, 0.5, 0.5}, 0.394, 0.2246, 0.3287, 491.0, G::band_pass, 378, 591, 0.929},
      {"M", {0.5, 0.0, 0.5}, 0.142, 0.3209, 0.1542, std::nullopt, G::band_stop, 496, 585, 0.875},
      {"R0.5", {0.667, 0.167, 0.167}, 0.272, 0.4403, 0.3293, 611.0, G::band_stop, 445, 545, 0.439},
      {"G0.5", {0.167, 0.667, 0.167}, 0.524, 0.3058, 0.4758, 547.0, G::band_pass, 460, 608, 0.560},
      {"B0.5", {0.167, 0.167, 0.667}, 0.202, 0.2242, 0.1827, 464.0, G::band_stop, 526, 612, 0.574},
      {"WW", {0.333, 0.333, 0.333}, 1.000, 0.3127, 0.3290, std::nullopt, G::band_pass, 360, 720, 0.00946},
  }};
  return columns;
}

std::vector<Table1Entry> table1_suite(const Colorimeter& colorimeter, const SolveOptions& options) {
  std::vector<Table1Entry> entries;
  for (const auto& column : table1_reference()) {
    auto target = Chromaticity::from_xy(column.x, column.y);
    SolveReport report = solve_optimal(target, column.genus, colorimeter, options);
    report.params = scale_to_luminance(report.params, column.L_C, colorimeter);
    entries.push_back({std::string(column.name), report});
  }
  return entries;
}

}  // namespace ovt
