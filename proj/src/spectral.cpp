#include "ovt/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>

#include "csv.hpp"

namespace ovt {

namespace {

void check_values(std::span<const double> values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i]) || values[i] < 0.0) {
      throw Error("spectral sample " + std::to_string(i) + " is negative or not finite");
    }
  }
}

}  // namespace

SpectralDistribution::SpectralDistribution(int start_nm, int step_nm, std::vector<double> values)
    : start_nm_(start_nm), step_nm_(step_nm), values_(std::move(values)) {
  if (step_nm_ <= 0) throw Error("spectral step must be positive");
  if (values_.empty()) throw Error("spectral distribution is empty");
  check_values(values_);
}

SpectralDistribution::SpectralDistribution(WavelengthGrid grid, std::vector<double> values)
    : SpectralDistribution(grid.start_nm, grid.step_nm, std::move(values)) {
  if (values_.size() != grid.count) throw Error("sample count does not match grid");
}

SpectralDistribution SpectralDistribution::constant(WavelengthGrid grid, double value) {
  return {grid, std::vector<double>(grid.count, value)};
}

double SpectralDistribution::value_at(double nm) const {
  double pos = (nm - start_nm_) / step_nm_;
  double last = static_cast<double>(values_.size() - 1);
  if (pos < 0.0 || pos > last) return 0.0;
  auto i = static_cast<std::size_t>(std::floor(pos));
  if (i >= values_.size() - 1) return values_.back();
  double t = pos - static_cast<double>(i);
  return values_[i] + t * (values_[i + 1] - values_[i]);
}

SpectralDistribution SpectralDistribution::scaled(double factor) const {
  if (!(factor >= 0.0)) throw Error("spectral scale factor must be non-negative");
  std::vector<double> out(values_);
  for (double& v : out) v *= factor;
  return {start_nm_, step_nm_, std::move(out)};
}

SpectralDistribution operator+(const SpectralDistribution& a, const SpectralDistribution& b) {
  if (a.grid() != b.grid()) throw Error("cannot add spectra on different grids");
  std::vector<double> out(a.values_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b.values_[i];
  return {a.start_nm_, a.step_nm_, std::move(out)};
}

SpectralDistribution resample(const SpectralDistribution& spd, WavelengthGrid grid) {
  if (grid.step_nm <= 0 || grid.count == 0) throw Error("target grid is not increasing");
  if (spd.grid() == grid) return spd;
  std::vector<double> out(grid.count);
  for (std::size_t i = 0; i < grid.count; ++i) out[i] = spd.value_at(grid.wavelength(i));
  return {grid, std::move(out)};
}

SpectralDistribution resample(std::span<const double> wavelengths_nm,
                              std::span<const double> values, WavelengthGrid grid) {
  if (wavelengths_nm.empty()) throw Error("spectrum has no samples");
  if (wavelengths_nm.size() != values.size()) throw Error("wavelength and value counts differ");
  if (grid.step_nm <= 0 || grid.count == 0) throw Error("target grid is not increasing");
  for (std::size_t i = 1; i < wavelengths_nm.size(); ++i) {
    if (!(wavelengths_nm[i] > wavelengths_nm[i - 1])) {
      throw Error("spectrum wavelengths are not strictly increasing");
    }
  }
  check_values(values);

  std::vector<double> out(grid.count, 0.0);
  for (std::size_t i = 0; i < grid.count; ++i) {
    double nm = grid.wavelength(i);
    if (nm < wavelengths_nm.front() || nm > wavelengths_nm.back()) continue;
    auto hi = std::lower_bound(wavelengths_nm.begin(), wavelengths_nm.end(), nm);
    auto k = static_cast<std::size_t>(hi - wavelengths_nm.begin());
    if (wavelengths_nm[k] == nm) {
      out[i] = values[k];
      continue;
    }
    double t = (nm - wavelengths_nm[k - 1]) / (wavelengths_nm[k] - wavelengths_nm[k - 1]);
    out[i] = values[k - 1] + t * (values[k] - values[k - 1]);
  }
  return {grid, std::move(out)};
}

TabulatedSpectrum read_spectrum_csv(std::istream& in) {
  TabulatedSpectrum spectrum;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (csv::blank(line)) continue;
    auto fields = csv::split(line);
    if (!header_seen) {
      if (fields.size() != 2 || fields[0] != "wavelength_nm" || fields[1] != "value") {
        throw Error("line " + std::to_string(line_no) + ": expected header 'wavelength_nm,value'");
      }
      header_seen = true;
      continue;
    }
    if (fields.size() != 2) {
      throw Error("line " + std::to_string(line_no) + ": expected 2 fields");
    }
    auto nm = csv::parse_double(fields[0]);
    auto value = csv::parse_double(fields[1]);
    if (!nm || !value) throw Error("line " + std::to_string(line_no) + ": malformed number");
    if (*value < 0.0) throw Error("line " + std::to_string(line_no) + ": negative value");
    if (!spectrum.wavelengths_nm.empty() && !(*nm > spectrum.wavelengths_nm.back())) {
      throw Error("line " + std::to_string(line_no) + ": wavelengths must strictly increase");
    }
    spectrum.wavelengths_nm.push_back(*nm);
    spectrum.values.push_back(*value);
  }
  if (spectrum.values.empty()) throw Error("spectrum file has no samples");
  return spectrum;
}

TabulatedSpectrum read_spectrum_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("spectrum file not found: " + path);
  return read_spectrum_csv(in);
}

void write_spectrum_csv(std::ostream& out, const SpectralDistribution& spd) {
  out << "wavelength_nm,value\n";
  auto old = out.precision(std::numeric_limits<double>::max_digits10);
  for (std::size_t i = 0; i < spd.size(); ++i) {
    out << spd.start_nm() + spd.step_nm() * static_cast<int>(i) << ',' << spd[i] << '\n';
  }
  out.precision(old);
}

}  // namespace ovt
