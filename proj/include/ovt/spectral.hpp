#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ovt/error.hpp"

namespace ovt {

/// Uniform wavelength sampling: start_nm, start_nm + step_nm, ...
struct WavelengthGrid {
  int start_nm = 360;
  int step_nm = 1;
  std::size_t count = 361;

  [[nodiscard]] int end_nm() const {
    return start_nm + step_nm * static_cast<int>(count == 0 ? 0 : count - 1);
  }
  [[nodiscard]] double wavelength(std::size_t i) const {
    return start_nm + static_cast<double>(step_nm) * static_cast<double>(i);
  }
  friend bool operator==(const WavelengthGrid&, const WavelengthGrid&) = default;
};

/// 360..720 nm at 1 nm; every colorimetric computation runs on this grid.
inline constexpr WavelengthGrid kWorkingGrid{360, 1, 361};

/// Non-negative samples on a uniform grid. Holds reflectances, illuminant
/// power and colour matching functions alike.
class SpectralDistribution {
 public:
  SpectralDistribution(int start_nm, int step_nm, std::vector<double> values);
  SpectralDistribution(WavelengthGrid grid, std::vector<double> values);

  static SpectralDistribution constant(WavelengthGrid grid, double value);

  [[nodiscard]] int start_nm() const { return start_nm_; }
  [[nodiscard]] int step_nm() const { return step_nm_; }
  [[nodiscard]] int end_nm() const { return grid().end_nm(); }
  [[nodiscard]] std::size_t size() const { return values_.size(); }
  [[nodiscard]] WavelengthGrid grid() const { return {start_nm_, step_nm_, values_.size()}; }
  [[nodiscard]] std::span<const double> values() const { return values_; }
  [[nodiscard]] double operator[](std::size_t i) const { return values_[i]; }
  [[nodiscard]] double wavelength(std::size_t i) const { return grid().wavelength(i); }

  /// Linear interpolation inside the support, zero outside it.
  [[nodiscard]] double value_at(double nm) const;

  [[nodiscard]] SpectralDistribution scaled(double factor) const;

  friend SpectralDistribution operator+(const SpectralDistribution& a,
                                        const SpectralDistribution& b);
  friend bool operator==(const SpectralDistribution&, const SpectralDistribution&) = default;

 private:
  int start_nm_;
  int step_nm_;
  std::vector<double> values_;
};

/// Resamples onto `grid` by linear interpolation, zero-filling outside the
/// source support.
SpectralDistribution resample(const SpectralDistribution& spd, WavelengthGrid grid = kWorkingGrid);

/// Same, for tabulated data with arbitrary strictly increasing wavelengths.
SpectralDistribution resample(std::span<const double> wavelengths_nm,
                              std::span<const double> values,
                              WavelengthGrid grid = kWorkingGrid);

/// Tabulated spectrum as read from a `wavelength_nm,value` CSV file.
struct TabulatedSpectrum {
  std::vector<double> wavelengths_nm;
  std::vector<double> values;
};

TabulatedSpectrum read_spectrum_csv(std::istream& in);
TabulatedSpectrum read_spectrum_csv(const std::string& path);
void write_spectrum_csv(std::ostream& out, const SpectralDistribution& spd);

}  // namespace ovt
