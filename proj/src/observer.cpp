#include "ovt/observer.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <filesystem>

#include "cie_tables.hpp"

namespace ovt {

namespace {

static_assert(data::kTableStartNm == 360 && data::kTableSize == 361,
              "embedded tables must cover the working grid");

SpectralDistribution from_table(const std::array<double, data::kTableSize>& table) {
  return {kWorkingGrid, std::vector<double>(table.begin(), table.end())};
}

std::string upper(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return out;
}

}  // namespace

const ObserverTables& observer_tables(Observer observer) {
  static const ObserverTables two{from_table(data::kCie1931X), from_table(data::kCie1931Y),
                                  from_table(data::kCie1931Z), Observer::degree2};
  static const ObserverTables ten{from_table(data::kCie1964X), from_table(data::kCie1964Y),
                                  from_table(data::kCie1964Z), Observer::degree10};
  return observer == Observer::degree2 ? two : ten;
}

SpectralDistribution standard_illuminant(StandardIlluminant illuminant) {
  switch (illuminant) {
    case StandardIlluminant::D65:
      return from_table(data::kD65);
    case StandardIlluminant::E:
      return SpectralDistribution::constant(kWorkingGrid, 100.0);
    case StandardIlluminant::A: {
      // Planckian radiator at 2848 K with c2 = 1.435e7 nm K, normalised to 100 at 560 nm.
      constexpr double c2 = 1.435e7;
      constexpr double temperature = 2848.0;
      std::vector<double> values(kWorkingGrid.count);
      for (std::size_t i = 0; i < values.size(); ++i) {
        double nm = kWorkingGrid.wavelength(i);
        values[i] = 100.0 * std::pow(560.0 / nm, 5.0) *
                    std::expm1(c2 / (temperature * 560.0)) / std::expm1(c2 / (temperature * nm));
      }
      return {kWorkingGrid, std::move(values)};
    }
  }
  throw Error("unknown illuminant");
}

SpectralDistribution resolve_illuminant(const std::string& name_or_path) {
  std::string key = upper(name_or_path);
  if (key == "D65") return standard_illuminant(StandardIlluminant::D65);
  if (key == "A") return standard_illuminant(StandardIlluminant::A);
  if (key == "E") return standard_illuminant(StandardIlluminant::E);
  if (!std::filesystem::exists(name_or_path)) {
    throw Error("unknown illuminant '" + name_or_path + "' (expected D65, A, E or a CSV path)");
  }
  auto table = read_spectrum_csv(name_or_path);
  return resample(table.wavelengths_nm, table.values);
}

Observer parse_observer(std::string_view text) {
  std::string key = upper(text);
  if (key == "2" || key == "DEGREE2" || key == "CIE1931") return Observer::degree2;
  if (key == "10" || key == "DEGREE10" || key == "CIE1964") return Observer::degree10;
  throw Error("unknown observer '" + std::string(text) + "' (expected degree2 or degree10)");
}

std::string_view to_string(Observer observer) {
  return observer == Observer::degree2 ? "degree2" : "degree10";
}

}  // namespace ovt
