#pragma once

#include <string>
#include <string_view>

#include "ovt/spectral.hpp"

namespace ovt {

enum class Observer { degree2, degree10 };

/// CIE colour matching functions on the working grid.
struct ObserverTables {
  SpectralDistribution cmf_x;
  SpectralDistribution cmf_y;
  SpectralDistribution cmf_z;
  Observer observer_id;
};

/// Immutable, lazily built process-wide tables.
const ObserverTables& observer_tables(Observer observer);

enum class StandardIlluminant { D65, A, E };

/// Relative spectral power of a CIE illuminant on the working grid.
/// D65 is tabulated data; A is evaluated from its defining Planck formula;
/// E is flat.
SpectralDistribution standard_illuminant(StandardIlluminant illuminant);

/// Parses "D65" / "A" / "E" (case-insensitive) or loads a spectrum CSV
/// from a file path, resampled to the working grid.
SpectralDistribution resolve_illuminant(const std::string& name_or_path);

Observer parse_observer(std::string_view text);
std::string_view to_string(Observer observer);

}  // namespace ovt
