#pragma once

#include <span>
#include <string>

#include "ovt/colorimetry.hpp"
#include "ovt/optimal.hpp"

// Text renderings shared by the CLI and the tests. JSON and CSV carry full
// precision; human-readable text uses six significant digits.
namespace ovt::report {

std::string solve_json(const SolveReport& report);
std::string solve_text(const SolveReport& report);

std::string table1_json(std::span<const Table1Entry> entries);
std::string table1_text(std::span<const Table1Entry> entries);

std::string targets_csv(std::span<const TargetColor> targets);
std::string targets_json(std::span<const TargetColor> targets);

/// printf("%.6g")
std::string sig6(double value);

}  // namespace ovt::report
