#pragma once

// JSON report conventions: SI numbers rounded to 12 significant digits,
// sorted keys, and an explicit unit tag on every dimensioned quantity.

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"

#include "xmon/units.hpp"

namespace xmon {

using json = nlohmann::json;

inline constexpr int report_digits = 12;

double round_significant(double value, int digits = report_digits);

/// {"value": <SI>, "unit": "Hz", "display": "11.2956 GHz"}
json quantity_json(double si_value, Dimension d);

/// Rounded plain number; null for non-finite input.
json number_json(double value);

std::string dump_report(const json& report);

/// Writes to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace xmon
