#pragma once

// Design descriptor: one UTF-8 JSON document whose numeric values are
// unit-suffixed strings. See docs/design-format.md for the schema.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "xmon/architecture.hpp"
#include "xmon/readout_budget.hpp"
#include "xmon/report.hpp"

namespace xmon {

struct DesignBundle {
    ChipDesign chip;
    std::optional<NoiseChain> readout;
    json metadata = json::object();  // carried through untouched
};

/// Parses and cross-checks a descriptor. Errors name the offending key and
/// the line it first appears on, or the dangling id.
DesignBundle parse_design(std::string_view text, const PhysicalConstants& k = codata2018);

DesignBundle load_design(const std::filesystem::path& path,
                         const PhysicalConstants& k = codata2018);

/// Canonical descriptor text; parse_design(serialize_design(b)) == b up to
/// 12-digit rounding.
std::string serialize_design(const DesignBundle& bundle);

}  // namespace xmon
