#pragma once

// Unit-suffixed quantity strings: "<number><unit>", optional whitespace in
// between. A suffix is mandatory and must match the expected dimension.

#include <string>
#include <string_view>

namespace xmon {

enum class Dimension {
    frequency,    // Hz
    capacitance,  // F
    current,      // A
    inductance,   // H
    decibel,      // dB
    temperature,  // K
    time,         // s
    voltage,      // V
    charge,       // C
    area,         // m^2
};

std::string_view si_unit(Dimension d);
std::string_view dimension_name(Dimension d);

/// Parses "11.03GHz", "47 fF", "-20dB" into SI. Throws ParseError on a
/// missing or unknown suffix, or a suffix of the wrong dimension.
double parse_quantity(std::string_view text, Dimension expected);

/// Fixed canonical form used when writing design files, e.g. "11.03GHz",
/// with 12 significant digits.
std::string format_quantity(double si_value, Dimension d);

/// Human-readable form with an auto-selected prefix, e.g. "414 MHz".
std::string display_quantity(double si_value, Dimension d, int digits = 6);

}  // namespace xmon
