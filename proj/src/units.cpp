#include "xmon/units.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "xmon/error.hpp"

namespace xmon {

namespace {

struct UnitEntry {
    std::string_view symbol;
    Dimension dim;
    double scale;
};

// "u" and the micro sign are both accepted for micro.
constexpr std::array<UnitEntry, 44> unit_table{{
    {"THz", Dimension::frequency, 1e12},   {"GHz", Dimension::frequency, 1e9},
    {"MHz", Dimension::frequency, 1e6},    {"kHz", Dimension::frequency, 1e3},
    {"Hz", Dimension::frequency, 1.0},     {"F", Dimension::capacitance, 1.0},
    {"uF", Dimension::capacitance, 1e-6},  {"µF", Dimension::capacitance, 1e-6},
    {"nF", Dimension::capacitance, 1e-9},  {"pF", Dimension::capacitance, 1e-12},
    {"fF", Dimension::capacitance, 1e-15}, {"aF", Dimension::capacitance, 1e-18},
    {"A", Dimension::current, 1.0},        {"mA", Dimension::current, 1e-3},
    {"uA", Dimension::current, 1e-6},      {"µA", Dimension::current, 1e-6},
    {"nA", Dimension::current, 1e-9},      {"pA", Dimension::current, 1e-12},
    {"H", Dimension::inductance, 1.0},     {"uH", Dimension::inductance, 1e-6},
    {"nH", Dimension::inductance, 1e-9},   {"pH", Dimension::inductance, 1e-12},
    {"dB", Dimension::decibel, 1.0},       {"K", Dimension::temperature, 1.0},
    {"mK", Dimension::temperature, 1e-3},  {"uK", Dimension::temperature, 1e-6},
    {"s", Dimension::time, 1.0},           {"ms", Dimension::time, 1e-3},
    {"us", Dimension::time, 1e-6},         {"µs", Dimension::time, 1e-6},
    {"ns", Dimension::time, 1e-9},         {"ps", Dimension::time, 1e-12},
    {"V", Dimension::voltage, 1.0},        {"mV", Dimension::voltage, 1e-3},
    {"uV", Dimension::voltage, 1e-6},      {"µV", Dimension::voltage, 1e-6},
    {"nV", Dimension::voltage, 1e-9},      {"C", Dimension::charge, 1.0},
    {"m2", Dimension::area, 1.0},          {"um2", Dimension::area, 1e-12},
    {"µm2", Dimension::area, 1e-12},  {"um^2", Dimension::area, 1e-12},
    {"nm2", Dimension::area, 1e-18},       {"nm^2", Dimension::area, 1e-18},
}};

struct DisplayUnit {
    std::string_view canonical;  // used by format_quantity
    std::array<std::pair<std::string_view, double>, 4> ladder;
};

DisplayUnit display_units(Dimension d) {
    switch (d) {
        case Dimension::frequency:
            return {"GHz", {{{"GHz", 1e9}, {"MHz", 1e6}, {"kHz", 1e3}, {"Hz", 1.0}}}};
        case Dimension::capacitance:
            return {"fF", {{{"nF", 1e-9}, {"pF", 1e-12}, {"fF", 1e-15}, {"aF", 1e-18}}}};
        case Dimension::current:
            return {"nA", {{{"mA", 1e-3}, {"uA", 1e-6}, {"nA", 1e-9}, {"pA", 1e-12}}}};
        case Dimension::inductance:
            return {"nH", {{{"uH", 1e-6}, {"nH", 1e-9}, {"pH", 1e-12}, {"pH", 1e-12}}}};
        case Dimension::decibel:
            return {"dB", {{{"dB", 1.0}, {"dB", 1.0}, {"dB", 1.0}, {"dB", 1.0}}}};
        case Dimension::temperature:
            return {"K", {{{"K", 1.0}, {"mK", 1e-3}, {"uK", 1e-6}, {"uK", 1e-6}}}};
        case Dimension::time:
            return {"ns", {{{"s", 1.0}, {"ms", 1e-3}, {"us", 1e-6}, {"ns", 1e-9}}}};
        case Dimension::voltage:
            return {"mV", {{{"V", 1.0}, {"mV", 1e-3}, {"uV", 1e-6}, {"nV", 1e-9}}}};
        case Dimension::charge:
            return {"C", {{{"C", 1.0}, {"C", 1.0}, {"C", 1.0}, {"C", 1.0}}}};
        case Dimension::area:
            return {"um2", {{{"m2", 1.0}, {"um2", 1e-12}, {"nm2", 1e-18}, {"nm2", 1e-18}}}};
    }
    return {"", {}};
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

std::string_view si_unit(Dimension d) {
    switch (d) {
        case Dimension::frequency: return "Hz";
        case Dimension::capacitance: return "F";
        case Dimension::current: return "A";
        case Dimension::inductance: return "H";
        case Dimension::decibel: return "dB";
        case Dimension::temperature: return "K";
        case Dimension::time: return "s";
        case Dimension::voltage: return "V";
        case Dimension::charge: return "C";
        case Dimension::area: return "m2";
    }
    return "";
}

std::string_view dimension_name(Dimension d) {
    switch (d) {
        case Dimension::frequency: return "frequency";
        case Dimension::capacitance: return "capacitance";
        case Dimension::current: return "current";
        case Dimension::inductance: return "inductance";
        case Dimension::decibel: return "gain";
        case Dimension::temperature: return "temperature";
        case Dimension::time: return "time";
        case Dimension::voltage: return "voltage";
        case Dimension::charge: return "charge";
        case Dimension::area: return "area";
    }
    return "";
}

double parse_quantity(std::string_view text, Dimension expected) {
    const std::string_view body = trim(text);
    const std::string buf(body);
    const char* begin = buf.c_str();
    char* end = nullptr;
    const double number = std::strtod(begin, &end);
    if (end == begin) {
        throw ParseError("'" + buf + "' does not start with a number");
    }
    if (!std::isfinite(number)) throw ParseError("'" + buf + "' is not a finite number");
    const std::string_view suffix = trim(std::string_view(end));
    if (suffix.empty()) {
        throw ParseError("'" + buf + "' is missing a unit suffix (expected a " +
                         std::string(dimension_name(expected)) + ", e.g. " +
                         std::string(display_units(expected).canonical) + ")");
    }
    for (const auto& u : unit_table) {
        if (u.symbol != suffix) continue;
        if (u.dim != expected) {
            throw ParseError("'" + buf + "' has unit " + std::string(suffix) + " but a " +
                             std::string(dimension_name(expected)) + " is expected");
        }
        return number * u.scale;
    }
    throw ParseError("'" + buf + "' has unknown unit '" + std::string(suffix) + "'");
}

std::string format_quantity(double si_value, Dimension d) {
    const DisplayUnit du = display_units(d);
    double scale = 1.0;
    for (const auto& u : unit_table)
        if (u.symbol == du.canonical) scale = u.scale;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g%s", si_value / scale, std::string(du.canonical).c_str());
    return buf;
}

std::string display_quantity(double si_value, Dimension d, int digits) {
    const DisplayUnit du = display_units(d);
    const double mag = std::abs(si_value);
    std::pair<std::string_view, double> pick = du.ladder.back();
    for (const auto& step : du.ladder) {
        if (mag >= step.second) {
            pick = step;
            break;
        }
    }
    if (mag == 0.0) pick = {du.canonical, 1.0};
    for (const auto& u : unit_table)
        if (u.symbol == pick.first) pick.second = u.scale;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g %s", digits, si_value / pick.second,
                  std::string(pick.first).c_str());
    return buf;
}

}  // namespace xmon
