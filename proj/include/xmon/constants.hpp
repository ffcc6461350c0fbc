#pragma once

#include <numbers>

namespace xmon {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// SI constants. Defaults are the exact values fixed by the 2019 SI
/// redefinition (CODATA 2018); hbar and phi0 are derived from h and e.
struct PhysicalConstants {
    double e = 1.602176634e-19;   // C
    double h = 6.62607015e-34;    // J s
    double kB = 1.380649e-23;     // J/K
    double hbar = h / two_pi;     // J s
    double phi0 = h / (2.0 * e);  // Wb

    static constexpr PhysicalConstants with(double e, double h, double kB) {
        return PhysicalConstants{e, h, kB, h / two_pi, h / (2.0 * e)};
    }
};

inline constexpr PhysicalConstants codata2018{};

}  // namespace xmon
