#pragma once

// Closed-form circuit algebra: junction and capacitor values to energy
// scales, frequencies, Josephson inductance and coherence-rate bounds.
// Everything is SI; divide energies by h for Hz.

#include <optional>
#include <string_view>

#include "xmon/constants.hpp"

namespace xmon {

struct JunctionSpec {
    double i_c = 0.0;  // critical current, A
    double c_j = 0.0;  // junction capacitance, F
    double c_b = 0.0;  // shunt (bias) capacitance, F
    double c_g = 0.0;  // gate capacitance, F
    std::optional<double> area;  // junction area, m^2

    double c_sigma() const { return c_j + c_b + c_g; }

    /// Throws InvalidParameter unless i_c > 0, capacitances are non-negative
    /// with a positive sum, and any area gives a finite positive j_c.
    void validate() const;

    /// i_c / area in A/m^2; nullopt when no area is set.
    std::optional<double> critical_current_density() const;
};

struct EnergyScales {
    double e_j = 0.0;      // J
    double e_c = 0.0;      // J
    double c_sigma = 0.0;  // F
    double l_j = 0.0;      // H
    double ratio = 0.0;    // e_j / e_c
};

/// Energy scales given directly as frequencies E/h (the form circuit tables
/// quote). c_sigma and l_j are back-filled from the inverse formulas.
EnergyScales energies_from_frequencies(double e_j_hz, double e_c_hz,
                                       const PhysicalConstants& k = codata2018);

EnergyScales derive_energies(const JunctionSpec& spec,
                             const PhysicalConstants& k = codata2018);

double josephson_energy(const JunctionSpec& spec, const PhysicalConstants& k = codata2018);
double charging_energy(const JunctionSpec& spec, const PhysicalConstants& k = codata2018);
double josephson_inductance(const JunctionSpec& spec, const PhysicalConstants& k = codata2018);

/// L_J through hbar/(2 e I_c); mathematically identical to
/// josephson_inductance and kept separate so the two forms can be compared.
double josephson_inductance_hbar_form(double i_c, const PhysicalConstants& k = codata2018);

// Inverses used by the design solver and the table audit.
double critical_current_from_ej(double e_j, const PhysicalConstants& k = codata2018);
double capacitance_from_ec(double e_c, const PhysicalConstants& k = codata2018);
double critical_current_from_lj(double l_j, const PhysicalConstants& k = codata2018);

struct TransitionFrequencies {
    double nu_p = 0.0;   // plasma frequency sqrt(8 E_J E_C)/h, Hz
    double nu_01 = 0.0;  // nu_p - E_C/h, Hz
};

TransitionFrequencies transition_frequency(const EnergyScales& energies,
                                           const PhysicalConstants& k = codata2018);

/// Leading-order anharmonicity E_C/h in Hz. The exact value comes from
/// diagonalize() in spectrum.hpp.
double anharmonicity_estimate(const EnergyScales& energies,
                              const PhysicalConstants& k = codata2018);

struct CoherenceBudget {
    double t1 = 0.0;       // s
    double t2 = 0.0;       // s
    double t2_echo = 0.0;  // s
    double q = 0.0;
    double gamma1 = 0.0;   // 1/s
    double t_gate = 0.0;   // s
};

/// Fills q, gamma1 = 2 pi nu / Q and t1 = 1/gamma1. Other fields stay zero.
CoherenceBudget relaxation_from_q(double q, double nu);

/// Throws InvalidParameter unless t2_echo <= t2 <= 2 t1.
void check_coherence_chain(const CoherenceBudget& budget);

enum class GateRatioClass { below, target, above };

std::string_view to_string(GateRatioClass c);

struct GateRatio {
    double ratio = 0.0;
    GateRatioClass classification = GateRatioClass::below;
};

/// t2 / t_gate classified against the [1e3, 1e4] window (both ends inclusive).
GateRatio coherence_gate_ratio(const CoherenceBudget& budget);

}  // namespace xmon
