#pragma once

// Cascaded gain / noise-temperature model of the readout chain.

#include <string>
#include <vector>

#include "xmon/constants.hpp"

namespace xmon {

inline constexpr double noise_reference_temperature = 290.0;  // K, IEEE T0

double db_to_linear(double db);
double linear_to_db(double ratio);

/// Noise figure (dB) to equivalent input noise temperature at T0 = 290 K.
double nf_to_temp(double nf_db);
double temp_to_nf(double noise_temp);

struct ChainStage {
    enum class Kind { amplifier, attenuator };

    std::string name;
    double gain_db = 0.0;
    double noise_temp = 0.0;     // K, equivalent input noise
    double physical_temp = 0.0;  // K
    Kind kind = Kind::amplifier;

    static ChainStage amplifier(std::string name, double gain_db, double noise_temp,
                                double physical_temp = 0.0);
    static ChainStage amplifier_nf(std::string name, double gain_db, double nf_db,
                                   double physical_temp = noise_reference_temperature);
    /// Passive loss at physical_temp; gain_db <= 0 and noise (1/G - 1) T_phys.
    static ChainStage attenuator(std::string name, double gain_db, double physical_temp);

    double gain() const { return db_to_linear(gain_db); }
};

struct NoiseChain {
    std::vector<ChainStage> stages;  // signal source side first
    double signal_freq = 0.0;        // Hz

    /// Throws ConfigurationError on an empty chain, negative noise, or a
    /// first amplifier without positive gain.
    void validate() const;
};

struct StageContribution {
    std::string name;
    double input_referred = 0.0;  // T_k / prod_{j<k} G_j, K
    double fraction = 0.0;        // share of T_sys
};

struct NoiseBudget {
    double t_sys = 0.0;  // K
    double total_gain_db = 0.0;
    std::vector<StageContribution> stages;
};

/// Friis cascade T_sys = sum_k T_k / prod_{j<k} G_j.
NoiseBudget cascade_noise_temperature(const NoiseChain& chain);

/// h nu / (2 k_B).
double quantum_limit_temperature(double freq, const PhysicalConstants& k = codata2018);

/// (n h nu B)/(k_B T_sys B) * sqrt(B tau).
double snr_estimate(const NoiseChain& chain, double signal_photons, double bandwidth,
                    double integration_time, const PhysicalConstants& k = codata2018);

/// Same estimate from an already known system temperature.
double snr_from_temperature(double t_sys, double freq, double signal_photons, double bandwidth,
                            double integration_time, const PhysicalConstants& k = codata2018);

/// Quantum-limited TWPA (20 dB), HEMT1 (41 dB, 4.2 K at 4 K) and a room
/// temperature HEMT2 (30 dB, NF 1.3 dB).
NoiseChain default_readout_chain(double signal_freq, const PhysicalConstants& k = codata2018);

}  // namespace xmon
