#include "xmon/readout_budget.hpp"

#include <cmath>

#include "xmon/error.hpp"

namespace xmon {

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double ratio) { return 10.0 * std::log10(ratio); }

double nf_to_temp(double nf_db) {
    if (nf_db < 0.0) throw InvalidParameter("noise figure must be non-negative");
    return noise_reference_temperature * (db_to_linear(nf_db) - 1.0);
}

double temp_to_nf(double noise_temp) {
    if (noise_temp < 0.0) throw InvalidParameter("noise temperature must be non-negative");
    return linear_to_db(1.0 + noise_temp / noise_reference_temperature);
}

ChainStage ChainStage::amplifier(std::string name, double gain_db, double noise_temp,
                                 double physical_temp) {
    if (noise_temp < 0.0) throw InvalidParameter("noise temperature must be non-negative");
    return ChainStage{std::move(name), gain_db, noise_temp, physical_temp, Kind::amplifier};
}

ChainStage ChainStage::amplifier_nf(std::string name, double gain_db, double nf_db,
                                    double physical_temp) {
    return amplifier(std::move(name), gain_db, nf_to_temp(nf_db), physical_temp);
}

ChainStage ChainStage::attenuator(std::string name, double gain_db, double physical_temp) {
    if (gain_db > 0.0) throw InvalidParameter("attenuator gain must be <= 0 dB");
    if (physical_temp < 0.0) throw InvalidParameter("physical temperature must be non-negative");
    const double g = db_to_linear(gain_db);
    return ChainStage{std::move(name), gain_db, (1.0 / g - 1.0) * physical_temp, physical_temp,
                      Kind::attenuator};
}

void NoiseChain::validate() const {
    if (stages.empty()) throw ConfigurationError("readout chain has no stages");
    for (const auto& s : stages) {
        if (!(s.noise_temp >= 0.0) || !std::isfinite(s.noise_temp)) {
            throw ConfigurationError("stage '" + s.name + "' has invalid noise temperature");
        }
        if (!std::isfinite(s.gain_db)) {
            throw ConfigurationError("stage '" + s.name + "' has invalid gain");
        }
    }
    for (const auto& s : stages) {
        if (s.kind != ChainStage::Kind::amplifier) continue;
        if (!(s.gain_db > 0.0)) {
            throw ConfigurationError("first amplifier '" + s.name + "' must have positive gain");
        }
        break;
    }
}

NoiseBudget cascade_noise_temperature(const NoiseChain& chain) {
    chain.validate();
    NoiseBudget out;
    double gain = 1.0;
    for (const auto& s : chain.stages) {
        const double referred = s.noise_temp / gain;
        out.t_sys += referred;
        out.stages.push_back({s.name, referred, 0.0});
        gain *= s.gain();
        out.total_gain_db += s.gain_db;
    }
    for (auto& c : out.stages) c.fraction = out.t_sys > 0.0 ? c.input_referred / out.t_sys : 0.0;
    return out;
}

double quantum_limit_temperature(double freq, const PhysicalConstants& k) {
    if (!(freq > 0.0)) throw InvalidParameter("frequency must be positive");
    return k.h * freq / (2.0 * k.kB);
}

double snr_from_temperature(double t_sys, double freq, double signal_photons, double bandwidth,
                            double integration_time, const PhysicalConstants& k) {
    if (!(t_sys > 0.0) || !(freq > 0.0) || !(signal_photons > 0.0) || !(bandwidth > 0.0) ||
        !(integration_time > 0.0)) {
        throw InvalidParameter("SNR inputs must all be positive");
    }
    const double p_signal = signal_photons * k.h * freq * bandwidth;
    const double p_noise = k.kB * t_sys * bandwidth;
    return (p_signal / p_noise) * std::sqrt(bandwidth * integration_time);
}

double snr_estimate(const NoiseChain& chain, double signal_photons, double bandwidth,
                    double integration_time, const PhysicalConstants& k) {
    const double t_sys = cascade_noise_temperature(chain).t_sys;
    return snr_from_temperature(t_sys, chain.signal_freq, signal_photons, bandwidth,
                                integration_time, k);
}

NoiseChain default_readout_chain(double signal_freq, const PhysicalConstants& k) {
    NoiseChain chain;
    chain.signal_freq = signal_freq;
    chain.stages.push_back(
        ChainStage::amplifier("TWPA", 20.0, quantum_limit_temperature(signal_freq, k), 0.02));
    chain.stages.push_back(ChainStage::amplifier("HEMT1", 41.0, 4.2, 4.0));
    chain.stages.push_back(ChainStage::amplifier_nf("HEMT2", 30.0, 1.3, 290.0));
    return chain;
}

}  // namespace xmon
