#include "xmon/core_params.hpp"

#include <cmath>
#include <string>

#include "xmon/error.hpp"

namespace xmon {

namespace {

void require_positive(double value, const char* what) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw InvalidParameter(std::string(what) + " must be finite and positive, got " +
                               std::to_string(value));
    }
}

}  // namespace

void JunctionSpec::validate() const {
    require_positive(i_c, "critical current");
    if (c_j < 0.0 || c_b < 0.0 || c_g < 0.0) {
        throw InvalidParameter("capacitances must be non-negative");
    }
    require_positive(c_sigma(), "total capacitance");
    if (area) {
        require_positive(*area, "junction area");
        require_positive(i_c / *area, "critical current density");
    }
}

std::optional<double> JunctionSpec::critical_current_density() const {
    if (!area) return std::nullopt;
    return i_c / *area;
}

double josephson_energy(const JunctionSpec& spec, const PhysicalConstants& k) {
    require_positive(spec.i_c, "critical current");
    return k.phi0 * spec.i_c / two_pi;
}

double charging_energy(const JunctionSpec& spec, const PhysicalConstants& k) {
    require_positive(spec.c_sigma(), "total capacitance");
    return k.e * k.e / (2.0 * spec.c_sigma());
}

double josephson_inductance(const JunctionSpec& spec, const PhysicalConstants& k) {
    require_positive(spec.i_c, "critical current");
    return k.phi0 / (two_pi * spec.i_c);
}

double josephson_inductance_hbar_form(double i_c, const PhysicalConstants& k) {
    require_positive(i_c, "critical current");
    return k.hbar / (2.0 * k.e * i_c);
}

double critical_current_from_ej(double e_j, const PhysicalConstants& k) {
    require_positive(e_j, "Josephson energy");
    return two_pi * e_j / k.phi0;
}

double capacitance_from_ec(double e_c, const PhysicalConstants& k) {
    require_positive(e_c, "charging energy");
    return k.e * k.e / (2.0 * e_c);
}

double critical_current_from_lj(double l_j, const PhysicalConstants& k) {
    require_positive(l_j, "Josephson inductance");
    return k.phi0 / (two_pi * l_j);
}

EnergyScales derive_energies(const JunctionSpec& spec, const PhysicalConstants& k) {
    EnergyScales out;
    out.e_j = josephson_energy(spec, k);
    out.e_c = charging_energy(spec, k);
    out.c_sigma = spec.c_sigma();
    out.l_j = josephson_inductance(spec, k);
    out.ratio = out.e_j / out.e_c;
    return out;
}

EnergyScales energies_from_frequencies(double e_j_hz, double e_c_hz,
                                       const PhysicalConstants& k) {
    require_positive(e_j_hz, "Josephson energy");
    require_positive(e_c_hz, "charging energy");
    EnergyScales out;
    out.e_j = k.h * e_j_hz;
    out.e_c = k.h * e_c_hz;
    out.c_sigma = capacitance_from_ec(out.e_c, k);
    out.l_j = k.phi0 / (two_pi * critical_current_from_ej(out.e_j, k));
    out.ratio = out.e_j / out.e_c;
    return out;
}

TransitionFrequencies transition_frequency(const EnergyScales& energies,
                                           const PhysicalConstants& k) {
    require_positive(energies.e_j, "Josephson energy");
    require_positive(energies.e_c, "charging energy");
    TransitionFrequencies f;
    f.nu_p = std::sqrt(8.0 * energies.e_j * energies.e_c) / k.h;
    f.nu_01 = f.nu_p - energies.e_c / k.h;
    return f;
}

double anharmonicity_estimate(const EnergyScales& energies, const PhysicalConstants& k) {
    if (energies.e_c < 0.0) throw InvalidParameter("charging energy must be non-negative");
    return energies.e_c / k.h;
}

CoherenceBudget relaxation_from_q(double q, double nu) {
    require_positive(q, "quality factor");
    require_positive(nu, "qubit frequency");
    CoherenceBudget b;
    b.q = q;
    b.gamma1 = two_pi * nu / q;
    b.t1 = q / (two_pi * nu);
    return b;
}

void check_coherence_chain(const CoherenceBudget& b) {
    if (b.t2_echo > b.t2) {
        throw InvalidParameter("coherence chain violated: T2echo exceeds T2");
    }
    if (b.t2 > 2.0 * b.t1) {
        throw InvalidParameter("coherence chain violated: T2 exceeds 2 T1");
    }
}

std::string_view to_string(GateRatioClass c) {
    switch (c) {
        case GateRatioClass::below: return "BELOW";
        case GateRatioClass::target: return "TARGET";
        case GateRatioClass::above: return "ABOVE";
    }
    return "BELOW";
}

GateRatio coherence_gate_ratio(const CoherenceBudget& b) {
    require_positive(b.t2, "T2");
    require_positive(b.t_gate, "gate time");
    GateRatio r;
    r.ratio = b.t2 / b.t_gate;
    // Bounds are inclusive; the slack absorbs rounding in t2 / t_gate.
    constexpr double slack = 1e-12;
    if (r.ratio < 1e3 * (1.0 - slack)) {
        r.classification = GateRatioClass::below;
    } else if (r.ratio <= 1e4 * (1.0 + slack)) {
        r.classification = GateRatioClass::target;
    } else {
        r.classification = GateRatioClass::above;
    }
    return r;
}

}  // namespace xmon
