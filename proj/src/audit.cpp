#include "xmon/audit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <initializer_list>

#include "xmon/core_params.hpp"
#include "xmon/error.hpp"
#include "xmon/spectrum.hpp"

namespace xmon {

std::string_view to_string(AuditStatus s) {
    switch (s) {
        case AuditStatus::consistent: return "CONSISTENT";
        case AuditStatus::inconsistent: return "INCONSISTENT";
        case AuditStatus::undefined: return "UNDEFINED";
    }
    return "UNDEFINED";
}

AuditStatus compare(const Interval& claim, const Interval& computed, double tolerance) {
    const double lo = claim.lo - tolerance * std::abs(claim.lo);
    const double hi = claim.hi + tolerance * std::abs(claim.hi);
    const bool overlap = computed.hi >= lo && computed.lo <= hi;
    return overlap ? AuditStatus::consistent : AuditStatus::inconsistent;
}

namespace {

Interval point(double v) { return {v, v}; }

Interval hull(std::initializer_list<double> values) {
    return {std::min(values), std::max(values)};
}

AuditFinding check(std::string id, std::string quote, std::string derivation, Interval claim,
                   Interval computed, std::optional<Dimension> d, double tol) {
    AuditFinding f;
    f.id = std::move(id);
    f.claim_quote = std::move(quote);
    f.derivation = std::move(derivation);
    f.claim = claim;
    f.computed = computed;
    f.dimension = d;
    f.tolerance = tol;
    f.status = compare(claim, computed, tol);
    return f;
}

json interval_json(const std::optional<Interval>& iv) {
    if (!iv) return nullptr;
    return json{{"lo", number_json(iv->lo)}, {"hi", number_json(iv->hi)}};
}

double ej_from_ic(double i_c, const PhysicalConstants& k) { return k.phi0 * i_c / two_pi; }
double ec_from_c(double c, const PhysicalConstants& k) { return k.e * k.e / (2.0 * c); }
double lj_from_ic(double i_c, const PhysicalConstants& k) { return k.phi0 / (two_pi * i_c); }

double nu01_closed(double e_j, double e_c, const PhysicalConstants& k) {
    return std::sqrt(8.0 * e_j * e_c) / k.h - e_c / k.h;
}

}  // namespace

std::vector<AuditFinding> audit_table(const PhysicalConstants& k, double tol,
                                      const ReferenceTable& t) {
    if (!(tol >= 0.0) || !std::isfinite(tol)) throw InvalidParameter("tolerance must be >= 0");
    const double e_j = t.e_j_hz * k.h;
    const double e_c = t.e_c_hz * k.h;
    std::vector<AuditFinding> out;

    const double nu_closed = nu01_closed(e_j, e_c, k);
    out.push_back(check("nu01-band", "omega_1/2pi 11.03 GHz, 11.99 GHz",
                        "closed-form nu01 from E_J 41.4 GHz, E_C 414 MHz", t.nu01,
                        point(nu_closed), Dimension::frequency, tol));

    EnergyScales en = energies_from_frequencies(t.e_j_hz, t.e_c_hz, k);
    const TransmonSpectrum exact = diagonalize(en, {}, k);
    out.push_back(check("nu01-exact", "omega_1/2pi 11.03 GHz, 11.99 GHz",
                        "charge-basis nu01 from E_J 41.4 GHz, E_C 414 MHz", t.nu01,
                        point(exact.nu01), Dimension::frequency, tol));

    out.push_back(check("nu01-central", "central resonance frequency of 11.3GHz",
                        "closed-form nu01 from E_J 41.4 GHz, E_C 414 MHz", point(t.nu_central),
                        point(nu_closed), Dimension::frequency, tol));

    out.push_back(check("ratio", "E_J/E_C 110-119", "E_J / E_C = 41.4 GHz / 414 MHz", t.ratio,
                        point(t.e_j_hz / t.e_c_hz), std::nullopt, tol));

    out.push_back(check("ic-to-ej", "E_J 41.4 GHz", "E_J = Phi0 I_c / 2pi over I_C 24.0-39.0 nA",
                        point(t.e_j_hz),
                        {ej_from_ic(t.i_c.lo, k) / k.h, ej_from_ic(t.i_c.hi, k) / k.h},
                        Dimension::frequency, tol));

    out.push_back(check("ic-to-lj", "L_J 0.15-0.17nH", "L_J = Phi0 / (2pi I_c) over I_C 24.0-39.0 nA",
                        t.l_j, {lj_from_ic(t.i_c.hi, k), lj_from_ic(t.i_c.lo, k)},
                        Dimension::inductance, tol));

    {
        const double ic_lo = critical_current_from_lj(t.l_j.hi, k);
        const double ic_hi = critical_current_from_lj(t.l_j.lo, k);
        out.push_back(check("lj-to-ej", "E_J 41.4 GHz",
                            "E_J from I_c = Phi0 / (2pi L_J) over L_J 0.15-0.17nH",
                            point(t.e_j_hz),
                            {ej_from_ic(ic_lo, k) / k.h, ej_from_ic(ic_hi, k) / k.h},
                            Dimension::frequency, tol));
        out.push_back(check("lj-to-ic", "I_C 24.0-39.0 nA", "I_c = Phi0 / (2pi L_J) over L_J 0.15-0.17nH",
                            t.i_c, {ic_lo, ic_hi}, Dimension::current, tol));
    }

    out.push_back(check("ej-to-ic", "I_C 24.0-39.0 nA", "I_c = 2pi E_J / Phi0 from E_J 41.4 GHz",
                        t.i_c, point(critical_current_from_ej(e_j, k)), Dimension::current, tol));

    out.push_back(check("csigma-to-ec", "E_C 414 MHz", "E_C = e^2 / 2C_sigma over C_sigma 47.0-59.0 fF",
                        point(t.e_c_hz),
                        {ec_from_c(t.c_sigma.hi, k) / k.h, ec_from_c(t.c_sigma.lo, k) / k.h},
                        Dimension::frequency, tol));

    {
        double lo = INFINITY, hi = -INFINITY;
        for (double l : {t.l_j.lo, t.l_j.hi}) {
            for (double c : {t.c_sigma.lo, t.c_sigma.hi}) {
                const double nu = nu01_closed(ej_from_ic(critical_current_from_lj(l, k), k),
                                              ec_from_c(c, k), k);
                lo = std::min(lo, nu);
                hi = std::max(hi, nu);
            }
        }
        out.push_back(check("lj-csigma-to-nu01", "omega_1/2pi 11.03 GHz, 11.99 GHz",
                            "closed-form nu01 over L_J 0.15-0.17nH x C_sigma 47.0-59.0 fF", t.nu01,
                            {lo, hi}, Dimension::frequency, tol));
    }

    {
        const auto t1_at = [](double q, double nu) { return q / (two_pi * nu); };
        out.push_back(check("t1-band", "<T_1> 0.3 - 0.7 ms",
                            "T_1 = Q / 2pi nu over Q 1.75-2.75e7 x nu 11.03-11.99 GHz", t.t1,
                            hull({t1_at(t.q.lo, t.nu01.lo), t1_at(t.q.lo, t.nu01.hi),
                                  t1_at(t.q.hi, t.nu01.lo), t1_at(t.q.hi, t.nu01.hi)}),
                            Dimension::time, tol));
        out.push_back(check("t1-central", "<T_1> 0.3 - 0.7 ms",
                            "T_1 = Q / 2pi nu at Q 2.75e7, nu 11.3 GHz", t.t1,
                            point(t1_at(t.q.hi, t.nu_central)), Dimension::time, tol));
        out.push_back(check("t1-abstract", "relaxation times of up to 1.9ms",
                            "T_1 = Q / 2pi nu at Q 2.75e7, nu 11.99 GHz", point(t.t1_abstract),
                            point(t1_at(t.q_abstract, t.nu01.hi)), Dimension::time, tol));
        char buf[96];
        std::snprintf(buf, sizeof buf, "1.9 ms at 11.99 GHz needs Q of about %.3g",
                      t.t1_abstract * two_pi * t.nu01.hi);
        out.back().note = buf;
    }

    out.push_back(check("alpha-vs-ec", "alpha/2pi 276 MHz", "leading-order alpha = E_C from E_C 414 MHz",
                        point(t.alpha), point(t.e_c_hz), Dimension::frequency, tol));
    out.push_back(check("alpha-exact", "alpha/2pi 276 MHz",
                        "charge-basis nu01 - nu12 from E_J 41.4 GHz, E_C 414 MHz", point(t.alpha),
                        point(exact.alpha_exact), Dimension::frequency, tol));

    {
        const double ej = ej_from_ic(t.design_i_c, k);
        const double ec = ec_from_c(t.design_c_sigma, k);
        out.push_back(check("design-ratio", "E_J/E_C ratio, the shunt capacitance and critical current "
                                            "laid out in the design, as of now, are 100, 47fF, and 240nA",
                            "E_J / E_C from I_c 240 nA and C_sigma 47 fF", point(t.design_ratio),
                            point(ej / ec), std::nullopt, tol));
        out.push_back(check("design-nu01", "omega_1/2pi 11.03 GHz, 11.99 GHz",
                            "closed-form nu01 from I_c 240 nA and C_sigma 47 fF", t.nu01,
                            point(nu01_closed(ej, ec, k)), Dimension::frequency, tol));
    }

    {
        AuditFinding f;
        f.id = "eta";
        f.claim_quote = "<eta> ~ 0.0002799 @ T_sys = 0.020K";
        f.derivation = "none: the quantity has no definition";
        f.claim = point(t.eta);
        f.status = AuditStatus::undefined;
        f.tolerance = tol;
        const double nbar = 1.0 / std::expm1(k.h * 12e9 / (k.kB * t.eta_t_sys));
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "read as thermal occupation at 12 GHz it gives %.3g at 20 mK; 2.8e-4 needs "
                      "about 70 mK",
                      nbar);
        f.note = buf;
        out.push_back(std::move(f));
    }
    return out;
}

json audit_json(const std::vector<AuditFinding>& findings) {
    json arr = json::array();
    for (const auto& f : findings) {
        json j;
        j["id"] = f.id;
        j["claim_quote"] = f.claim_quote;
        j["derivation"] = f.derivation;
        j["claim"] = interval_json(f.claim);
        j["computed"] = interval_json(f.computed);
        j["unit"] = f.dimension ? std::string(si_unit(*f.dimension)) : std::string("1");
        j["status"] = std::string(to_string(f.status));
        j["tolerance"] = number_json(f.tolerance);
        j["note"] = f.note;
        arr.push_back(std::move(j));
    }
    return arr;
}

}  // namespace xmon
