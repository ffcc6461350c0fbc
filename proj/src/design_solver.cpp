#include "xmon/design_solver.hpp"

#include <cmath>
#include <cstdio>
#include <functional>

#include "xmon/spectrum.hpp"
#include "xmon/units.hpp"

namespace xmon {

namespace {

std::string fmt(const char* pattern, double a, double b = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, a, b);
    return buf;
}

double exact_nu01(double e_j, double e_c, const PhysicalConstants& k) {
    EnergyScales en;
    en.e_j = e_j;
    en.e_c = e_c;
    return diagonalize(en, {}, k).nu01;
}

double exact_alpha(double e_j, double e_c, const PhysicalConstants& k) {
    EnergyScales en;
    en.e_j = e_j;
    en.e_c = e_c;
    return diagonalize(en, {}, k).alpha_exact;
}

// Bisection for f(x) = 0 on an increasing f; widens the bracket geometrically.
double bisect_increasing(const std::function<double(double)>& f, double seed) {
    double lo = seed * 0.5;
    double hi = seed * 2.0;
    for (int i = 0; i < 60 && f(lo) > 0.0; ++i) lo *= 0.5;
    for (int i = 0; i < 60 && f(hi) < 0.0; ++i) hi *= 2.0;
    for (int i = 0; i < 200 && (hi - lo) > 1e-14 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

DesignSolution finish(double e_j, double e_c, double target, bool refined,
                      const PhysicalConstants& k) {
    DesignSolution s;
    s.e_j = e_j;
    s.e_c = e_c;
    s.ratio = e_j / e_c;
    s.c_sigma = capacitance_from_ec(e_c, k);
    s.i_c = critical_current_from_ej(e_j, k);
    s.refined = refined;
    if (refined) {
        EnergyScales en;
        en.e_j = e_j;
        en.e_c = e_c;
        const auto spec = diagonalize(en, {}, k);
        s.achieved_nu01 = spec.nu01;
        s.alpha = spec.alpha_exact;
    } else {
        s.achieved_nu01 = transition_frequency(derive_energies({s.i_c, 0.0, s.c_sigma, 0.0, {}}, k), k).nu_01;
        s.alpha = e_c / k.h;
    }
    s.residual = std::abs(s.achieved_nu01 - target) / target;
    return s;
}

void require_transmon_regime(double ratio) {
    if (ratio < transmon_ratio_floor) {
        throw InfeasibleDesign({"ratio_floor", transmon_ratio_floor, ratio,
                                fmt("frozen parameter forces E_J/E_C = %.4g, below the transmon "
                                    "floor of %.4g",
                                    ratio, transmon_ratio_floor)});
    }
}

}  // namespace

void DesignTarget::validate() const {
    if (!(nu01_target > 0.0) || !std::isfinite(nu01_target)) {
        throw InvalidParameter("target nu01 must be positive");
    }
    if (c_fixed && i_fixed) throw InvalidParameter("freeze at most one of C_sigma or I_c");
    if (c_fixed && !(*c_fixed > 0.0)) throw InvalidParameter("frozen C_sigma must be positive");
    if (i_fixed && !(*i_fixed > 0.0)) throw InvalidParameter("frozen I_c must be positive");
    if (!c_fixed && !i_fixed && !(ratio_target >= transmon_ratio_floor)) {
        throw InvalidParameter("E_J/E_C target must be at least 20 (transmon regime)");
    }
    if (alpha_min && !(*alpha_min >= 0.0)) throw InvalidParameter("alpha_min must be non-negative");
}

DesignSolution solve_design(const DesignTarget& t, const PhysicalConstants& k) {
    t.validate();
    const double h_nu = k.h * t.nu01_target;

    double e_j = 0.0;
    double e_c = 0.0;
    if (t.c_fixed) {
        e_c = k.e * k.e / (2.0 * *t.c_fixed);
        e_j = (h_nu + e_c) * (h_nu + e_c) / (8.0 * e_c);
    } else if (t.i_fixed) {
        e_j = k.phi0 * *t.i_fixed / two_pi;
        // sqrt(E_C) solves x^2 - sqrt(8 E_J) x + h nu = 0; take the small root.
        const double b = std::sqrt(8.0 * e_j);
        const double disc = 8.0 * e_j - 4.0 * h_nu;
        if (disc < 0.0) {
            throw InfeasibleDesign({"i_fixed", h_nu / (2.0 * k.phi0 / two_pi), *t.i_fixed,
                                    "I_c = " + display_quantity(*t.i_fixed, Dimension::current) +
                                        " cannot reach nu01 = " +
                                        display_quantity(t.nu01_target, Dimension::frequency)});
        }
        const double x = 0.5 * (b - std::sqrt(disc));
        e_c = x * x;
    } else {
        e_c = h_nu / (std::sqrt(8.0 * t.ratio_target) - 1.0);
        e_j = t.ratio_target * e_c;
    }
    if (t.c_fixed || t.i_fixed) require_transmon_regime(e_j / e_c);

    if (!t.alpha_min) return finish(e_j, e_c, t.nu01_target, false, k);

    // Refine so the exact nu01 hits the target with the free quantity moving.
    if (t.c_fixed) {
        e_j = bisect_increasing([&](double x) { return exact_nu01(x, e_c, k) - t.nu01_target; }, e_j);
    } else if (t.i_fixed) {
        e_c = bisect_increasing([&](double x) { return exact_nu01(e_j, x, k) - t.nu01_target; }, e_c);
    } else {
        const double r = t.ratio_target;
        e_c = bisect_increasing([&](double x) { return exact_nu01(r * x, x, k) - t.nu01_target; }, e_c);
        e_j = r * e_c;
    }
    if (t.c_fixed || t.i_fixed) require_transmon_regime(e_j / e_c);

    DesignSolution s = finish(e_j, e_c, t.nu01_target, true, k);
    if (s.alpha + 1e-9 * *t.alpha_min < *t.alpha_min) {
        InfeasibilityReport rep;
        rep.constraint = t.c_fixed ? "c_fixed" : (t.i_fixed ? "i_fixed" : "ratio_target");
        rep.required = *t.alpha_min;
        rep.achievable = s.alpha;
        if (!t.c_fixed && !t.i_fixed) {
            // At fixed nu01 alpha grows as E_J/E_C falls; find the largest
            // ratio that still meets alpha_min.
            auto alpha_at = [&](double r) {
                const double ec = bisect_increasing(
                    [&](double x) { return exact_nu01(r * x, x, k) - t.nu01_target; },
                    h_nu / (std::sqrt(8.0 * r) - 1.0));
                return exact_alpha(r * ec, ec, k);
            };
            if (alpha_at(transmon_ratio_floor) < *t.alpha_min) {
                rep.constraint = "ratio_floor";
                rep.message = "alpha_min = " + display_quantity(*t.alpha_min, Dimension::frequency) +
                              " is unreachable at nu01 = " +
                              display_quantity(t.nu01_target, Dimension::frequency) +
                              " even at E_J/E_C = 20";
            } else {
                double lo = transmon_ratio_floor;
                double hi = t.ratio_target;
                for (int i = 0; i < 60; ++i) {
                    const double mid = 0.5 * (lo + hi);
                    (alpha_at(mid) >= *t.alpha_min ? lo : hi) = mid;
                }
                rep.message = "alpha_min = " + display_quantity(*t.alpha_min, Dimension::frequency) +
                              fmt(" requires E_J/E_C <= %.6g", lo);
            }
        } else {
            rep.message = "exact anharmonicity " + display_quantity(s.alpha, Dimension::frequency) +
                          " is below alpha_min = " + display_quantity(*t.alpha_min, Dimension::frequency) +
                          " with the frozen parameter";
        }
        throw InfeasibleDesign(std::move(rep));
    }
    return s;
}

}  // namespace xmon
