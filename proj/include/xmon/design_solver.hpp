#pragma once

// Inverse design: target nu01 (and E_J/E_C or a frozen C_sigma / I_c) to
// circuit values. Deterministic closed form, optionally refined against
// exact diagonalization by bisection.

#include <optional>
#include <string>

#include "xmon/constants.hpp"
#include "xmon/core_params.hpp"
#include "xmon/error.hpp"

namespace xmon {

inline constexpr double transmon_ratio_floor = 20.0;

struct DesignTarget {
    double nu01_target = 0.0;  // Hz
    double ratio_target = 100.0;
    std::optional<double> alpha_min;  // Hz
    std::optional<double> c_fixed;    // F, freezes C_sigma (ratio_target unused)
    std::optional<double> i_fixed;    // A, freezes I_c (ratio_target unused)

    void validate() const;
};

struct DesignSolution {
    double e_j = 0.0;      // J
    double e_c = 0.0;      // J
    double c_sigma = 0.0;  // F
    double i_c = 0.0;      // A
    double ratio = 0.0;
    double achieved_nu01 = 0.0;  // Hz
    double residual = 0.0;       // |achieved - target| / target
    double alpha = 0.0;          // Hz; exact when refined, E_C/h otherwise
    bool refined = false;        // achieved_nu01 comes from diagonalization
};

struct InfeasibilityReport {
    std::string constraint;  // binding constraint name
    double required = 0.0;
    double achievable = 0.0;
    std::string message;
};

class InfeasibleDesign : public Error {
public:
    explicit InfeasibleDesign(InfeasibilityReport report)
        : Error(report.message), report_(std::move(report)) {}
    const InfeasibilityReport& report() const { return report_; }

private:
    InfeasibilityReport report_;
};

inline constexpr double solver_tolerance = 1e-6;

DesignSolution solve_design(const DesignTarget& target, const PhysicalConstants& k = codata2018);

}  // namespace xmon
