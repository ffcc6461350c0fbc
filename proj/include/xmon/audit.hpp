#pragma once

// Consistency audit of the built-in parameter table: every value that can
// be recomputed from the others is, and compared at a relative tolerance.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "xmon/constants.hpp"
#include "xmon/report.hpp"
#include "xmon/units.hpp"

namespace xmon {

enum class AuditStatus { consistent, inconsistent, undefined };

std::string_view to_string(AuditStatus s);

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

struct AuditFinding {
    std::string id;
    std::string claim_quote;   // the text being checked, verbatim
    std::string derivation;    // what was recomputed from what
    std::optional<Interval> claim;
    std::optional<Interval> computed;
    std::optional<Dimension> dimension;  // nullopt for ratios
    AuditStatus status = AuditStatus::undefined;
    double tolerance = 0.0;
    std::string note;
};

/// Built-in table values, SI. Ranges are stored as closed intervals.
struct ReferenceTable {
    Interval nu01{11.03e9, 11.99e9};
    double nu_central = 11.3e9;
    double g = 188.2e6;
    double alpha = 276e6;
    Interval q{1.75e7, 2.75e7};
    Interval t1{0.3e-3, 0.7e-3};
    double t1_abstract = 1.9e-3;
    double q_abstract = 2.75e7;
    Interval ratio{110.0, 119.0};
    double e_j_hz = 41.4e9;
    double e_c_hz = 414e6;
    Interval l_j{0.15e-9, 0.17e-9};
    Interval c_sigma{47.0e-15, 59.0e-15};
    Interval i_c{24.0e-9, 39.0e-9};
    Interval j_c{0.21e7, 0.39e7};  // A/m^2
    Interval f_rr{7.2e9, 7.25e9};
    double eta = 0.0002799;
    double eta_t_sys = 0.020;
    // Values stated in the design discussion rather than the table.
    double design_ratio = 100.0;
    double design_c_sigma = 47e-15;
    double design_i_c = 240e-9;
};

inline constexpr double default_audit_tolerance = 0.05;

/// CONSISTENT iff the computed interval overlaps the claim widened by
/// `tolerance` relative on both ends.
AuditStatus compare(const Interval& claim, const Interval& computed, double tolerance);

std::vector<AuditFinding> audit_table(const PhysicalConstants& k = codata2018,
                                      double tolerance = default_audit_tolerance,
                                      const ReferenceTable& table = {});

json audit_json(const std::vector<AuditFinding>& findings);

}  // namespace xmon
