#pragma once

// Closed-system evolution of a driven, truncated transmon ladder.
//
// The drive couples through hbar * Omega * cos(w_d t) * (a + a^+) with
// harmonic matrix elements sqrt(n+1). Two integrators share one RK4 core:
//   lab      - the full time-dependent Hamiltonian, integrated in the
//              interaction picture of the bare level energies so the fixed
//              step only has to resolve the drive, not the qubit phase;
//              counter-rotating terms are kept.
//   rotating - the time-independent RWA Hamiltonian of
//              rotating_frame_transform().
// The state is never renormalized; norm drift is reported.

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "xmon/constants.hpp"
#include "xmon/spectrum.hpp"

namespace xmon {

enum class Frame { lab, rotating };

struct DriveSpec {
    double omega_d = 0.0;   // rad/s
    double rabi = 0.0;      // Omega_Rabi, rad/s
    double duration = 0.0;  // s
    Frame frame = Frame::rotating;
};

struct QubitModel {
    int levels = 2;
    std::vector<double> level_energies;  // J, ascending
    double omega_q = 0.0;                // (E_1 - E_0)/hbar

    /// Lowest `levels` eigenvalues of an exact spectrum.
    static QubitModel from_spectrum(const TransmonSpectrum& spectrum, int levels,
                                    const PhysicalConstants& k = codata2018);
    static QubitModel two_level(double omega_q, const PhysicalConstants& k = codata2018);

    void validate(const PhysicalConstants& k = codata2018) const;
};

inline constexpr double max_norm_drift = 1e-8;
inline constexpr double strong_drive_ratio = 0.05;

struct EvolutionResult {
    std::vector<double> times;                     // s
    std::vector<std::vector<double>> populations;  // [sample][level]
    std::vector<double> norm_error;                // |sum p - 1| per sample
    double norm_drift = 0.0;                       // max over every step
    std::optional<double> pi_pulse_time;           // first |1> peak, s
    std::vector<std::string> warnings;
    int steps = 0;
};

/// Lab: (2 pi / w_q) / 40. Rotating: (2 pi / w_max) / 400 with w_max the
/// largest eigenvalue magnitude of the RWA Hamiltonian over hbar, which is
/// (2 pi / Omega) / 200 for a resonant two-level drive.
double default_step(const QubitModel& model, const DriveSpec& drive,
                    const PhysicalConstants& k = codata2018);

/// Integrates from the ground state without the accuracy gate. Populations
/// are recorded every `record_every` steps and at the final instant.
EvolutionResult propagate(const QubitModel& model, const DriveSpec& drive, double step,
                          int record_every = 1, const PhysicalConstants& k = codata2018);

/// propagate() plus the checks: lab-frame step <= (2 pi / w_q)/20, and
/// AccuracyError when norm drift reaches 1e-8.
EvolutionResult evolve(const QubitModel& model, const DriveSpec& drive, double step,
                       int record_every = 1, const PhysicalConstants& k = codata2018);

/// RWA Hamiltonian (J): diagonal (E_n - E_0) - n hbar w_d, off-diagonal
/// hbar Omega/2 sqrt(n+1) between n and n+1.
Eigen::MatrixXd rotating_frame_transform(const QubitModel& model, const DriveSpec& drive,
                                         const PhysicalConstants& k = codata2018);

struct GateTimeResult {
    double pi_pulse_time = 0.0;  // s
    double leakage = 0.0;        // max over t of sum_{n>=2} P_n
};

/// Resonant pi-pulse time and leakage. Uses default_step() when step is
/// not given; throws DurationError if no |1> peak occurs within the first
/// Rabi period of the run.
GateTimeResult gate_time(const QubitModel& model, const DriveSpec& drive,
                         std::optional<double> step = std::nullopt,
                         const PhysicalConstants& k = codata2018);

/// First Rabi maximum of P_1 refined by a parabola through the three
/// samples around it. A maximum counts once P_1 falls below half of it;
/// nullopt when that never happens.
std::optional<double> first_population_peak(const EvolutionResult& result, int level = 1);

/// CSV with header time_s,p0,p1,...,norm_drift (one row per sample).
void write_population_csv(const EvolutionResult& result, std::ostream& out);

}  // namespace xmon
