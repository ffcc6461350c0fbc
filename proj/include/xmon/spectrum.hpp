#pragma once

// Exact transmon spectrum in the charge basis,
//   H = 4 E_C (n - n_g)^2 - E_J cos(phi),
// where cos(phi) couples neighbouring charge states with amplitude 1/2.

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "xmon/constants.hpp"
#include "xmon/core_params.hpp"

namespace xmon {

struct ChargeBasisConfig {
    int n_max = 20;     // basis spans -n_max..n_max
    double n_g = 0.0;   // offset charge in Cooper pairs

    int dimension() const { return 2 * n_max + 1; }
};

inline constexpr int min_charge_cutoff = 5;
inline constexpr int max_charge_cutoff = 60;
inline constexpr int cutoff_escalation = 5;
inline constexpr double convergence_tolerance = 1e-9;

struct TransmonSpectrum {
    std::vector<double> eigenvalues;  // ascending, J
    double nu01 = 0.0;                // Hz
    double nu12 = 0.0;                // Hz
    double alpha_exact = 0.0;         // nu01 - nu12, Hz
    double dispersion01 = 0.0;        // Hz, filled by charge_dispersion only
    int n_max_used = 0;
};

/// Dense charge-basis matrix (J). Throws ConfigurationError for n_max < 5.
Eigen::MatrixXd build_hamiltonian(const EnergyScales& energies, const ChargeBasisConfig& cfg);

/// Eigenvalues sorted ascending. Starts at cfg.n_max and raises the cutoff
/// in steps of 5 until nu01 moves by less than 1e-9 relative; throws
/// ConvergenceError if that needs more than n_max = 60.
TransmonSpectrum diagonalize(const EnergyScales& energies, const ChargeBasisConfig& cfg = {},
                             const PhysicalConstants& k = codata2018);

/// Peak-to-peak nu01 over `samples` uniformly spaced offsets on [0, 1].
/// Requires samples >= 9.
double charge_dispersion(const EnergyScales& energies, const ChargeBasisConfig& cfg,
                         int samples, const PhysicalConstants& k = codata2018);

/// n_g = Q_r/2e + C_g V_g/2e.
double offset_charge(double q_r, double c_g, double v_g, const PhysicalConstants& k = codata2018);

struct DuffingLevels {
    std::vector<double> energies;        // J, E_0 .. E_{levels-1}
    std::optional<std::string> warning;  // set when E_J/E_C < 20
};

/// First-order levels of hbar w_p a^+a - (E_C/12)(a + a^+)^4 keeping the
/// number-conserving part: E_n = n hbar w_p - (E_C/12)(6n^2 + 6n + 3).
DuffingLevels duffing_levels(const EnergyScales& energies, int levels);

namespace detail {

/// Unchecked charge-basis matrix for any n_max >= 0.
Eigen::MatrixXd charge_matrix(double e_j, double e_c, double n_g, int n_max);

/// Eigenvalues at a fixed cutoff, ascending.
std::vector<double> charge_eigenvalues(double e_j, double e_c, double n_g, int n_max);

}  // namespace detail

}  // namespace xmon
