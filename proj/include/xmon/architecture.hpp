#pragma once

// Chip-level model of the quad-transmon-coupler (QTC) layout: four qubits
// on one coupling resonator, resonators hung on Purcell-filtered feedlines,
// feedlines joined by a common bus.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "xmon/constants.hpp"
#include "xmon/core_params.hpp"

namespace xmon {

struct QubitRecord {
    std::string id;
    JunctionSpec junction;
    double nu01_target = 0.0;  // Hz
};

enum class WaveType { quarter, half };

std::string_view to_string(WaveType w);

struct ResonatorRecord {
    std::string id;
    double frequency = 0.0;  // Hz
    WaveType wave = WaveType::quarter;
};

struct CouplerRecord {
    std::string qubit;
    std::string resonator;
    double g = 0.0;  // coupling strength g/2pi, Hz
};

struct FeedlineRecord {
    std::string id;
    std::string purcell_filter;
    std::vector<std::string> resonators;
    std::string bus = "bus0";
};

struct ChipDesign {
    std::string name;
    std::vector<QubitRecord> qubits;
    std::vector<ResonatorRecord> resonators;
    std::vector<CouplerRecord> couplers;
    std::vector<FeedlineRecord> feedlines;
    std::vector<std::string> flux_lines;  // qubit ids with a flux bias line

    const QubitRecord* find_qubit(std::string_view id) const;
    const ResonatorRecord* find_resonator(std::string_view id) const;

    /// Throws ParseError naming the id on duplicates or dangling references.
    void check_references() const;
};

enum class Severity { info, warning, error };

std::string_view to_string(Severity s);

struct Violation {
    std::string rule;  // QTC-4, PUR-4, FREQ-COLLIDE, BUS
    Severity severity = Severity::error;
    std::string message;
    std::vector<std::string> offending_ids;

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
    std::vector<Violation> violations;  // sorted by (rule, ids, severity, message)
    bool passed = true;                 // no ERROR violations

    std::size_t count(std::string_view rule) const;
    std::size_t count(Severity s) const;
};

struct TopologyRules {
    double collision_threshold = 100e6;  // Hz
    int qubits_per_resonator = 4;
    int max_filter_loads = 4;
    int preferred_filter_loads = 3;
};

/// Runs QTC-4, PUR-4, FREQ-COLLIDE and BUS. A filter load is one
/// resonator (with its coupled qubits) attached to the filter's feedline.
/// Reference errors are raised by check_references() before any rule runs.
ValidationReport validate_topology(const ChipDesign& design, const TopologyRules& rules = {});

struct DispersiveParams {
    double omega_a = 0.0;  // rad/s
    double omega_b = 0.0;  // rad/s
    double p_a = 0.0;
    double p_b = 0.0;
    double e_j = 0.0;      // J
};

struct DispersiveShift {
    double chi = 0.0;    // rad/s
    double theta = 0.0;  // 2 chi, rad/s
    double chi_hz() const { return chi / two_pi; }
    double theta_hz() const { return theta / two_pi; }
};

/// chi = hbar w_a w_b p_a p_b / (4 E_J), theta = 2 chi.
DispersiveShift dispersive_shift(const DispersiveParams& params,
                                 const PhysicalConstants& k = codata2018);

// ---------------------------------------------------------------------------
// Coupled qubit-resonator spectra

/// One ladder. levels[n] is the energy (J) of n excitations, levels[0] == 0.
struct Mode {
    enum class Kind { transmon, resonator };
    std::string id;
    std::vector<double> levels;
    Kind kind = Kind::transmon;
};

/// g (a^+ b + a b^+) between modes a and b, g in J.
struct ExchangeCoupling {
    int a = 0;
    int b = 0;
    double g = 0.0;
};

struct CoupledSystem {
    std::vector<Mode> modes;
    std::vector<ExchangeCoupling> couplings;

    std::size_t dimension() const;
};

inline constexpr std::size_t max_hilbert_dimension = 4096;

struct CoupledSpectrumOptions {
    int qubit_levels = 2;
    int resonator_levels = 3;
    std::optional<std::string> unit;  // restrict to the component holding this resonator id
};

/// Harmonic ladder n * h * f.
Mode harmonic_mode(std::string id, double frequency, int levels,
                   const PhysicalConstants& k = codata2018);

/// Transmon ladder from exact charge-basis diagonalization at n_g = 0.
Mode transmon_mode(const QubitRecord& qubit, int levels, const PhysicalConstants& k = codata2018);

/// Connected components of the qubit-resonator coupling graph.
std::vector<CoupledSystem> coupled_units(const ChipDesign& design,
                                         const CoupledSpectrumOptions& options = {},
                                         const PhysicalConstants& k = codata2018);

/// Dense Hamiltonian (J) on the product basis, assembled from Kronecker
/// products of single-mode operators. Mixed radix with mode 0 slowest.
Eigen::MatrixXd system_hamiltonian(const CoupledSystem& system);

/// Eigenfrequencies (Hz) relative to the ground state, ascending. Each
/// excitation-number sector is diagonalized separately.
std::vector<double> system_eigenfrequencies(const CoupledSystem& system,
                                            const PhysicalConstants& k = codata2018);

/// Whole-chip spectrum: per-unit spectra merged by summing energies.
/// Throws CapacityError when the product dimension exceeds 4096.
std::vector<double> coupled_spectrum(const ChipDesign& design,
                                     const CoupledSpectrumOptions& options = {},
                                     const PhysicalConstants& k = codata2018);

struct SectorReport {
    std::vector<std::string> mode_ids;
    std::map<int, std::size_t> sector_dimensions;  // excitation number -> dimension
    double max_cross_sector = 0.0;                 // largest |H_ij| between sectors, J
};

struct ConservationReport {
    bool conserved = true;
    std::vector<SectorReport> units;
};

/// Confirms the interaction is block diagonal in total excitation number.
ConservationReport excitation_number_check(const ChipDesign& design,
                                           const CoupledSpectrumOptions& options = {},
                                           const PhysicalConstants& k = codata2018);

ConservationReport excitation_number_check(const CoupledSystem& system);

}  // namespace xmon
