#include "xmon/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "xmon/error.hpp"

namespace xmon {

namespace detail {

Eigen::MatrixXd charge_matrix(double e_j, double e_c, double n_g, int n_max) {
    const int dim = 2 * n_max + 1;
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    for (int i = 0; i < dim; ++i) {
        const double n = static_cast<double>(i - n_max);
        h(i, i) = 4.0 * e_c * (n - n_g) * (n - n_g);
        if (i + 1 < dim) {
            h(i, i + 1) = -0.5 * e_j;
            h(i + 1, i) = -0.5 * e_j;
        }
    }
    return h;
}

std::vector<double> charge_eigenvalues(double e_j, double e_c, double n_g, int n_max) {
    const int dim = 2 * n_max + 1;
    // Eigen's tridiagonal QL loses digits on Joule-sized entries (~1e-24);
    // solve in units of the larger energy and scale back.
    double unit = std::max(std::abs(e_j), std::abs(e_c));
    if (unit == 0.0) unit = 1.0;
    Eigen::VectorXd diag(dim);
    Eigen::VectorXd sub = Eigen::VectorXd::Constant(std::max(dim - 1, 0), -0.5 * e_j / unit);
    for (int i = 0; i < dim; ++i) {
        const double n = static_cast<double>(i - n_max);
        diag(i) = 4.0 * (e_c / unit) * (n - n_g) * (n - n_g);
    }
    std::vector<double> out(dim);
    if (dim == 1) {
        out[0] = diag(0) * unit;
        return out;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw ConvergenceError("tridiagonal eigensolver failed");
    }
    const Eigen::VectorXd& w = solver.eigenvalues();
    for (int i = 0; i < dim; ++i) out[i] = w(i) * unit;
    std::stable_sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

namespace {

void check_cutoff(const ChargeBasisConfig& cfg) {
    if (cfg.n_max < min_charge_cutoff) {
        throw ConfigurationError("charge cutoff n_max = " + std::to_string(cfg.n_max) +
                                 " is below the minimum of " +
                                 std::to_string(min_charge_cutoff));
    }
    if (!std::isfinite(cfg.n_g)) throw ConfigurationError("offset charge must be finite");
}

void check_energies(const EnergyScales& en) {
    if (en.e_j < 0.0 || en.e_c < 0.0 || !std::isfinite(en.e_j) || !std::isfinite(en.e_c)) {
        throw InvalidParameter("E_J and E_C must be finite and non-negative");
    }
}

TransmonSpectrum make_spectrum(std::vector<double> levels, int n_max,
                               const PhysicalConstants& k) {
    TransmonSpectrum s;
    s.eigenvalues = std::move(levels);
    s.nu01 = (s.eigenvalues[1] - s.eigenvalues[0]) / k.h;
    s.nu12 = (s.eigenvalues[2] - s.eigenvalues[1]) / k.h;
    s.alpha_exact = s.nu01 - s.nu12;
    s.n_max_used = n_max;
    return s;
}

}  // namespace

Eigen::MatrixXd build_hamiltonian(const EnergyScales& energies, const ChargeBasisConfig& cfg) {
    check_cutoff(cfg);
    check_energies(energies);
    return detail::charge_matrix(energies.e_j, energies.e_c, cfg.n_g, cfg.n_max);
}

TransmonSpectrum diagonalize(const EnergyScales& energies, const ChargeBasisConfig& cfg,
                             const PhysicalConstants& k) {
    check_cutoff(cfg);
    check_energies(energies);

    int n_max = std::min(cfg.n_max, max_charge_cutoff - cutoff_escalation);
    auto current = detail::charge_eigenvalues(energies.e_j, energies.e_c, cfg.n_g, n_max);
    while (n_max + cutoff_escalation <= max_charge_cutoff) {
        const int next_cut = n_max + cutoff_escalation;
        auto next = detail::charge_eigenvalues(energies.e_j, energies.e_c, cfg.n_g, next_cut);
        const double a = current[1] - current[0];
        const double b = next[1] - next[0];
        // An exactly degenerate ground doublet (a == b == 0) counts as converged.
        const double scale = std::max(std::abs(b), energies.e_c);
        if (std::abs(b - a) <= convergence_tolerance * scale) {
            return make_spectrum(std::move(next), next_cut, k);
        }
        current = std::move(next);
        n_max = next_cut;
    }
    throw ConvergenceError("nu01 not converged to 1e-9 relative at n_max = " +
                           std::to_string(max_charge_cutoff));
}

double charge_dispersion(const EnergyScales& energies, const ChargeBasisConfig& cfg, int samples,
                         const PhysicalConstants& k) {
    if (samples < 9) throw ConfigurationError("charge dispersion needs at least 9 samples");
    double lo = 0.0;
    double hi = 0.0;
    for (int i = 0; i < samples; ++i) {
        ChargeBasisConfig point = cfg;
        point.n_g = static_cast<double>(i) / static_cast<double>(samples - 1);
        const double nu = diagonalize(energies, point, k).nu01;
        if (i == 0 || nu < lo) lo = nu;
        if (i == 0 || nu > hi) hi = nu;
    }
    return hi - lo;
}

double offset_charge(double q_r, double c_g, double v_g, const PhysicalConstants& k) {
    return q_r / (2.0 * k.e) + c_g * v_g / (2.0 * k.e);
}

DuffingLevels duffing_levels(const EnergyScales& energies, int levels) {
    if (levels < 3) throw ConfigurationError("Duffing ladder needs at least 3 levels");
    check_energies(energies);
    DuffingLevels out;
    if (energies.e_c > 0.0 && energies.e_j / energies.e_c < 20.0) {
        out.warning = "E_J/E_C = " + std::to_string(energies.e_j / energies.e_c) +
                      " is below 20; the quartic expansion is unreliable here";
    }
    const double hbar_wp = std::sqrt(8.0 * energies.e_j * energies.e_c);
    out.energies.reserve(levels);
    for (int n = 0; n < levels; ++n) {
        const double nd = static_cast<double>(n);
        out.energies.push_back(nd * hbar_wp -
                               energies.e_c / 12.0 * (6.0 * nd * nd + 6.0 * nd + 3.0));
    }
    return out;
}

}  // namespace xmon
