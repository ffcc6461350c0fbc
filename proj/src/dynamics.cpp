#include "xmon/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <string>

#include "xmon/error.hpp"

namespace xmon {

namespace {

using cplx = std::complex<double>;

constexpr cplx I{0.0, 1.0};

// Truncated (a + a^+) element between n and n+1.
double ladder_element(int n) { return std::sqrt(static_cast<double>(n + 1)); }

void check_drive(const DriveSpec& drive) {
    if (!(drive.rabi >= 0.0) || !std::isfinite(drive.rabi)) {
        throw InvalidParameter("Rabi amplitude must be finite and non-negative");
    }
    if (!(drive.duration > 0.0) || !std::isfinite(drive.duration)) {
        throw InvalidParameter("evolution duration must be positive");
    }
    if (!std::isfinite(drive.omega_d) || drive.omega_d < 0.0) {
        throw InvalidParameter("drive frequency must be finite and non-negative");
    }
}

// Classic RK4 on dc/dt = f(t, c).
template <class Deriv>
Eigen::VectorXcd rk4_step(const Deriv& f, double t, const Eigen::VectorXcd& c, double h) {
    const Eigen::VectorXcd k1 = f(t, c);
    const Eigen::VectorXcd k2 = f(t + 0.5 * h, c + 0.5 * h * k1);
    const Eigen::VectorXcd k3 = f(t + 0.5 * h, c + 0.5 * h * k2);
    const Eigen::VectorXcd k4 = f(t + h, c + h * k3);
    return c + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

}  // namespace

QubitModel QubitModel::from_spectrum(const TransmonSpectrum& spectrum, int levels,
                                     const PhysicalConstants& k) {
    if (levels < 2) throw InvalidParameter("truncation must keep at least 2 levels");
    if (static_cast<int>(spectrum.eigenvalues.size()) < levels) {
        throw InvalidParameter("spectrum has fewer levels than requested");
    }
    QubitModel m;
    m.levels = levels;
    m.level_energies.assign(spectrum.eigenvalues.begin(), spectrum.eigenvalues.begin() + levels);
    m.omega_q = (m.level_energies[1] - m.level_energies[0]) / k.hbar;
    return m;
}

QubitModel QubitModel::two_level(double omega_q, const PhysicalConstants& k) {
    QubitModel m;
    m.levels = 2;
    m.level_energies = {0.0, k.hbar * omega_q};
    m.omega_q = omega_q;
    return m;
}

void QubitModel::validate(const PhysicalConstants& k) const {
    if (levels < 2) throw InvalidParameter("truncation must keep at least 2 levels");
    if (static_cast<int>(level_energies.size()) != levels) {
        throw InvalidParameter("level_energies size does not match truncation");
    }
    if (!std::is_sorted(level_energies.begin(), level_energies.end())) {
        throw InvalidParameter("level energies must be ascending");
    }
    const double expected = (level_energies[1] - level_energies[0]) / k.hbar;
    if (!(omega_q > 0.0) || std::abs(expected - omega_q) > 1e-9 * omega_q) {
        throw InvalidParameter("omega_q must equal (E_1 - E_0)/hbar");
    }
}

Eigen::MatrixXd rotating_frame_transform(const QubitModel& model, const DriveSpec& drive,
                                         const PhysicalConstants& k) {
    model.validate(k);
    const int d = model.levels;
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(d, d);
    for (int n = 0; n < d; ++n) {
        h(n, n) = (model.level_energies[n] - model.level_energies[0]) -
                  static_cast<double>(n) * k.hbar * drive.omega_d;
        if (n + 1 < d) {
            h(n, n + 1) = 0.5 * k.hbar * drive.rabi * ladder_element(n);
            h(n + 1, n) = h(n, n + 1);
        }
    }
    return h;
}

double default_step(const QubitModel& model, const DriveSpec& drive,
                    const PhysicalConstants& k) {
    if (drive.frame == Frame::lab) return (two_pi / model.omega_q) / 40.0;
    const Eigen::MatrixXd h = rotating_frame_transform(model, drive, k) / k.hbar;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h, Eigen::EigenvaluesOnly);
    const double w_max = es.eigenvalues().cwiseAbs().maxCoeff();
    if (w_max == 0.0) return drive.duration / 200.0;
    return std::min((two_pi / w_max) / 400.0, drive.duration);
}

EvolutionResult propagate(const QubitModel& model, const DriveSpec& drive, double step,
                          int record_every, const PhysicalConstants& k) {
    model.validate(k);
    check_drive(drive);
    if (!(step > 0.0) || !std::isfinite(step)) throw InvalidParameter("time step must be positive");
    if (record_every < 1) throw InvalidParameter("record stride must be at least 1");

    const int d = model.levels;
    const int n_steps = std::max(1, static_cast<int>(std::ceil(drive.duration / step - 1e-9)));
    const double h = drive.duration / n_steps;

    EvolutionResult res;
    res.steps = n_steps;
    if (drive.rabi > strong_drive_ratio * model.omega_q) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "drive ratio Omega/omega_q = %.4g exceeds %.2g", drive.rabi / model.omega_q,
                      strong_drive_ratio);
        res.warnings.emplace_back(buf);
    }

    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(d);
    c(0) = 1.0;

    auto record = [&](double t) {
        std::vector<double> p(d);
        double total = 0.0;
        for (int n = 0; n < d; ++n) {
            p[n] = std::norm(c(n));
            total += p[n];
        }
        res.times.push_back(t);
        res.populations.push_back(std::move(p));
        res.norm_error.push_back(std::abs(total - 1.0));
    };

    auto track_norm = [&] {
        res.norm_drift = std::max(res.norm_drift, std::abs(c.squaredNorm() - 1.0));
    };

    record(0.0);

    if (drive.frame == Frame::rotating) {
        const Eigen::MatrixXcd gen =
            (-I / k.hbar) * rotating_frame_transform(model, drive, k).cast<cplx>();
        auto f = [&gen](double, const Eigen::VectorXcd& v) -> Eigen::VectorXcd { return gen * v; };
        for (int s = 1; s <= n_steps; ++s) {
            c = rk4_step(f, (s - 1) * h, c, h);
            track_norm();
            if (s % record_every == 0 || s == n_steps) record(s * h);
        }
    } else {
        // Interaction picture of H0 = diag(E_n - E_0): c_n = e^{i w_n t} psi_n.
        std::vector<double> w(d);
        for (int n = 0; n < d; ++n) {
            w[n] = (model.level_energies[n] - model.level_energies[0]) / k.hbar;
        }
        const double rabi = drive.rabi;
        const double wd = drive.omega_d;
        auto f = [&](double t, const Eigen::VectorXcd& v) -> Eigen::VectorXcd {
            Eigen::VectorXcd out = Eigen::VectorXcd::Zero(d);
            const cplx amp = -I * rabi * std::cos(wd * t);
            for (int n = 0; n + 1 < d; ++n) {
                const cplx phase = std::polar(1.0, (w[n + 1] - w[n]) * t);
                const double x = ladder_element(n);
                out(n + 1) += amp * x * phase * v(n);
                out(n) += amp * x * std::conj(phase) * v(n + 1);
            }
            return out;
        };
        for (int s = 1; s <= n_steps; ++s) {
            c = rk4_step(f, (s - 1) * h, c, h);
            track_norm();
            if (s % record_every == 0 || s == n_steps) record(s * h);
        }
    }

    res.pi_pulse_time = first_population_peak(res, 1);
    return res;
}

EvolutionResult evolve(const QubitModel& model, const DriveSpec& drive, double step,
                       int record_every, const PhysicalConstants& k) {
    model.validate(k);
    if (drive.frame == Frame::lab && step > (two_pi / model.omega_q) / 20.0 * (1.0 + 1e-12)) {
        throw InvalidParameter("lab-frame step must not exceed 1/20 of the qubit period");
    }
    EvolutionResult res = propagate(model, drive, step, record_every, k);
    if (res.norm_drift >= max_norm_drift) {
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "norm drift %.3g reached the 1e-8 limit; reduce the time step (now %.4g s)",
                      res.norm_drift, drive.duration / res.steps);
        throw AccuracyError(buf);
    }
    return res;
}

std::optional<double> first_population_peak(const EvolutionResult& result, int level) {
    const auto& t = result.times;
    const auto& p = result.populations;
    if (p.empty() || level >= static_cast<int>(p.front().size())) return std::nullopt;
    // A peak is the running maximum once the population has fallen below half of it.
    // Smaller turnovers, such as counter-rotating wiggles in the lab frame, are skipped.
    std::size_t best = 0;
    for (std::size_t j = 1; j < p.size(); ++j) {
        if (p[j][level] > p[best][level]) {
            best = j;
        } else if (best > 0 && p[best][level] > 0.0 && p[j][level] < 0.5 * p[best][level]) {
            const std::size_t i = best;
            const double a = p[i - 1][level];
            const double b = p[i][level];
            const double c = p[i + 1][level];
            const double denom = a - 2.0 * b + c;
            double shift = 0.0;
            if (denom < 0.0) shift = 0.5 * (a - c) / denom;
            // Samples are uniform apart from the final one; use the local spacing.
            const double dt = (shift >= 0.0) ? t[i + 1] - t[i] : t[i] - t[i - 1];
            return t[i] + shift * dt;
        }
    }
    return std::nullopt;
}

GateTimeResult gate_time(const QubitModel& model, const DriveSpec& drive,
                         std::optional<double> step, const PhysicalConstants& k) {
    model.validate(k);
    if (std::abs(drive.omega_d - model.omega_q) > 1e-6 * model.omega_q) {
        throw InvalidParameter("gate_time requires a resonant drive (omega_d = omega_q)");
    }
    if (!(drive.rabi > 0.0)) throw InvalidParameter("gate_time requires a non-zero drive");
    const double dt = step.value_or(default_step(model, drive, k));
    const EvolutionResult res = evolve(model, drive, dt, 1, k);

    const double rabi_period = two_pi / drive.rabi;
    const auto peak = res.pi_pulse_time;
    if (!peak || *peak > rabi_period) {
        throw DurationError("no |1> population peak within the first Rabi period; extend the duration");
    }
    GateTimeResult out;
    out.pi_pulse_time = *peak;
    if (model.levels >= 3) {
        for (const auto& row : res.populations) {
            double leak = 0.0;
            for (int n = 2; n < model.levels; ++n) leak += row[n];
            out.leakage = std::max(out.leakage, leak);
        }
    }
    return out;
}

void write_population_csv(const EvolutionResult& result, std::ostream& out) {
    const std::size_t d = result.populations.empty() ? 0 : result.populations.front().size();
    out << "time_s";
    for (std::size_t n = 0; n < d; ++n) out << ",p" << n;
    out << ",norm_drift\n";
    char buf[32];
    for (std::size_t i = 0; i < result.times.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.12g", result.times[i]);
        out << buf;
        for (double p : result.populations[i]) {
            std::snprintf(buf, sizeof buf, "%.12g", p);
            out << ',' << buf;
        }
        std::snprintf(buf, sizeof buf, "%.6g", result.norm_error[i]);
        out << ',' << buf << '\n';
    }
}

}  // namespace xmon
