#include "xmon/cli.hpp"

#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "xmon/architecture.hpp"
#include "xmon/audit.hpp"
#include "xmon/core_params.hpp"
#include "xmon/design_file.hpp"
#include "xmon/design_solver.hpp"
#include "xmon/dynamics.hpp"
#include "xmon/error.hpp"
#include "xmon/readout_budget.hpp"
#include "xmon/report.hpp"
#include "xmon/spectrum.hpp"
#include "xmon/units.hpp"

namespace xmon {

namespace {

const PhysicalConstants& k = codata2018;

struct Globals {
    bool json = false;
    std::string out;
};

// Two-column human output.
class Table {
public:
    void add(std::string key, std::string value) { rows_.emplace_back(std::move(key), std::move(value)); }
    void add(std::string key, double si, Dimension d) { add(std::move(key), display_quantity(si, d)); }
    void add_number(std::string key, double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6g", v);
        add(std::move(key), buf);
    }
    void blank() { rows_.emplace_back("", ""); }

    std::string str() const {
        std::size_t width = 0;
        for (const auto& [key, value] : rows_) width = std::max(width, key.size());
        std::string s;
        for (const auto& [key, value] : rows_) {
            if (key.empty() && value.empty()) {
                s += "\n";
                continue;
            }
            s += key + std::string(width + 2 - key.size(), ' ') + value + "\n";
        }
        return s;
    }

private:
    std::vector<std::pair<std::string, std::string>> rows_;
};

void emit(const Globals& g, const json& report, const std::string& human, std::ostream& out) {
    const std::string text = g.json ? dump_report(report) : human;
    if (!g.out.empty()) {
        write_file_atomic(g.out, text);
    } else {
        out << text;
    }
}

json freq(double hz) { return quantity_json(hz, Dimension::frequency); }

std::optional<double> parse_opt(const std::string& text, Dimension d) {
    if (text.empty()) return std::nullopt;
    return parse_quantity(text, d);
}

// Energy scales from inline values or one qubit of a design file.
struct EnergyOptions {
    std::string ej, ec, ic, csigma, design, qubit;

    void bind(CLI::App* app) {
        app->add_option("--ej", ej, "Josephson energy as E_J/h, e.g. 41.4GHz");
        app->add_option("--ec", ec, "charging energy as E_C/h, e.g. 414MHz");
        app->add_option("--ic", ic, "critical current, e.g. 83.3nA");
        app->add_option("--csigma", csigma, "total capacitance, e.g. 46.8fF");
        app->add_option("--design", design, "design file");
        app->add_option("--qubit", qubit, "qubit id within --design");
    }

    bool inline_given() const { return !ej.empty() || !ec.empty() || !ic.empty() || !csigma.empty(); }

    std::vector<std::pair<std::string, EnergyScales>> resolve() const {
        if (!ej.empty() || !ec.empty()) {
            if (ej.empty() || ec.empty()) throw InvalidParameter("--ej and --ec go together");
            return {{"inline", energies_from_frequencies(parse_quantity(ej, Dimension::frequency),
                                                         parse_quantity(ec, Dimension::frequency), k)}};
        }
        if (!ic.empty() || !csigma.empty()) {
            if (ic.empty() || csigma.empty()) throw InvalidParameter("--ic and --csigma go together");
            JunctionSpec spec;
            spec.i_c = parse_quantity(ic, Dimension::current);
            spec.c_b = parse_quantity(csigma, Dimension::capacitance);
            return {{"inline", derive_energies(spec, k)}};
        }
        if (design.empty()) {
            throw InvalidParameter("give --ej/--ec, --ic/--csigma or --design");
        }
        const DesignBundle bundle = load_design(design, k);
        std::vector<std::pair<std::string, EnergyScales>> out;
        for (const auto& q : bundle.chip.qubits) {
            if (!qubit.empty() && q.id != qubit) continue;
            out.emplace_back(q.id, derive_energies(q.junction, k));
        }
        if (out.empty()) throw InvalidParameter("no qubit '" + qubit + "' in " + design);
        return out;
    }

    EnergyScales single() const {
        auto all = resolve();
        if (all.size() != 1) throw InvalidParameter("--design needs --qubit here");
        return all.front().second;
    }
};

// derive ---------------------------------------------------------------------

struct DeriveCmd {
    EnergyOptions energy;
    double q = 0.0;

    void bind(CLI::App* app) {
        energy.bind(app);
        app->add_option("--q", q, "quality factor, adds T1 = Q / 2 pi nu01")->check(CLI::PositiveNumber);
    }

    int run(const Globals& g, std::ostream& out) const {
        json rows = json::array();
        Table t;
        for (const auto& [id, en] : energy.resolve()) {
            const auto tf = transition_frequency(en, k);
            json j{{"id", id},
                   {"e_j", freq(en.e_j / k.h)},
                   {"e_c", freq(en.e_c / k.h)},
                   {"c_sigma", quantity_json(en.c_sigma, Dimension::capacitance)},
                   {"l_j", quantity_json(en.l_j, Dimension::inductance)},
                   {"i_c", quantity_json(critical_current_from_ej(en.e_j, k), Dimension::current)},
                   {"ratio", number_json(en.ratio)},
                   {"nu_p", freq(tf.nu_p)},
                   {"nu01", freq(tf.nu_01)},
                   {"alpha_estimate", freq(anharmonicity_estimate(en, k))}};
            t.add("qubit", id);
            t.add("E_J/h", en.e_j / k.h, Dimension::frequency);
            t.add("E_C/h", en.e_c / k.h, Dimension::frequency);
            t.add_number("E_J/E_C", en.ratio);
            t.add("C_sigma", en.c_sigma, Dimension::capacitance);
            t.add("L_J", en.l_j, Dimension::inductance);
            t.add("I_c", critical_current_from_ej(en.e_j, k), Dimension::current);
            t.add("nu_p", tf.nu_p, Dimension::frequency);
            t.add("nu01", tf.nu_01, Dimension::frequency);
            t.add("alpha ~ E_C/h", anharmonicity_estimate(en, k), Dimension::frequency);
            if (q > 0.0) {
                const auto budget = relaxation_from_q(q, tf.nu_01);
                j["t1"] = quantity_json(budget.t1, Dimension::time);
                t.add("T1", budget.t1, Dimension::time);
            }
            t.blank();
            rows.push_back(std::move(j));
        }
        emit(g, json{{"qubits", rows}}, t.str(), out);
        return 0;
    }
};

// spectrum -------------------------------------------------------------------

struct SpectrumCmd {
    EnergyOptions energy;
    double n_g = 0.0;
    int n_max = 20;
    int samples = 21;
    int levels = 5;

    void bind(CLI::App* app) {
        energy.bind(app);
        app->add_option("--ng", n_g, "offset charge in Cooper pairs");
        app->add_option("--nmax", n_max, "initial charge cutoff");
        app->add_option("--samples", samples, "offset-charge samples for the dispersion sweep (0 skips it)");
        app->add_option("--levels", levels, "levels to list")->check(CLI::Range(2, 40));
    }

    int run(const Globals& g, std::ostream& out) const {
        const EnergyScales en = energy.single();
        ChargeBasisConfig cfg;
        cfg.n_max = n_max;
        cfg.n_g = n_g;
        const TransmonSpectrum s = diagonalize(en, cfg, k);
        std::optional<double> dispersion;
        if (samples > 0) dispersion = charge_dispersion(en, cfg, samples, k);

        json lv = json::array();
        Table t;
        t.add_number("E_J/E_C", en.ratio);
        t.add("nu01", s.nu01, Dimension::frequency);
        t.add("nu12", s.nu12, Dimension::frequency);
        t.add("alpha", s.alpha_exact, Dimension::frequency);
        t.add("closed-form nu01", transition_frequency(en, k).nu_01, Dimension::frequency);
        if (dispersion) t.add("dispersion01", *dispersion, Dimension::frequency);
        t.add("n_max used", std::to_string(s.n_max_used));
        const int shown = std::min<int>(levels, static_cast<int>(s.eigenvalues.size()));
        for (int i = 0; i < shown; ++i) {
            const double f = (s.eigenvalues[i] - s.eigenvalues[0]) / k.h;
            lv.push_back(freq(f));
            if (i > 0) t.add("E_" + std::to_string(i) + " - E_0", f, Dimension::frequency);
        }
        json j{{"ratio", number_json(en.ratio)},
               {"n_g", number_json(n_g)},
               {"nu01", freq(s.nu01)},
               {"nu12", freq(s.nu12)},
               {"alpha", freq(s.alpha_exact)},
               {"nu01_closed_form", freq(transition_frequency(en, k).nu_01)},
               {"dispersion01", dispersion ? freq(*dispersion) : json(nullptr)},
               {"n_max_used", s.n_max_used},
               {"levels", lv}};
        emit(g, j, t.str(), out);
        return 0;
    }
};

// rabi -----------------------------------------------------------------------

struct RabiCmd {
    EnergyOptions energy;
    std::string nu01;
    int levels = 2;
    std::string rabi_freq = "25MHz";
    std::string detuning = "0Hz";
    std::string duration = "40ns";
    std::string frame = "rotating";
    std::string step;
    int record_every = 1;
    std::string csv;

    void bind(CLI::App* app) {
        energy.bind(app);
        app->add_option("--nu01", nu01, "two-level qubit frequency (instead of energy options)");
        app->add_option("--levels", levels, "ladder truncation")->check(CLI::Range(2, 10));
        app->add_option("--rabi-freq", rabi_freq, "Omega_Rabi / 2pi");
        app->add_option("--detuning", detuning, "drive minus qubit frequency");
        app->add_option("--duration", duration, "evolution time");
        app->add_option("--frame", frame, "rotating or lab")->check(CLI::IsMember({"rotating", "lab"}));
        app->add_option("--step", step, "fixed RK4 step (default chosen from the frame)");
        app->add_option("--record-every", record_every, "keep every n-th step")->check(CLI::PositiveNumber);
        app->add_option("--csv", csv, "write populations here instead of stdout");
    }

    int run(const Globals& g, std::ostream& out) const {
        QubitModel model;
        if (!nu01.empty()) {
            if (energy.inline_given() || !energy.design.empty()) {
                throw InvalidParameter("--nu01 excludes the energy options");
            }
            if (levels != 2) throw InvalidParameter("--nu01 describes a two-level model; use --ej/--ec for more levels");
            model = QubitModel::two_level(two_pi * parse_quantity(nu01, Dimension::frequency), k);
        } else {
            model = QubitModel::from_spectrum(diagonalize(energy.single(), {}, k), levels, k);
        }
        DriveSpec drive;
        drive.omega_d = model.omega_q + two_pi * parse_quantity(detuning, Dimension::frequency);
        drive.rabi = two_pi * parse_quantity(rabi_freq, Dimension::frequency);
        drive.duration = parse_quantity(duration, Dimension::time);
        drive.frame = frame == "lab" ? Frame::lab : Frame::rotating;
        const double h = step.empty() ? default_step(model, drive, k) : parse_quantity(step, Dimension::time);

        const EvolutionResult r = evolve(model, drive, h, record_every, k);
        std::ostringstream csv_text;
        write_population_csv(r, csv_text);
        if (csv.empty()) {
            out << csv_text.str();
            if (g.out.empty()) return 0;
        } else {
            write_file_atomic(csv, csv_text.str());
        }

        json fin = json::array();
        for (double p : r.populations.back()) fin.push_back(number_json(p));
        json j{{"levels", model.levels},
               {"frame", frame},
               {"step", quantity_json(h, Dimension::time)},
               {"steps", r.steps},
               {"norm_drift", number_json(r.norm_drift)},
               {"final_populations", fin},
               {"pi_pulse_time", r.pi_pulse_time ? quantity_json(*r.pi_pulse_time, Dimension::time)
                                                 : json(nullptr)},
               {"warnings", r.warnings}};
        Table t;
        t.add("levels", std::to_string(model.levels));
        t.add("frame", frame);
        t.add("step", h, Dimension::time);
        t.add("steps", std::to_string(r.steps));
        t.add_number("norm drift", r.norm_drift);
        if (r.pi_pulse_time) t.add("pi pulse", *r.pi_pulse_time, Dimension::time);
        for (std::size_t i = 0; i < r.populations.back().size(); ++i) {
            t.add_number("P" + std::to_string(i) + " final", r.populations.back()[i]);
        }
        for (const auto& w : r.warnings) t.add("warning", w);
        if (csv.empty()) {
            write_file_atomic(g.out, g.json ? dump_report(j) : t.str());
        } else {
            emit(g, j, t.str(), out);
        }
        return 0;
    }
};

// topology-check -------------------------------------------------------------

struct TopologyCmd {
    std::string design;
    std::string threshold = "100MHz";

    void bind(CLI::App* app) {
        app->add_option("design", design, "design file")->required();
        app->add_option("--threshold", threshold, "frequency-collision threshold");
    }

    int run(const Globals& g, std::ostream& out) const {
        const DesignBundle bundle = load_design(design, k);
        TopologyRules rules;
        rules.collision_threshold = parse_quantity(threshold, Dimension::frequency);
        const ValidationReport rep = validate_topology(bundle.chip, rules);

        json vs = json::array();
        std::string human;
        for (const auto& v : rep.violations) {
            vs.push_back({{"rule", v.rule},
                          {"severity", std::string(to_string(v.severity))},
                          {"message", v.message},
                          {"ids", v.offending_ids}});
            std::string ids;
            for (const auto& id : v.offending_ids) ids += (ids.empty() ? "" : ",") + id;
            human += std::string(to_string(v.severity)) + "  " + v.rule + "  [" + ids + "]  " + v.message + "\n";
        }
        human += rep.passed ? "PASSED\n" : "FAILED\n";
        json j{{"design", bundle.chip.name},
               {"passed", rep.passed},
               {"counts",
                {{"ERROR", rep.count(Severity::error)},
                 {"WARNING", rep.count(Severity::warning)},
                 {"INFO", rep.count(Severity::info)}}},
               {"violations", vs}};
        emit(g, j, human, out);
        return rep.passed ? 0 : 1;
    }
};

// coupled-spectrum -----------------------------------------------------------

struct CoupledCmd {
    std::string design;
    std::string unit;
    int qubit_levels = 2;
    int resonator_levels = 3;
    int count = 12;

    void bind(CLI::App* app) {
        app->add_option("design", design, "design file")->required();
        app->add_option("--unit", unit, "only the unit holding this resonator");
        app->add_option("--qubit-levels", qubit_levels)->check(CLI::Range(2, 6));
        app->add_option("--resonator-levels", resonator_levels)->check(CLI::Range(2, 10));
        app->add_option("--count", count, "lines to list above the ground state")->check(CLI::PositiveNumber);
    }

    int run(const Globals& g, std::ostream& out) const {
        const DesignBundle bundle = load_design(design, k);
        CoupledSpectrumOptions opt;
        opt.qubit_levels = qubit_levels;
        opt.resonator_levels = resonator_levels;
        if (!unit.empty()) opt.unit = unit;
        const std::vector<double> f = coupled_spectrum(bundle.chip, opt, k);
        const ConservationReport cons = excitation_number_check(bundle.chip, opt, k);

        json lines = json::array();
        Table t;
        const std::size_t n = std::min<std::size_t>(f.size(), static_cast<std::size_t>(count) + 1);
        for (std::size_t i = 1; i < n; ++i) {
            lines.push_back(freq(f[i]));
            t.add("E_" + std::to_string(i) + " - E_0", f[i], Dimension::frequency);
        }
        t.add("states", std::to_string(f.size()));
        t.add("excitation number", cons.conserved ? "conserved" : "NOT conserved");
        json j{{"design", bundle.chip.name},
               {"unit", unit.empty() ? json(nullptr) : json(unit)},
               {"states", f.size()},
               {"lines", lines},
               {"excitation_number_conserved", cons.conserved}};
        emit(g, j, t.str(), out);
        return 0;
    }
};

// noise-budget ---------------------------------------------------------------

struct NoiseCmd {
    std::string design;
    std::string signal_freq;
    double photons = 0.0;
    std::string bandwidth;
    std::string tau;

    void bind(CLI::App* app) {
        app->add_option("design", design, "design file with a readout_chain (default chain otherwise)");
        app->add_option("--freq", signal_freq, "signal frequency for the default chain (11.3GHz)");
        app->add_option("--photons", photons, "signal photons for the SNR estimate");
        app->add_option("--bandwidth", bandwidth, "measurement bandwidth for the SNR estimate");
        app->add_option("--tau", tau, "integration time for the SNR estimate");
    }

    int run(const Globals& g, std::ostream& out) const {
        NoiseChain chain;
        if (!design.empty()) {
            const DesignBundle bundle = load_design(design, k);
            if (!bundle.readout) throw ConfigurationError(design + " has no readout_chain");
            chain = *bundle.readout;
            if (!signal_freq.empty()) chain.signal_freq = parse_quantity(signal_freq, Dimension::frequency);
        } else {
            chain = default_readout_chain(
                signal_freq.empty() ? 11.3e9 : parse_quantity(signal_freq, Dimension::frequency), k);
        }
        const NoiseBudget b = cascade_noise_temperature(chain);

        Table t;
        json stages = json::array();
        for (const auto& s : b.stages) {
            stages.push_back({{"name", s.name},
                              {"input_referred", quantity_json(s.input_referred, Dimension::temperature)},
                              {"fraction", number_json(s.fraction)}});
            char buf[96];
            std::snprintf(buf, sizeof buf, "%s  (%.1f%%)",
                          display_quantity(s.input_referred, Dimension::temperature).c_str(),
                          100.0 * s.fraction);
            t.add(s.name, buf);
        }
        t.add("T_sys", b.t_sys, Dimension::temperature);
        t.add("total gain", b.total_gain_db, Dimension::decibel);
        t.add("quantum limit", quantum_limit_temperature(chain.signal_freq, k), Dimension::temperature);
        json j{{"signal_freq", freq(chain.signal_freq)},
               {"t_sys", quantity_json(b.t_sys, Dimension::temperature)},
               {"total_gain_db", number_json(b.total_gain_db)},
               {"quantum_limit", quantity_json(quantum_limit_temperature(chain.signal_freq, k),
                                               Dimension::temperature)},
               {"stages", stages}};
        const bool any_snr = photons != 0.0 || !bandwidth.empty() || !tau.empty();
        if (any_snr) {
            if (!(photons > 0.0) || bandwidth.empty() || tau.empty()) {
                throw InvalidParameter("the SNR estimate needs --photons, --bandwidth and --tau");
            }
            const double snr = snr_from_temperature(b.t_sys, chain.signal_freq, photons,
                                                    parse_quantity(bandwidth, Dimension::frequency),
                                                    parse_quantity(tau, Dimension::time), k);
            j["snr"] = number_json(snr);
            t.add_number("SNR", snr);
        }
        emit(g, j, t.str(), out);
        return 0;
    }
};

// optimize -------------------------------------------------------------------

struct OptimizeCmd {
    std::string nu01;
    double ratio = 100.0;
    std::string alpha_min, c_fixed, i_fixed;

    void bind(CLI::App* app) {
        app->add_option("--nu01", nu01, "target qubit frequency")->required();
        app->add_option("--ratio", ratio, "target E_J/E_C");
        app->add_option("--alpha-min", alpha_min, "minimum anharmonicity; refines against diagonalization");
        app->add_option("--c-fixed", c_fixed, "freeze C_sigma");
        app->add_option("--i-fixed", i_fixed, "freeze I_c");
    }

    int run(const Globals& g, std::ostream& out, std::ostream& err) const {
        DesignTarget target;
        target.nu01_target = parse_quantity(nu01, Dimension::frequency);
        target.ratio_target = ratio;
        target.alpha_min = parse_opt(alpha_min, Dimension::frequency);
        target.c_fixed = parse_opt(c_fixed, Dimension::capacitance);
        target.i_fixed = parse_opt(i_fixed, Dimension::current);
        DesignSolution s;
        try {
            s = solve_design(target, k);
        } catch (const InfeasibleDesign& e) {
            const auto& r = e.report();
            json j{{"infeasible",
                    {{"constraint", r.constraint},
                     {"required", number_json(r.required)},
                     {"achievable", number_json(r.achievable)},
                     {"message", r.message}}}};
            emit(g, j, "infeasible (" + r.constraint + "): " + r.message + "\n", out);
            if (!g.out.empty()) err << "infeasible: " << r.message << "\n";
            return 1;
        }
        json j{{"e_j", freq(s.e_j / k.h)},
               {"e_c", freq(s.e_c / k.h)},
               {"c_sigma", quantity_json(s.c_sigma, Dimension::capacitance)},
               {"i_c", quantity_json(s.i_c, Dimension::current)},
               {"ratio", number_json(s.ratio)},
               {"achieved_nu01", freq(s.achieved_nu01)},
               {"residual", number_json(s.residual)},
               {"alpha", freq(s.alpha)},
               {"refined", s.refined}};
        Table t;
        t.add("E_C/h", s.e_c / k.h, Dimension::frequency);
        t.add("E_J/h", s.e_j / k.h, Dimension::frequency);
        t.add_number("E_J/E_C", s.ratio);
        t.add("C_sigma", s.c_sigma, Dimension::capacitance);
        t.add("I_c", s.i_c, Dimension::current);
        t.add("nu01", s.achieved_nu01, Dimension::frequency);
        t.add_number("residual", s.residual);
        t.add(s.refined ? "alpha (exact)" : "alpha ~ E_C/h", s.alpha, Dimension::frequency);
        emit(g, j, t.str(), out);
        return 0;
    }
};

// audit ----------------------------------------------------------------------

struct AuditCmd {
    double tolerance = default_audit_tolerance;

    void bind(CLI::App* app) {
        app->add_option("--tolerance", tolerance, "relative tolerance")->check(CLI::NonNegativeNumber);
    }

    int run(const Globals& g, std::ostream& out) const {
        const auto findings = audit_table(k, tolerance);
        std::string human;
        for (const auto& f : findings) {
            const auto show = [&](const std::optional<Interval>& iv) -> std::string {
                if (!iv) return "-";
                const auto one = [&](double v) {
                    if (f.dimension) return display_quantity(v, *f.dimension, 6);
                    char buf[32];
                    std::snprintf(buf, sizeof buf, "%.6g", v);
                    return std::string(buf);
                };
                return iv->lo == iv->hi ? one(iv->lo) : one(iv->lo) + " .. " + one(iv->hi);
            };
            char line[256];
            std::snprintf(line, sizeof line, "%-12s  %-18s  computed %s, claimed %s\n",
                          std::string(to_string(f.status)).c_str(), f.id.c_str(),
                          show(f.computed).c_str(), show(f.claim).c_str());
            human += line;
        }
        emit(g, audit_json(findings), human, out);
        return 0;
    }
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Transmon design toolkit", "xmon"};
    app.fallthrough();
    app.require_subcommand(1);
    Globals g;
    app.add_flag("--json", g.json, "machine-readable JSON output");
    app.add_option("--out", g.out, "write the report to this file");

    DeriveCmd derive;
    SpectrumCmd spectrum;
    RabiCmd rabi;
    TopologyCmd topology;
    CoupledCmd coupled;
    NoiseCmd noise;
    OptimizeCmd optimize;
    AuditCmd audit;
    auto* c_derive = app.add_subcommand("derive", "energy scales and frequencies from circuit values");
    auto* c_spectrum = app.add_subcommand("spectrum", "charge-basis spectrum and charge dispersion");
    auto* c_rabi = app.add_subcommand("rabi", "driven evolution, populations as CSV");
    auto* c_topology = app.add_subcommand("topology-check", "QTC-4, PUR-4, FREQ-COLLIDE and BUS rules");
    auto* c_coupled = app.add_subcommand("coupled-spectrum", "qubit-resonator spectrum of a design");
    auto* c_noise = app.add_subcommand("noise-budget", "readout chain noise temperature");
    auto* c_optimize = app.add_subcommand("optimize", "circuit values for a target frequency");
    auto* c_audit = app.add_subcommand("audit", "consistency audit of the built-in parameter table");
    derive.bind(c_derive);
    spectrum.bind(c_spectrum);
    rabi.bind(c_rabi);
    topology.bind(c_topology);
    coupled.bind(c_coupled);
    noise.bind(c_noise);
    optimize.bind(c_optimize);
    audit.bind(c_audit);

    if (argc <= 1) {
        err << app.help();
        return 2;
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_derive->parsed()) return derive.run(g, out);
        if (c_spectrum->parsed()) return spectrum.run(g, out);
        if (c_rabi->parsed()) return rabi.run(g, out);
        if (c_topology->parsed()) return topology.run(g, out);
        if (c_coupled->parsed()) return coupled.run(g, out);
        if (c_noise->parsed()) return noise.run(g, out);
        if (c_optimize->parsed()) return optimize.run(g, out, err);
        if (c_audit->parsed()) return audit.run(g, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << app.help();
    return 2;
}

}  // namespace xmon
