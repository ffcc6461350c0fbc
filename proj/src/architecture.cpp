#include "xmon/architecture.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <set>
#include <tuple>

#include "xmon/error.hpp"
#include "xmon/spectrum.hpp"

namespace xmon {

std::string_view to_string(WaveType w) { return w == WaveType::half ? "half" : "quarter"; }

std::string_view to_string(Severity s) {
    switch (s) {
        case Severity::info: return "INFO";
        case Severity::warning: return "WARNING";
        case Severity::error: return "ERROR";
    }
    return "ERROR";
}

const QubitRecord* ChipDesign::find_qubit(std::string_view id) const {
    for (const auto& q : qubits)
        if (q.id == id) return &q;
    return nullptr;
}

const ResonatorRecord* ChipDesign::find_resonator(std::string_view id) const {
    for (const auto& r : resonators)
        if (r.id == id) return &r;
    return nullptr;
}

namespace {

template <class Range, class Key>
void require_unique(const Range& items, Key key, const char* category) {
    std::set<std::string> seen;
    for (const auto& item : items) {
        const std::string& id = key(item);
        if (id.empty()) throw ParseError(std::string("empty id in ") + category);
        if (!seen.insert(id).second) {
            throw ParseError(std::string("duplicate ") + category + " id '" + id + "'");
        }
    }
}

std::string format_mhz(double hz) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6g MHz", hz / 1e6);
    return buf;
}

}  // namespace

void ChipDesign::check_references() const {
    require_unique(qubits, [](const QubitRecord& q) -> const std::string& { return q.id; }, "qubit");
    require_unique(resonators, [](const ResonatorRecord& r) -> const std::string& { return r.id; },
                   "resonator");
    require_unique(feedlines, [](const FeedlineRecord& f) -> const std::string& { return f.id; },
                   "feedline");
    for (const auto& c : couplers) {
        if (!find_qubit(c.qubit)) {
            throw ParseError("coupler references undefined qubit '" + c.qubit + "'");
        }
        if (!find_resonator(c.resonator)) {
            throw ParseError("coupler references undefined resonator '" + c.resonator + "'");
        }
    }
    for (const auto& f : feedlines) {
        for (const auto& r : f.resonators) {
            if (!find_resonator(r)) {
                throw ParseError("feedline '" + f.id + "' references undefined resonator '" + r + "'");
            }
        }
    }
    for (const auto& q : flux_lines) {
        if (!find_qubit(q)) throw ParseError("flux line references undefined qubit '" + q + "'");
    }
}

std::size_t ValidationReport::count(std::string_view rule) const {
    return static_cast<std::size_t>(std::count_if(
        violations.begin(), violations.end(), [&](const Violation& v) { return v.rule == rule; }));
}

std::size_t ValidationReport::count(Severity s) const {
    return static_cast<std::size_t>(std::count_if(
        violations.begin(), violations.end(), [&](const Violation& v) { return v.severity == s; }));
}

ValidationReport validate_topology(const ChipDesign& design, const TopologyRules& rules) {
    design.check_references();
    ValidationReport report;
    auto add = [&](std::string rule, Severity sev, std::string msg, std::vector<std::string> ids) {
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        report.violations.push_back({std::move(rule), sev, std::move(msg), std::move(ids)});
    };

    // Coupling resonators and the distinct qubits on each.
    std::map<std::string, std::set<std::string>> attached;
    for (const auto& c : design.couplers) attached[c.resonator].insert(c.qubit);

    for (const auto& [res, qs] : attached) {
        if (static_cast<int>(qs.size()) != rules.qubits_per_resonator) {
            std::vector<std::string> ids{res};
            ids.insert(ids.end(), qs.begin(), qs.end());
            add("QTC-4", Severity::error,
                "resonator " + res + " couples " + std::to_string(qs.size()) + " qubits, expected " +
                    std::to_string(rules.qubits_per_resonator),
                std::move(ids));
        }
    }

    std::map<std::string, std::set<std::string>> filter_loads;
    for (const auto& f : design.feedlines) {
        auto& loads = filter_loads[f.purcell_filter];
        loads.insert(f.resonators.begin(), f.resonators.end());
    }
    for (const auto& [filter, loads] : filter_loads) {
        const int n = static_cast<int>(loads.size());
        std::vector<std::string> ids{filter};
        ids.insert(ids.end(), loads.begin(), loads.end());
        if (n > rules.max_filter_loads) {
            add("PUR-4", Severity::error,
                "Purcell filter " + filter + " serves " + std::to_string(n) +
                    " resonator-qubit loads, limit " + std::to_string(rules.max_filter_loads),
                std::move(ids));
        } else if (n == rules.max_filter_loads && n > rules.preferred_filter_loads) {
            add("PUR-4", Severity::info,
                "Purcell filter " + filter + " is at the limit of " + std::to_string(n) +
                    " loads; " + std::to_string(rules.preferred_filter_loads) + " is preferred",
                std::move(ids));
        }
    }

    for (const auto& [res, qs] : attached) {
        const std::vector<std::string> list(qs.begin(), qs.end());
        for (std::size_t i = 0; i < list.size(); ++i) {
            for (std::size_t j = i + 1; j < list.size(); ++j) {
                const double a = design.find_qubit(list[i])->nu01_target;
                const double b = design.find_qubit(list[j])->nu01_target;
                const double detuning = std::abs(a - b);
                if (detuning < rules.collision_threshold) {
                    add("FREQ-COLLIDE", Severity::warning,
                        "qubits " + list[i] + " and " + list[j] + " on " + res + " are detuned by " +
                            format_mhz(detuning) + ", below " +
                            format_mhz(rules.collision_threshold),
                        {res, list[i], list[j]});
                }
            }
        }
    }

    // Every coupling resonator must sit on a feedline, and all populated
    // feedlines must meet at one bus.
    std::set<std::string> on_feedline;
    std::map<std::string, std::vector<std::string>> buses;
    for (const auto& f : design.feedlines) {
        on_feedline.insert(f.resonators.begin(), f.resonators.end());
        if (!f.resonators.empty()) buses[f.bus].push_back(f.id);
    }
    for (const auto& [res, qs] : attached) {
        if (!on_feedline.count(res)) {
            add("BUS", Severity::error, "resonator " + res + " is not attached to any feedline",
                {res});
        }
    }
    if (buses.size() > 1) {
        std::vector<std::string> ids;
        std::string names;
        for (const auto& [bus, lines] : buses) {
            ids.insert(ids.end(), lines.begin(), lines.end());
            names += (names.empty() ? "" : ", ") + bus;
        }
        add("BUS", Severity::error, "feedlines do not share a common bus (" + names + ")",
            std::move(ids));
    }

    std::sort(report.violations.begin(), report.violations.end(),
              [](const Violation& x, const Violation& y) {
                  return std::tie(x.rule, x.offending_ids, x.severity, x.message) <
                         std::tie(y.rule, y.offending_ids, y.severity, y.message);
              });
    report.passed = report.count(Severity::error) == 0;
    return report;
}

DispersiveShift dispersive_shift(const DispersiveParams& p, const PhysicalConstants& k) {
    if (!(p.e_j > 0.0)) throw InvalidParameter("Josephson energy must be positive");
    if (p.p_a < 0.0 || p.p_a > 1.0 || p.p_b < 0.0 || p.p_b > 1.0) {
        throw InvalidParameter("participation ratios must lie in [0, 1]");
    }
    DispersiveShift s;
    s.chi = k.hbar * p.omega_a * p.omega_b * p.p_a * p.p_b / (4.0 * p.e_j);
    s.theta = 2.0 * s.chi;
    return s;
}

// ---------------------------------------------------------------------------

std::size_t CoupledSystem::dimension() const {
    std::size_t dim = 1;
    for (const auto& m : modes) dim *= m.levels.size();
    return dim;
}

Mode harmonic_mode(std::string id, double frequency, int levels, const PhysicalConstants& k) {
    if (levels < 1) throw InvalidParameter("mode truncation must be at least 1");
    Mode m{std::move(id), {}, Mode::Kind::resonator};
    for (int n = 0; n < levels; ++n) m.levels.push_back(n * k.h * frequency);
    return m;
}

Mode transmon_mode(const QubitRecord& qubit, int levels, const PhysicalConstants& k) {
    if (levels < 1) throw InvalidParameter("mode truncation must be at least 1");
    const auto spectrum = diagonalize(derive_energies(qubit.junction, k), {}, k);
    Mode m{qubit.id, {}, Mode::Kind::transmon};
    for (int n = 0; n < levels; ++n) {
        m.levels.push_back(spectrum.eigenvalues.at(n) - spectrum.eigenvalues[0]);
    }
    return m;
}

namespace {

void check_capacity(std::size_t dim) {
    if (dim > max_hilbert_dimension) {
        throw CapacityError("Hilbert dimension " + std::to_string(dim) + " exceeds the cap of " +
                            std::to_string(max_hilbert_dimension) +
                            "; reduce the truncation or select a single unit");
    }
}

std::vector<std::size_t> strides_of(const CoupledSystem& s) {
    std::vector<std::size_t> strides(s.modes.size(), 1);
    for (std::size_t i = s.modes.size(); i-- > 1;) {
        strides[i - 1] = strides[i] * s.modes[i].levels.size();
    }
    return strides;
}

int excitation_of(std::size_t index, const CoupledSystem& s, const std::vector<std::size_t>& strides) {
    int total = 0;
    for (std::size_t m = 0; m < s.modes.size(); ++m) {
        total += static_cast<int>((index / strides[m]) % s.modes[m].levels.size());
    }
    return total;
}

Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Eigen::MatrixXd lowering(std::size_t levels) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(levels, levels);
    for (std::size_t n = 1; n < levels; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return a;
}

void check_system(const CoupledSystem& s) {
    for (const auto& m : s.modes) {
        if (m.levels.empty()) throw InvalidParameter("mode '" + m.id + "' has no levels");
    }
    for (const auto& c : s.couplings) {
        const int n = static_cast<int>(s.modes.size());
        if (c.a < 0 || c.b < 0 || c.a >= n || c.b >= n || c.a == c.b) {
            throw InvalidParameter("coupling references an invalid mode pair");
        }
    }
    check_capacity(s.dimension());
}

}  // namespace

Eigen::MatrixXd system_hamiltonian(const CoupledSystem& s) {
    check_system(s);
    const std::size_t nm = s.modes.size();
    auto embed = [&](const std::vector<std::pair<std::size_t, Eigen::MatrixXd>>& ops) {
        Eigen::MatrixXd out = Eigen::MatrixXd::Identity(1, 1);
        for (std::size_t m = 0; m < nm; ++m) {
            const auto sz = static_cast<Eigen::Index>(s.modes[m].levels.size());
            Eigen::MatrixXd local = Eigen::MatrixXd::Identity(sz, sz);
            for (const auto& [idx, op] : ops)
                if (idx == m) local = op;
            out = kron(out, local);
        }
        return out;
    };
    const auto dim = static_cast<Eigen::Index>(s.dimension());
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    for (std::size_t m = 0; m < nm; ++m) {
        const auto& lv = s.modes[m].levels;
        Eigen::MatrixXd d = Eigen::Map<const Eigen::VectorXd>(lv.data(), lv.size()).asDiagonal();
        h += embed({{m, d}});
    }
    for (const auto& c : s.couplings) {
        const auto a = static_cast<std::size_t>(c.a);
        const auto b = static_cast<std::size_t>(c.b);
        const Eigen::MatrixXd la = lowering(s.modes[a].levels.size());
        const Eigen::MatrixXd lb = lowering(s.modes[b].levels.size());
        const Eigen::MatrixXd term = embed({{a, la.transpose()}, {b, lb}});
        h += c.g * (term + term.transpose());
    }
    return h;
}

std::vector<double> system_eigenfrequencies(const CoupledSystem& s, const PhysicalConstants& k) {
    check_system(s);
    const std::size_t dim = s.dimension();
    const auto strides = strides_of(s);

    std::map<int, std::vector<std::size_t>> sectors;
    for (std::size_t i = 0; i < dim; ++i) sectors[excitation_of(i, s, strides)].push_back(i);

    std::vector<double> energies;
    energies.reserve(dim);
    for (const auto& [n, members] : sectors) {
        const auto bs = static_cast<Eigen::Index>(members.size());
        std::map<std::size_t, Eigen::Index> pos;
        for (Eigen::Index i = 0; i < bs; ++i) pos[members[i]] = i;

        Eigen::MatrixXd block = Eigen::MatrixXd::Zero(bs, bs);
        for (Eigen::Index i = 0; i < bs; ++i) {
            const std::size_t state = members[i];
            double diag = 0.0;
            for (std::size_t m = 0; m < s.modes.size(); ++m) {
                diag += s.modes[m].levels[(state / strides[m]) % s.modes[m].levels.size()];
            }
            block(i, i) = diag;
            // a^+ b: raise mode a, lower mode b.
            for (const auto& c : s.couplings) {
                const auto a = static_cast<std::size_t>(c.a);
                const auto b = static_cast<std::size_t>(c.b);
                const std::size_t na = (state / strides[a]) % s.modes[a].levels.size();
                const std::size_t nb = (state / strides[b]) % s.modes[b].levels.size();
                if (nb == 0 || na + 1 >= s.modes[a].levels.size()) continue;
                const std::size_t target = state + strides[a] - strides[b];
                const double amp = c.g * std::sqrt(static_cast<double>((na + 1) * nb));
                const Eigen::Index j = pos.at(target);
                block(j, i) += amp;
                block(i, j) += amp;
            }
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(block, Eigen::EigenvaluesOnly);
        for (Eigen::Index i = 0; i < bs; ++i) energies.push_back(es.eigenvalues()(i));
    }
    std::sort(energies.begin(), energies.end());
    const double ground = energies.front();
    for (double& e : energies) e = (e - ground) / k.h;
    return energies;
}

std::vector<CoupledSystem> coupled_units(const ChipDesign& design,
                                         const CoupledSpectrumOptions& options,
                                         const PhysicalConstants& k) {
    design.check_references();
    if (options.qubit_levels < 1 || options.resonator_levels < 1) {
        throw InvalidParameter("mode truncation must be at least 1");
    }
    const std::size_t nr = design.resonators.size();
    const std::size_t nq = design.qubits.size();
    // Nodes: resonators [0, nr), qubits [nr, nr + nq).
    std::vector<std::size_t> parent(nr + nq);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto node_of_res = [&](const std::string& id) {
        for (std::size_t i = 0; i < nr; ++i)
            if (design.resonators[i].id == id) return i;
        return nr + nq;
    };
    auto node_of_qubit = [&](const std::string& id) {
        for (std::size_t i = 0; i < nq; ++i)
            if (design.qubits[i].id == id) return nr + i;
        return nr + nq;
    };
    for (const auto& c : design.couplers) {
        parent[find(node_of_res(c.resonator))] = find(node_of_qubit(c.qubit));
    }

    std::optional<std::size_t> wanted;
    if (options.unit) {
        const std::size_t node = node_of_res(*options.unit);
        if (node >= nr) throw InvalidParameter("unknown resonator '" + *options.unit + "'");
        wanted = find(node);
    }

    std::vector<CoupledSystem> units;
    std::map<std::size_t, std::size_t> unit_of_root;
    std::vector<std::map<std::size_t, int>> mode_index;
    for (std::size_t node = 0; node < nr + nq; ++node) {
        const std::size_t root = find(node);
        if (wanted && root != *wanted) continue;
        auto [it, fresh] = unit_of_root.try_emplace(root, units.size());
        if (fresh) {
            units.emplace_back();
            mode_index.emplace_back();
        }
        CoupledSystem& u = units[it->second];
        mode_index[it->second][node] = static_cast<int>(u.modes.size());
        if (node < nr) {
            const auto& r = design.resonators[node];
            u.modes.push_back(harmonic_mode(r.id, r.frequency, options.resonator_levels, k));
        } else {
            u.modes.push_back(transmon_mode(design.qubits[node - nr], options.qubit_levels, k));
        }
    }
    for (const auto& c : design.couplers) {
        const std::size_t rn = node_of_res(c.resonator);
        const std::size_t qn = node_of_qubit(c.qubit);
        auto it = unit_of_root.find(find(rn));
        if (it == unit_of_root.end()) continue;
        const auto& idx = mode_index[it->second];
        units[it->second].couplings.push_back({idx.at(qn), idx.at(rn), k.h * c.g});
    }
    return units;
}

std::vector<double> coupled_spectrum(const ChipDesign& design, const CoupledSpectrumOptions& options,
                                     const PhysicalConstants& k) {
    design.check_references();
    // Cap check on the full product space before any diagonalization.
    std::size_t dim = 1;
    for (const auto& u : coupled_units(design, CoupledSpectrumOptions{1, 1, options.unit}, k)) {
        for (const auto& m : u.modes) {
            const bool is_res = m.kind == Mode::Kind::resonator;
            dim *= static_cast<std::size_t>(is_res ? options.resonator_levels : options.qubit_levels);
            check_capacity(dim);
        }
    }
    std::vector<double> merged{0.0};
    for (const auto& unit : coupled_units(design, options, k)) {
        const auto part = system_eigenfrequencies(unit, k);
        std::vector<double> next;
        next.reserve(merged.size() * part.size());
        for (double a : merged)
            for (double b : part) next.push_back(a + b);
        merged = std::move(next);
    }
    std::sort(merged.begin(), merged.end());
    return merged;
}

ConservationReport excitation_number_check(const CoupledSystem& s) {
    const Eigen::MatrixXd h = system_hamiltonian(s);
    const auto strides = strides_of(s);
    SectorReport unit;
    for (const auto& m : s.modes) unit.mode_ids.push_back(m.id);
    std::vector<int> sector(static_cast<std::size_t>(h.rows()));
    for (Eigen::Index i = 0; i < h.rows(); ++i) {
        sector[i] = excitation_of(static_cast<std::size_t>(i), s, strides);
        ++unit.sector_dimensions[sector[i]];
    }
    for (Eigen::Index j = 0; j < h.cols(); ++j)
        for (Eigen::Index i = 0; i < h.rows(); ++i)
            if (sector[i] != sector[j]) unit.max_cross_sector = std::max(unit.max_cross_sector, std::abs(h(i, j)));
    ConservationReport report;
    report.conserved = unit.max_cross_sector == 0.0;
    report.units.push_back(std::move(unit));
    return report;
}

ConservationReport excitation_number_check(const ChipDesign& design,
                                           const CoupledSpectrumOptions& options,
                                           const PhysicalConstants& k) {
    ConservationReport report;
    for (const auto& unit : coupled_units(design, options, k)) {
        auto part = excitation_number_check(unit);
        report.conserved = report.conserved && part.conserved;
        report.units.push_back(std::move(part.units.front()));
    }
    return report;
}

}  // namespace xmon
