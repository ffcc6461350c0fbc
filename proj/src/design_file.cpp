#include "xmon/design_file.hpp"

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include "xmon/error.hpp"
#include "xmon/units.hpp"

namespace xmon {

namespace {

class Reader {
public:
    explicit Reader(std::string_view text) : text_(text) {}

    int line_of(std::string_view key) const {
        const std::string quoted = "\"" + std::string(key) + "\"";
        const auto pos = text_.find(quoted);
        if (pos == std::string_view::npos) return 0;
        return 1 + static_cast<int>(std::count(text_.begin(), text_.begin() + pos, '\n'));
    }

    void only_keys(const json& obj, std::string_view where,
                   std::initializer_list<std::string_view> allowed) const {
        if (!obj.is_object()) throw ParseError(std::string(where) + " must be an object");
        for (const auto& [key, value] : obj.items()) {
            if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
                throw ParseError("unknown key '" + key + "' in " + std::string(where) + " at line " +
                                 std::to_string(line_of(key)));
            }
        }
    }

    std::string string(const json& obj, const char* key, std::string_view where) const {
        if (!obj.contains(key)) {
            throw ParseError(std::string(where) + " is missing required key '" + key + "'");
        }
        const json& v = obj.at(key);
        if (!v.is_string()) {
            throw ParseError("'" + std::string(key) + "' in " + std::string(where) +
                             " must be a string (line " + std::to_string(line_of(key)) + ")");
        }
        return v.get<std::string>();
    }

    double quantity(const json& obj, const char* key, Dimension d, std::string_view where) const {
        const std::string raw = string(obj, key, where);
        try {
            return parse_quantity(raw, d);
        } catch (const ParseError& e) {
            throw ParseError(std::string(e.what()) + " for key '" + key + "' in " +
                             std::string(where) + " at line " + std::to_string(line_of(key)));
        }
    }

    std::optional<double> optional_quantity(const json& obj, const char* key, Dimension d,
                                            std::string_view where) const {
        if (!obj.contains(key)) return std::nullopt;
        return quantity(obj, key, d, where);
    }

    const json& array(const json& obj, const char* key) const {
        const json& v = obj.at(key);
        if (!v.is_array()) {
            throw ParseError("'" + std::string(key) + "' must be an array (line " +
                             std::to_string(line_of(key)) + ")");
        }
        return v;
    }

private:
    std::string_view text_;
};

QubitRecord parse_qubit(const Reader& r, const json& j) {
    r.only_keys(j, "qubit", {"id", "i_c", "c_j", "c_b", "c_g", "area", "nu01"});
    QubitRecord q;
    q.id = r.string(j, "id", "qubit");
    const std::string where = "qubit " + q.id;
    q.junction.i_c = r.quantity(j, "i_c", Dimension::current, where);
    q.junction.c_j = r.optional_quantity(j, "c_j", Dimension::capacitance, where).value_or(0.0);
    q.junction.c_b = r.optional_quantity(j, "c_b", Dimension::capacitance, where).value_or(0.0);
    q.junction.c_g = r.optional_quantity(j, "c_g", Dimension::capacitance, where).value_or(0.0);
    q.junction.area = r.optional_quantity(j, "area", Dimension::area, where);
    q.nu01_target = r.quantity(j, "nu01", Dimension::frequency, where);
    try {
        q.junction.validate();
    } catch (const InvalidParameter& e) {
        throw ParseError(where + ": " + e.what());
    }
    return q;
}

ResonatorRecord parse_resonator(const Reader& r, const json& j) {
    r.only_keys(j, "resonator", {"id", "frequency", "wave"});
    ResonatorRecord res;
    res.id = r.string(j, "id", "resonator");
    const std::string where = "resonator " + res.id;
    res.frequency = r.quantity(j, "frequency", Dimension::frequency, where);
    if (j.contains("wave")) {
        const std::string w = r.string(j, "wave", where);
        if (w == "quarter") {
            res.wave = WaveType::quarter;
        } else if (w == "half") {
            res.wave = WaveType::half;
        } else {
            throw ParseError(where + ": wave must be 'quarter' or 'half', got '" + w + "'");
        }
    }
    return res;
}

CouplerRecord parse_coupler(const Reader& r, const json& j) {
    r.only_keys(j, "coupler", {"qubit", "resonator", "g"});
    CouplerRecord c;
    c.qubit = r.string(j, "qubit", "coupler");
    c.resonator = r.string(j, "resonator", "coupler");
    c.g = r.quantity(j, "g", Dimension::frequency, "coupler " + c.qubit + "-" + c.resonator);
    return c;
}

FeedlineRecord parse_feedline(const Reader& r, const json& j) {
    r.only_keys(j, "feedline", {"id", "purcell_filter", "resonators", "bus"});
    FeedlineRecord f;
    f.id = r.string(j, "id", "feedline");
    const std::string where = "feedline " + f.id;
    f.purcell_filter = r.string(j, "purcell_filter", where);
    if (j.contains("resonators")) {
        for (const auto& id : r.array(j, "resonators")) {
            if (!id.is_string()) throw ParseError(where + ": resonator ids must be strings");
            f.resonators.push_back(id.get<std::string>());
        }
    }
    if (j.contains("bus")) f.bus = r.string(j, "bus", where);
    return f;
}

ChainStage parse_stage(const Reader& r, const json& j, double signal_freq,
                       const PhysicalConstants& k) {
    r.only_keys(j, "readout stage",
                {"name", "type", "gain_db", "noise_temp", "noise_figure_db", "physical_temp"});
    const std::string name = r.string(j, "name", "readout stage");
    const std::string where = "readout stage " + name;
    const double gain_db = r.quantity(j, "gain_db", Dimension::decibel, where);
    std::string type = j.contains("type") ? r.string(j, "type", where)
                                          : (gain_db < 0.0 ? "attenuator" : "amplifier");
    const bool has_t = j.contains("noise_temp");
    const bool has_nf = j.contains("noise_figure_db");
    try {
        if (type == "attenuator") {
            if (has_t || has_nf) {
                throw ParseError(where + ": attenuator noise is derived from physical_temp");
            }
            return ChainStage::attenuator(name, gain_db,
                                          r.quantity(j, "physical_temp", Dimension::temperature, where));
        }
        if (type != "amplifier") {
            throw ParseError(where + ": type must be 'amplifier' or 'attenuator'");
        }
        if (has_t == has_nf) {
            throw ParseError(where + ": give exactly one of noise_temp or noise_figure_db");
        }
        const double phys =
            r.optional_quantity(j, "physical_temp", Dimension::temperature, where).value_or(0.0);
        if (has_nf) {
            return ChainStage::amplifier_nf(
                name, gain_db, r.quantity(j, "noise_figure_db", Dimension::decibel, where), phys);
        }
        if (j.at("noise_temp") == "quantum") {
            return ChainStage::amplifier(name, gain_db, quantum_limit_temperature(signal_freq, k),
                                         phys);
        }
        return ChainStage::amplifier(name, gain_db,
                                     r.quantity(j, "noise_temp", Dimension::temperature, where), phys);
    } catch (const InvalidParameter& e) {
        throw ParseError(where + ": " + e.what());
    }
}

NoiseChain parse_chain(const Reader& r, const json& j, const PhysicalConstants& k) {
    r.only_keys(j, "readout_chain", {"signal_freq", "stages"});
    NoiseChain chain;
    chain.signal_freq = r.quantity(j, "signal_freq", Dimension::frequency, "readout_chain");
    if (!j.contains("stages")) throw ParseError("readout_chain is missing required key 'stages'");
    for (const auto& s : r.array(j, "stages")) {
        chain.stages.push_back(parse_stage(r, s, chain.signal_freq, k));
    }
    try {
        chain.validate();
    } catch (const ConfigurationError& e) {
        throw ParseError(std::string("readout_chain: ") + e.what());
    }
    return chain;
}

}  // namespace

DesignBundle parse_design(std::string_view text, const PhysicalConstants& k) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("design descriptor is not valid JSON: ") + e.what());
    }
    const Reader r(text);
    r.only_keys(doc, "design",
                {"name", "metadata", "qubits", "resonators", "couplers", "feedlines",
                 "readout_chain", "flux_lines"});
    if (!doc.contains("qubits")) throw ParseError("design is missing required section 'qubits'");

    DesignBundle out;
    if (doc.contains("name")) out.chip.name = r.string(doc, "name", "design");
    if (doc.contains("metadata")) {
        if (!doc["metadata"].is_object()) throw ParseError("metadata must be an object");
        out.metadata = doc["metadata"];
    }
    for (const auto& q : r.array(doc, "qubits")) out.chip.qubits.push_back(parse_qubit(r, q));
    if (doc.contains("resonators"))
        for (const auto& x : r.array(doc, "resonators"))
            out.chip.resonators.push_back(parse_resonator(r, x));
    if (doc.contains("couplers"))
        for (const auto& x : r.array(doc, "couplers")) out.chip.couplers.push_back(parse_coupler(r, x));
    if (doc.contains("feedlines"))
        for (const auto& x : r.array(doc, "feedlines"))
            out.chip.feedlines.push_back(parse_feedline(r, x));
    if (doc.contains("flux_lines")) {
        for (const auto& x : r.array(doc, "flux_lines")) {
            if (!x.is_string()) throw ParseError("flux_lines entries must be qubit id strings");
            out.chip.flux_lines.push_back(x.get<std::string>());
        }
    }
    if (doc.contains("readout_chain")) out.readout = parse_chain(r, doc["readout_chain"], k);

    out.chip.check_references();
    return out;
}

DesignBundle load_design(const std::filesystem::path& path, const PhysicalConstants& k) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open design file " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_design(ss.str(), k);
}

std::string serialize_design(const DesignBundle& b) {
    json doc = json::object();
    doc["name"] = b.chip.name;
    if (!b.metadata.empty()) doc["metadata"] = b.metadata;

    json qubits = json::array();
    for (const auto& q : b.chip.qubits) {
        json j{{"id", q.id},
               {"i_c", format_quantity(q.junction.i_c, Dimension::current)},
               {"c_j", format_quantity(q.junction.c_j, Dimension::capacitance)},
               {"c_b", format_quantity(q.junction.c_b, Dimension::capacitance)},
               {"c_g", format_quantity(q.junction.c_g, Dimension::capacitance)},
               {"nu01", format_quantity(q.nu01_target, Dimension::frequency)}};
        if (q.junction.area) j["area"] = format_quantity(*q.junction.area, Dimension::area);
        qubits.push_back(std::move(j));
    }
    doc["qubits"] = std::move(qubits);

    json resonators = json::array();
    for (const auto& r : b.chip.resonators) {
        resonators.push_back({{"id", r.id},
                              {"frequency", format_quantity(r.frequency, Dimension::frequency)},
                              {"wave", std::string(to_string(r.wave))}});
    }
    doc["resonators"] = std::move(resonators);

    json couplers = json::array();
    for (const auto& c : b.chip.couplers) {
        couplers.push_back({{"qubit", c.qubit},
                            {"resonator", c.resonator},
                            {"g", format_quantity(c.g, Dimension::frequency)}});
    }
    doc["couplers"] = std::move(couplers);

    json feedlines = json::array();
    for (const auto& f : b.chip.feedlines) {
        feedlines.push_back({{"id", f.id},
                             {"purcell_filter", f.purcell_filter},
                             {"resonators", f.resonators},
                             {"bus", f.bus}});
    }
    doc["feedlines"] = std::move(feedlines);
    doc["flux_lines"] = b.chip.flux_lines;

    if (b.readout) {
        json stages = json::array();
        for (const auto& s : b.readout->stages) {
            json j{{"name", s.name}, {"gain_db", format_quantity(s.gain_db, Dimension::decibel)}};
            if (s.kind == ChainStage::Kind::attenuator) {
                j["type"] = "attenuator";
            } else {
                j["type"] = "amplifier";
                j["noise_temp"] = format_quantity(s.noise_temp, Dimension::temperature);
            }
            j["physical_temp"] = format_quantity(s.physical_temp, Dimension::temperature);
            stages.push_back(std::move(j));
        }
        doc["readout_chain"] = {
            {"signal_freq", format_quantity(b.readout->signal_freq, Dimension::frequency)},
            {"stages", std::move(stages)}};
    }
    return doc.dump(2) + "\n";
}

}  // namespace xmon
