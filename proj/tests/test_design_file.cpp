#include "catch2/catch_amalgamated.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include "xmon/design_file.hpp"
#include "xmon/error.hpp"

using namespace xmon;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinRel;

namespace {

std::string reference_text() {
    std::ifstream in(XMON_DATA_DIR "/qtc8.design");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const char* minimal = R"({
  "name": "one",
  "qubits": [
    {"id": "Q1", "i_c": "83.3nA", "c_b": "46.8fF", "nu01": "11.3GHz"}
  ],
  "resonators": [{"id": "R1", "frequency": "7.2GHz"}],
  "couplers": [{"qubit": "Q1", "resonator": "R1", "g": "188.2MHz"}]
})";

void check_same(const DesignBundle& a, const DesignBundle& b) {
    REQUIRE(a.chip.qubits.size() == b.chip.qubits.size());
    CHECK(a.chip.name == b.chip.name);
    for (std::size_t i = 0; i < a.chip.qubits.size(); ++i) {
        const auto& x = a.chip.qubits[i];
        const auto& y = b.chip.qubits[i];
        CHECK(x.id == y.id);
        CHECK_THAT(x.junction.i_c, WithinRel(y.junction.i_c, 1e-11));
        CHECK_THAT(x.junction.c_sigma(), WithinRel(y.junction.c_sigma(), 1e-11));
        CHECK_THAT(x.nu01_target, WithinRel(y.nu01_target, 1e-11));
    }
    REQUIRE(a.chip.resonators.size() == b.chip.resonators.size());
    for (std::size_t i = 0; i < a.chip.resonators.size(); ++i) {
        CHECK(a.chip.resonators[i].id == b.chip.resonators[i].id);
        CHECK(a.chip.resonators[i].wave == b.chip.resonators[i].wave);
        CHECK_THAT(a.chip.resonators[i].frequency, WithinRel(b.chip.resonators[i].frequency, 1e-11));
    }
    REQUIRE(a.chip.couplers.size() == b.chip.couplers.size());
    for (std::size_t i = 0; i < a.chip.couplers.size(); ++i) {
        CHECK(a.chip.couplers[i].qubit == b.chip.couplers[i].qubit);
        CHECK_THAT(a.chip.couplers[i].g, WithinRel(b.chip.couplers[i].g, 1e-11));
    }
    REQUIRE(a.chip.feedlines.size() == b.chip.feedlines.size());
    for (std::size_t i = 0; i < a.chip.feedlines.size(); ++i) {
        CHECK(a.chip.feedlines[i].resonators == b.chip.feedlines[i].resonators);
        CHECK(a.chip.feedlines[i].purcell_filter == b.chip.feedlines[i].purcell_filter);
        CHECK(a.chip.feedlines[i].bus == b.chip.feedlines[i].bus);
    }
    CHECK(a.chip.flux_lines == b.chip.flux_lines);
    REQUIRE(a.readout.has_value() == b.readout.has_value());
    if (a.readout) {
        REQUIRE(a.readout->stages.size() == b.readout->stages.size());
        for (std::size_t i = 0; i < a.readout->stages.size(); ++i) {
            const auto& s = a.readout->stages[i];
            const auto& t = b.readout->stages[i];
            CHECK(s.name == t.name);
            CHECK(s.kind == t.kind);
            CHECK_THAT(s.gain_db, WithinRel(t.gain_db, 1e-11));
            CHECK_THAT(s.noise_temp, WithinRel(t.noise_temp, 1e-11));
        }
    }
    CHECK(a.metadata == b.metadata);
}

}  // namespace

TEST_CASE("bundled reference design loads", "[design-file]") {
    const auto b = load_design(XMON_DATA_DIR "/qtc8.design");
    CHECK(b.chip.name == "qtc8");
    CHECK(b.chip.qubits.size() == 8);
    CHECK(b.chip.couplers.size() == 8);
    CHECK(b.chip.feedlines.size() == 2);
    CHECK(b.chip.flux_lines.size() == 8);
    REQUIRE(b.readout);
    CHECK(b.readout->stages.size() == 3);
    CHECK_THAT(b.readout->stages[0].noise_temp, WithinRel(0.27116, 1e-4));
    CHECK_THAT(b.chip.couplers[0].g, WithinRel(188.2e6, 1e-15));
    CHECK(validate_topology(b.chip).passed);
}

TEST_CASE("serialize then parse is the identity", "[design-file][property]") {
    const auto a = parse_design(reference_text());
    const std::string text = serialize_design(a);
    const auto b = parse_design(text);
    check_same(a, b);
    CHECK(serialize_design(b) == text);

    const auto m = parse_design(minimal);
    check_same(m, parse_design(serialize_design(m)));
}

TEST_CASE("empty or malformed input", "[design-file][errors]") {
    CHECK_THROWS_AS(parse_design(""), ParseError);
    CHECK_THROWS_AS(parse_design("{"), ParseError);
    CHECK_THROWS_AS(parse_design("[]"), ParseError);
    CHECK_THROWS_WITH(parse_design("{}"), ContainsSubstring("qubits"));
    CHECK_THROWS_AS(load_design("/nonexistent/qtc.design"), ParseError);
}

TEST_CASE("unknown keys are named with their line", "[design-file][errors]") {
    const std::string text = "{\n  \"qubits\": [\n    {\"id\": \"Q1\", \"i_c\": \"83nA\", \"c_b\": \"47fF\",\n"
                             "     \"nu01\": \"11GHz\", \"colour\": \"red\"}\n  ]\n}";
    CHECK_THROWS_WITH(parse_design(text), ContainsSubstring("colour") && ContainsSubstring("line 4"));
    CHECK_THROWS_WITH(parse_design("{\"qubits\": [], \"extra\": 1}"), ContainsSubstring("extra"));
}

TEST_CASE("unit suffixes are mandatory", "[design-file][errors]") {
    std::string text = minimal;
    text.replace(text.find("\"11.3GHz\""), 9, "\"11.3\"");
    CHECK_THROWS_WITH(parse_design(text), ContainsSubstring("unit"));
    std::string wrong = minimal;
    wrong.replace(wrong.find("\"46.8fF\""), 8, "\"46.8nA\"");
    CHECK_THROWS_AS(parse_design(wrong), ParseError);
    std::string bare = minimal;
    bare.replace(bare.find("\"188.2MHz\""), 10, "188.2e6");
    CHECK_THROWS_AS(parse_design(bare), ParseError);
}

TEST_CASE("dangling references name the id", "[design-file][errors]") {
    std::string text = minimal;
    text.replace(text.find("\"resonator\": \"R1\""), 17, "\"resonator\": \"R9\"");
    CHECK_THROWS_WITH(parse_design(text), ContainsSubstring("R9"));
    std::string flux = minimal;
    flux.insert(flux.rfind('}'), ", \"flux_lines\": [\"Q7\"]");
    CHECK_THROWS_WITH(parse_design(flux), ContainsSubstring("Q7"));
}

TEST_CASE("readout chain stage rules", "[design-file]") {
    auto with_chain = [](const std::string& stages) {
        std::string text = minimal;
        text.insert(text.rfind('}'), ", \"readout_chain\": {\"signal_freq\": \"11.3GHz\", \"stages\": [" + stages + "]}");
        return text;
    };
    const auto ok = parse_design(with_chain(
        R"({"name": "TWPA", "gain_db": "20dB", "noise_temp": "quantum"},
           {"name": "cable", "gain_db": "-1dB", "physical_temp": "4K"},
           {"name": "HEMT", "gain_db": "41dB", "noise_figure_db": "0.06dB"})"));
    REQUIRE(ok.readout);
    CHECK(ok.readout->stages[1].kind == ChainStage::Kind::attenuator);
    CHECK_THAT(ok.readout->stages[2].noise_temp, WithinRel(nf_to_temp(0.06), 1e-12));
    CHECK_THROWS_AS(parse_design(with_chain(R"({"name": "A", "gain_db": "20dB"})")), ParseError);
    CHECK_THROWS_AS(parse_design(with_chain(
                        R"({"name": "A", "gain_db": "20dB", "noise_temp": "1K", "noise_figure_db": "1dB"})")),
                    ParseError);
    CHECK_THROWS_AS(parse_design(with_chain(
                        R"({"name": "att", "gain_db": "-3dB", "physical_temp": "4K", "noise_temp": "1K"})")),
                    ParseError);
    CHECK_THROWS_AS(parse_design(with_chain(R"({"name": "A", "gain_db": "20", "noise_temp": "1K"})")),
                    ParseError);
}
