#include "catch2/catch_amalgamated.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "xmon/error.hpp"
#include "xmon/report.hpp"
#include "xmon/units.hpp"

using namespace xmon;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinRel;

TEST_CASE("unit-suffixed quantities parse to SI", "[units]") {
    CHECK_THAT(parse_quantity("11.03GHz", Dimension::frequency), WithinRel(11.03e9, 1e-15));
    CHECK_THAT(parse_quantity("188.2 MHz", Dimension::frequency), WithinRel(188.2e6, 1e-15));
    CHECK_THAT(parse_quantity("47fF", Dimension::capacitance), WithinRel(47e-15, 1e-15));
    CHECK_THAT(parse_quantity("83.3nA", Dimension::current), WithinRel(83.3e-9, 1e-15));
    CHECK_THAT(parse_quantity("0.15nH", Dimension::inductance), WithinRel(0.15e-9, 1e-15));
    CHECK_THAT(parse_quantity("-3dB", Dimension::decibel), WithinRel(-3.0, 1e-15));
    CHECK_THAT(parse_quantity("20mK", Dimension::temperature), WithinRel(0.02, 1e-15));
    CHECK_THAT(parse_quantity("20ns", Dimension::time), WithinRel(20e-9, 1e-15));
    CHECK_THAT(parse_quantity("100us", Dimension::time), WithinRel(100e-6, 1e-15));
    CHECK_THAT(parse_quantity("100\xC2\xB5s", Dimension::time), WithinRel(100e-6, 1e-15));
    CHECK_THAT(parse_quantity("0.32mV", Dimension::voltage), WithinRel(0.32e-3, 1e-15));
    CHECK_THAT(parse_quantity("1e-2um2", Dimension::area), WithinRel(1e-14, 1e-15));
}

TEST_CASE("unit errors", "[units][errors]") {
    CHECK_THROWS_AS(parse_quantity("11.03", Dimension::frequency), ParseError);
    CHECK_THROWS_WITH(parse_quantity("11.03", Dimension::frequency), ContainsSubstring("missing a unit"));
    CHECK_THROWS_WITH(parse_quantity("47fF", Dimension::frequency), ContainsSubstring("fF"));
    CHECK_THROWS_WITH(parse_quantity("3furlongs", Dimension::frequency), ContainsSubstring("unknown unit"));
    CHECK_THROWS_AS(parse_quantity("GHz", Dimension::frequency), ParseError);
    CHECK_THROWS_AS(parse_quantity("", Dimension::frequency), ParseError);
}

TEST_CASE("canonical formatting round-trips", "[units]") {
    for (auto [v, d] : {std::pair{11.296e9, Dimension::frequency}, std::pair{46.79e-15, Dimension::capacitance},
                        std::pair{83.36e-9, Dimension::current}, std::pair{1.3713e-9, Dimension::inductance},
                        std::pair{-0.5, Dimension::decibel}, std::pair{0.27116, Dimension::temperature},
                        std::pair{20e-9, Dimension::time}, std::pair{1e-14, Dimension::area}}) {
        const std::string s = format_quantity(v, d);
        CHECK_THAT(parse_quantity(s, d), WithinRel(v, 1e-11));
    }
    CHECK(format_quantity(11.03e9, Dimension::frequency) == "11.03GHz");
    CHECK(display_quantity(414e6, Dimension::frequency) == "414 MHz");
    CHECK(display_quantity(387.3e-6, Dimension::time) == "387.3 us");
}

TEST_CASE("report numbers", "[report]") {
    CHECK(round_significant(1.23456789012345678, 12) == 1.23456789012);
    CHECK(round_significant(0.0) == 0.0);
    CHECK(number_json(NAN).is_null());
    const auto q = quantity_json(11.2956e9, Dimension::frequency);
    CHECK(q["unit"] == "Hz");
    CHECK(q["display"] == "11.2956 GHz");
}

TEST_CASE("reports are deterministic and sorted", "[report]") {
    json a{{"zeta", 1}, {"alpha", number_json(1.0 / 3.0)}};
    json b{{"alpha", number_json(1.0 / 3.0)}, {"zeta", 1}};
    CHECK(dump_report(a) == dump_report(b));
    CHECK(dump_report(a).find("alpha") < dump_report(a).find("zeta"));
    CHECK(dump_report(a).back() == '\n');
}

TEST_CASE("atomic write replaces the target", "[report]") {
    const auto dir = std::filesystem::temp_directory_path() / "xmon_report_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / "r.json";
    write_file_atomic(path, "first\n");
    write_file_atomic(path, "second\n");
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == "second\n");
    int files = 0;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        (void)entry;
        ++files;
    }
    CHECK(files == 1);
    std::filesystem::remove_all(dir);
    CHECK_THROWS_AS(write_file_atomic("/nonexistent-dir/x/y.json", "z"), Error);
}
