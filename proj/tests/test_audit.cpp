#include "catch2/catch_amalgamated.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "xmon/audit.hpp"
#include "xmon/report.hpp"

using namespace xmon;
using Catch::Matchers::WithinRel;

namespace {

std::map<std::string, AuditFinding> by_id(const std::vector<AuditFinding>& fs) {
    std::map<std::string, AuditFinding> m;
    for (const auto& f : fs) m.emplace(f.id, f);
    return m;
}

}  // namespace

TEST_CASE("interval comparison widens the claim", "[audit]") {
    CHECK(compare({100, 100}, {104, 104}, 0.05) == AuditStatus::consistent);
    CHECK(compare({100, 100}, {106, 106}, 0.05) == AuditStatus::inconsistent);
    CHECK(compare({110, 119}, {100, 100}, 0.05) == AuditStatus::inconsistent);
    CHECK(compare({110, 119}, {100, 100}, 0.10) == AuditStatus::consistent);
    CHECK(compare({0.3, 0.7}, {0.2, 0.35}, 0.0) == AuditStatus::consistent);
}

TEST_CASE("table findings", "[audit]") {
    const auto fs = audit_table();
    CHECK(fs.size() >= 8);
    const auto m = by_id(fs);
    auto status = [&](const char* id) {
        REQUIRE(m.count(id) == 1);
        return m.at(id).status;
    };
    CHECK(status("nu01-band") == AuditStatus::consistent);
    CHECK_THAT(m.at("nu01-band").computed->lo, WithinRel(11.296e9, 1e-3));
    CHECK(status("nu01-exact") == AuditStatus::consistent);
    CHECK(status("nu01-central") == AuditStatus::consistent);
    CHECK(status("ratio") == AuditStatus::inconsistent);
    CHECK_THAT(m.at("ratio").computed->lo, WithinRel(100.0, 1e-12));
    CHECK(status("ic-to-ej") == AuditStatus::inconsistent);
    CHECK(status("ic-to-lj") == AuditStatus::inconsistent);
    CHECK(status("lj-to-ej") == AuditStatus::inconsistent);
    CHECK(status("lj-to-ic") == AuditStatus::inconsistent);
    CHECK(status("ej-to-ic") == AuditStatus::inconsistent);
    CHECK_THAT(m.at("ej-to-ic").computed->lo, WithinRel(83.3e-9, 2e-3));
    CHECK(status("csigma-to-ec") == AuditStatus::consistent);
    CHECK(status("lj-csigma-to-nu01") == AuditStatus::inconsistent);
    CHECK(status("t1-band") == AuditStatus::consistent);
    CHECK(status("t1-central") == AuditStatus::consistent);
    CHECK_THAT(m.at("t1-central").computed->lo, WithinRel(387.3e-6, 1e-3));
    CHECK(status("t1-abstract") == AuditStatus::inconsistent);
    CHECK_THAT(m.at("t1-abstract").computed->lo, WithinRel(365.0e-6, 1e-3));
    CHECK(status("alpha-vs-ec") == AuditStatus::inconsistent);
    CHECK(status("alpha-exact") == AuditStatus::inconsistent);
    CHECK(status("design-ratio") == AuditStatus::inconsistent);
    CHECK(status("eta") == AuditStatus::undefined);
    CHECK_FALSE(m.at("eta").computed);
}

TEST_CASE("status follows the tolerance", "[audit][property]") {
    for (double tol : {0.0, 0.01, 0.05, 0.2, 0.5}) {
        for (const auto& f : audit_table(codata2018, tol)) {
            if (!f.claim || !f.computed) {
                CHECK(f.status == AuditStatus::undefined);
                continue;
            }
            CHECK(f.status == compare(*f.claim, *f.computed, tol));
            CHECK(f.tolerance == tol);
        }
    }
    // A loose enough tolerance reconciles the ratio claim.
    CHECK(by_id(audit_table(codata2018, 0.10)).at("ratio").status == AuditStatus::consistent);
}

TEST_CASE("audit JSON is byte-identical across runs", "[audit]") {
    const std::string a = dump_report(audit_json(audit_table()));
    const std::string b = dump_report(audit_json(audit_table()));
    CHECK(a == b);
    const auto j = json::parse(a);
    REQUIRE(j.is_array());
    CHECK(j.size() == audit_table().size());
    CHECK(j[0].contains("status"));
    CHECK(j[0].contains("claim_quote"));
}
