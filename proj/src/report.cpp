#include "xmon/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "xmon/error.hpp"

namespace xmon {

double round_significant(double value, int digits) {
    if (!std::isfinite(value) || value == 0.0) return value;
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*g", digits, value);
    return std::strtod(buf, nullptr);
}

json number_json(double value) {
    if (!std::isfinite(value)) return nullptr;
    return round_significant(value);
}

json quantity_json(double si_value, Dimension d) {
    return json{{"value", number_json(si_value)},
                {"unit", std::string(si_unit(d))},
                {"display", display_quantity(si_value, d)}};
}

std::string dump_report(const json& report) { return report.dump(2) + "\n"; }

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot open " + tmp.string() + " for writing");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) throw Error("failed writing " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw Error("cannot move report into place at " + path.string() + ": " + ec.message());
    }
}

}  // namespace xmon
