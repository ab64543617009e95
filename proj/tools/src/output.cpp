#include "output.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>

namespace mdsl::cli {

namespace {

struct CsvCell {
    int precision;
    std::string operator()(Missing) const { return "NA"; }
    std::string operator()(double v) const { return format_number(v, precision); }
    std::string operator()(long long v) const { return std::to_string(v); }
    std::string operator()(const std::string& s) const {
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string q = "\"";
        for (char c : s) {
            if (c == '"') q += '"';
            q += c;
        }
        return q + '"';
    }
};

struct JsonCell {
    int precision;
    std::string operator()(Missing) const { return "null"; }
    std::string operator()(double v) const {
        return std::isfinite(v) ? format_number(v, precision) : "null";
    }
    std::string operator()(long long v) const { return std::to_string(v); }
    std::string operator()(const std::string& s) const { return nlohmann::json(s).dump(); }
};

}  // namespace

std::string format_number(double v, int precision) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) v = 0.0;  // drop the sign of -0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    return buf;
}

void write_table(std::ostream& os, const Table& table, Format format, int precision) {
    if (format == Format::csv) {
        for (std::size_t i = 0; i < table.columns.size(); ++i) {
            os << (i ? "," : "") << table.columns[i];
        }
        os << '\n';
        for (const auto& row : table.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                os << (i ? "," : "") << std::visit(CsvCell{precision}, row[i]);
            }
            os << '\n';
        }
        return;
    }
    for (const auto& row : table.rows) {
        os << '{';
        for (std::size_t i = 0; i < row.size(); ++i) {
            os << (i ? "," : "") << nlohmann::json(table.columns[i]).dump() << ':'
               << std::visit(JsonCell{precision}, row[i]);
        }
        os << "}\n";
    }
}

}  // namespace mdsl::cli
