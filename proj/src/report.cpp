#include "overshoot/report.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <sstream>

#include "overshoot/error.hpp"

namespace overshoot {

namespace {

ordered_json cell_to_json(const Cell& cell)
{
    return std::visit(
        [](const auto& v) -> ordered_json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
                if (!std::isfinite(v)) {
                    return format_real(v);
                }
            }
            return v;
        },
        cell);
}

std::string cell_to_csv(const Cell& cell)
{
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::string>) {
                return csv_field(v);
            } else if constexpr (std::is_same_v<T, double>) {
                return format_real(v);
            } else if constexpr (std::is_same_v<T, bool>) {
                return v ? "true" : "false";
            } else {
                return std::to_string(v);
            }
        },
        cell);
}

}  // namespace

Format parse_format(const std::string& name)
{
    if (name == "csv") {
        return Format::Csv;
    }
    if (name == "json") {
        return Format::Json;
    }
    throw DomainError("unknown format '" + name + "' (expected csv or json)");
}

std::string to_string(Format format)
{
    return format == Format::Csv ? "csv" : "json";
}

std::string format_real(double value)
{
    if (std::isnan(value)) {
        return "nan";
    }
    if (std::isinf(value)) {
        return value > 0 ? "inf" : "-inf";
    }
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
    return std::string(buf, ptr);
}

std::string csv_field(const std::string& text)
{
    if (text.find_first_of(",\"\r\n") == std::string::npos) {
        return text;
    }
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

void emit_report(const Report& report, Format format, std::ostream& out,
                 const std::optional<std::string>& timestamp)
{
    if (format == Format::Json) {
        ordered_json doc = ordered_json::object();
        if (timestamp) {
            doc["generated"] = *timestamp;
        }
        doc["config"] = report.config;
        doc["summary"] = report.summary;
        doc["columns"] = report.columns;
        ordered_json rows = ordered_json::array();
        for (const auto& row : report.rows) {
            ordered_json obj = ordered_json::object();
            for (std::size_t i = 0; i < report.columns.size() && i < row.size(); ++i) {
                obj[report.columns[i]] = cell_to_json(row[i]);
            }
            rows.push_back(std::move(obj));
        }
        doc["rows"] = std::move(rows);
        out << doc.dump(2) << '\n';
        return;
    }

    if (timestamp) {
        out << "# generated: " << *timestamp << '\n';
    }
    out << "# config: " << report.config.dump() << '\n';
    if (!report.summary.empty()) {
        out << "# summary: " << report.summary.dump() << '\n';
    }
    for (std::size_t i = 0; i < report.columns.size(); ++i) {
        out << (i ? "," : "") << csv_field(report.columns[i]);
    }
    out << '\n';
    for (const auto& row : report.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "," : "") << cell_to_csv(row[i]);
        }
        out << '\n';
    }
}

std::string render_report(const Report& report, Format format, const std::optional<std::string>& timestamp)
{
    std::ostringstream out;
    emit_report(report, format, out, timestamp);
    return out.str();
}

}  // namespace overshoot
