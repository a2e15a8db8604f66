#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

namespace overshoot {

using ordered_json = nlohmann::ordered_json;

using Cell = std::variant<std::string, double, std::int64_t, bool>;

/// A tabular result plus the resolved configuration that produced it.
struct Report {
    ordered_json config = ordered_json::object();
    ordered_json summary = ordered_json::object();
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

enum class Format { Csv, Json };

Format parse_format(const std::string& name);
std::string to_string(Format format);

/// Reals with 17 significant digits, '.' separator; non-finite values as
/// "inf", "-inf", "nan".
std::string format_real(double value);

/// RFC-4180 field quoting.
std::string csv_field(const std::string& text);

/// Writes the report. The optional timestamp is the only line that varies
/// between identical runs.
///
/// CSV: "# generated: <ts>", "# config: <json>", optional "# summary: <json>",
/// then the header row and the data rows.
/// JSON: one object with keys generated?, config, summary, columns, rows;
/// each row is an object in column order.
void emit_report(const Report& report, Format format, std::ostream& out,
                 const std::optional<std::string>& timestamp = std::nullopt);

std::string render_report(const Report& report, Format format,
                          const std::optional<std::string>& timestamp = std::nullopt);

}  // namespace overshoot
