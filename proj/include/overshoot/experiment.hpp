#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "overshoot/report.hpp"

namespace overshoot {

/// Malformed or unknown configuration; maps to exit status 1.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int usage = 1;
inline constexpr int numeric = 2;
inline constexpr int acceptance_failed = 3;
}  // namespace exit_code

enum class Command { Moments, Classify, Chain, Oracle, Counterexample, PhaseDiagram, Acceptance };

Command parse_command(std::string_view name);
std::string_view to_string(Command command) noexcept;
const std::vector<Command>& all_commands();

enum class ParamKind { Real, OptionalReal, Integer, Text, Flag };

struct ParameterSpec {
    std::string key;  ///< JSON key; the CLI flag is --key with '_' -> '-'
    ParamKind kind;
    ordered_json default_value;
    std::string help;
};

const std::vector<ParameterSpec>& parameter_specs(Command command);

inline constexpr std::uint64_t default_master_seed = 42;
inline constexpr const char* seed_env_var = "OVERSHOOT_LAB_SEED";

struct ExperimentConfig {
    Command command = Command::Classify;
    ordered_json parameters = ordered_json::object();  ///< as given; resolved on execution
    std::uint64_t master_seed = default_master_seed;
    std::string output_path = "-";  ///< "-" writes to stdout
    std::optional<Format> format;   ///< unset: the command's default
    bool header_timestamp = true;
    unsigned threads = 0;           ///< 0 = machine parallelism; never affects results
};

/// Reads {"command": ..., "parameters": {...}, "master_seed": n,
/// "output": path, "format": "csv"|"json"}. Unknown keys throw UsageError.
ExperimentConfig config_from_json(const ordered_json& doc);

/// Fills defaults, coerces strings (CLI flags) to the declared kinds and
/// rejects unknown keys or out-of-range stability indices.
ordered_json resolve_parameters(Command command, const ordered_json& given);

Format default_format(Command command) noexcept;

/// The resolved configuration recorded in every report header (without the
/// thread count).
ordered_json resolved_config(const ExperimentConfig& config);

/// Computes the report. Errors propagate as exceptions. `console` receives
/// progress lines for long commands (acceptance) when non-null.
Report execute(const ExperimentConfig& config, std::ostream* console = nullptr);

/// execute + emit, mapping failures to exit statuses 0/1/2/3.
int run(const ExperimentConfig& config, std::ostream& console, std::ostream& errors);

/// Parses "lo:hi:step" into grid values rounded to 12 decimals.
std::vector<double> parse_grid(const std::string& spec);

}  // namespace overshoot
