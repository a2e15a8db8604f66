#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "overshoot/experiment.hpp"

namespace ov = overshoot;

namespace {

std::string flag_name(std::string key)
{
    for (char& c : key) {
        if (c == '_') {
            c = '-';
        }
    }
    return "--" + key;
}

std::optional<std::uint64_t> env_seed()
{
    const char* raw = std::getenv(ov::seed_env_var);
    if (raw == nullptr || *raw == '\0') {
        return std::nullopt;
    }
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(raw, &used, 0);
        if (used != std::string(raw).size()) {
            throw std::invalid_argument("trailing characters");
        }
        return v;
    } catch (const std::exception&) {
        throw ov::UsageError(std::string(ov::seed_env_var) + " is not an unsigned integer: " + raw);
    }
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Monte Carlo and closed-form laboratory for overshoot chains of stable-like processes"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::string output;
    std::string format;
    bool no_timestamp = false;
    unsigned threads = 0;

    app.add_option("--config", config_path, "JSON config file; flags override its values")->check(CLI::ExistingFile);
    app.add_option("--seed", seed, "master seed (default: config file, then $OVERSHOOT_LAB_SEED, then 42)");
    app.add_option("--output,-o", output, "output file ('-' for stdout)");
    app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    app.add_flag("--no-header-timestamp", no_timestamp, "omit the generation timestamp");
    app.add_option("--threads", threads, "worker cap (0 = all cores); results do not depend on it");

    // Flag values are kept as strings and coerced by resolve_parameters.
    std::map<ov::Command, std::map<std::string, std::string>> values;
    std::map<ov::Command, std::map<std::string, bool>> flags;
    std::map<ov::Command, CLI::App*> subcommands;
    std::map<ov::Command, std::map<std::string, CLI::Option*>> options;
    for (ov::Command command : ov::all_commands()) {
        CLI::App* sub = app.add_subcommand(std::string(ov::to_string(command)));
        subcommands[command] = sub;
        for (const ov::ParameterSpec& spec : ov::parameter_specs(command)) {
            const std::string help = spec.help + " (default " + spec.default_value.dump() + ")";
            if (spec.kind == ov::ParamKind::Flag) {
                options[command][spec.key] = sub->add_flag(flag_name(spec.key), flags[command][spec.key], help);
            } else {
                options[command][spec.key] = sub->add_option(flag_name(spec.key), values[command][spec.key], help);
            }
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ov::exit_code::ok : ov::exit_code::usage;
    }

    try {
        ov::Command command = ov::Command::Classify;
        for (const auto& [c, sub] : subcommands) {
            if (sub->parsed()) {
                command = c;
            }
        }

        ov::ExperimentConfig config;
        std::optional<std::uint64_t> file_seed;
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            ov::ordered_json doc;
            try {
                doc = ov::ordered_json::parse(in);
            } catch (const ov::ordered_json::parse_error& e) {
                throw ov::UsageError(std::string("config file is not valid JSON: ") + e.what());
            }
            file_seed = doc.contains("master_seed") ? std::optional<std::uint64_t>(0) : std::nullopt;
            config = ov::config_from_json(doc);
            if (file_seed) {
                file_seed = config.master_seed;
            }
            if (config.command != command) {
                throw ov::UsageError("config file command '" + std::string(ov::to_string(config.command))
                                     + "' does not match subcommand '" + std::string(ov::to_string(command)) + "'");
            }
        }
        config.command = command;
        for (const auto& [key, option] : options[command]) {
            if (option->count() == 0) {
                continue;
            }
            if (flags[command].contains(key)) {
                config.parameters[key] = flags[command][key];
            } else {
                config.parameters[key] = values[command][key];
            }
        }
        if (seed) {
            config.master_seed = *seed;
        } else if (file_seed) {
            config.master_seed = *file_seed;
        } else if (const auto from_env = env_seed()) {
            config.master_seed = *from_env;
        } else {
            config.master_seed = ov::default_master_seed;
        }
        if (!output.empty()) {
            config.output_path = output;
        }
        if (!format.empty()) {
            config.format = ov::parse_format(format);
        }
        if (no_timestamp) {
            config.header_timestamp = false;
        }
        config.threads = threads;
        return ov::run(config, std::cerr, std::cerr);
    } catch (const ov::UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return ov::exit_code::usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return ov::exit_code::numeric;
    }
}
