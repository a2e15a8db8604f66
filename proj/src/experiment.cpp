#include "overshoot/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include "overshoot/acceptance.hpp"
#include "overshoot/classifier.hpp"
#include "overshoot/counterexamples.hpp"
#include "overshoot/error.hpp"
#include "overshoot/moments.hpp"
#include "overshoot/overshoot_chain.hpp"
#include "overshoot/parallel.hpp"
#include "overshoot/path_oracle.hpp"
#include "overshoot/stats.hpp"

namespace overshoot {

namespace {

struct CommandName {
    Command command;
    std::string_view name;
};

constexpr CommandName command_names[] = {
    {Command::Moments, "moments"},
    {Command::Classify, "classify"},
    {Command::Chain, "chain"},
    {Command::Oracle, "oracle"},
    {Command::Counterexample, "counterexample"},
    {Command::PhaseDiagram, "phase-diagram"},
    {Command::Acceptance, "acceptance"},
};

double parse_real(const std::string& text, const std::string& key)
{
    double value = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (!text.empty() && *first == '+') {
        ++first;
    }
    const auto [ptr, ec] = std::from_chars(first, last, value, std::chars_format::general);
    if (ec != std::errc{} || ptr != last || text.empty() || !std::isfinite(value)) {
        throw UsageError("parameter '" + key + "': '" + text + "' is not a decimal number");
    }
    return value;
}

std::int64_t parse_integer(const std::string& text, const std::string& key)
{
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
        throw UsageError("parameter '" + key + "': '" + text + "' is not an integer");
    }
    return value;
}

ordered_json coerce(const ParameterSpec& spec, const ordered_json& value)
{
    switch (spec.kind) {
    case ParamKind::OptionalReal:
        if (value.is_null()) {
            return nullptr;
        }
        [[fallthrough]];
    case ParamKind::Real:
        if (value.is_number()) {
            return value.get<double>();
        }
        if (value.is_string()) {
            return parse_real(value.get<std::string>(), spec.key);
        }
        break;
    case ParamKind::Integer:
        if (value.is_number_integer()) {
            return value.get<std::int64_t>();
        }
        if (value.is_string()) {
            return parse_integer(value.get<std::string>(), spec.key);
        }
        break;
    case ParamKind::Text:
        if (value.is_string()) {
            return value;
        }
        if (value.is_number_integer()) {
            return std::to_string(value.get<std::int64_t>());
        }
        break;
    case ParamKind::Flag:
        if (value.is_boolean()) {
            return value;
        }
        if (value == "true" || value == "false") {
            return value == "true";
        }
        break;
    }
    throw UsageError("parameter '" + spec.key + "' has the wrong type");
}

StabilityIndex index_param(const ordered_json& params, const char* key)
{
    return StabilityIndex(params.at(key).get<double>());
}

std::size_t count_param(const ordered_json& params, const char* key)
{
    return static_cast<std::size_t>(params.at(key).get<std::int64_t>());
}

std::string utc_timestamp()
{
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

// --- moments ---------------------------------------------------------------

bool moments_agree(const MomentValue& closed, const MomentValue& quad)
{
    if (!closed.is_finite() || !quad.is_finite()) {
        return closed.is_finite() == quad.is_finite();
    }
    return std::fabs(closed.value() - quad.value()) <= std::max(1e-8, 1e-6 * closed.value());
}

std::vector<Cell> moment_row(const std::string& quantity, double r, const MomentValue& closed,
                             const MomentValue& quad)
{
    const double diff = closed.is_finite() && quad.is_finite()
        ? std::fabs(closed.value() - quad.value())
        : 0.0;
    return {quantity, r, std::string(closed.is_finite() ? "Finite" : "Infinite"),
            closed.value_or_inf(), quad.value_or_inf(), diff, moments_agree(closed, quad)};
}

Report run_moments(const ordered_json& params)
{
    Report report;
    report.columns = {"quantity", "r", "kind", "closed_form", "quadrature", "abs_diff", "agree"};
    const StabilityIndex alpha = index_param(params, "alpha");
    const double r = params.at("r").get<double>();

    report.rows.push_back(moment_row("E[U^r]", r, up_moment(alpha, r), quadrature_moment({alpha, std::nullopt, r})));
    const MomentWindow up_window = up_moment_window(alpha);
    report.summary["up_window"] = {up_window.lower, up_window.upper};

    if (!params.at("beta").is_null()) {
        const StabilityIndex beta = index_param(params, "beta");
        report.rows.push_back(
            moment_row("E[(-V)^r]", r, up_moment(beta, r), quadrature_moment({beta, std::nullopt, r})));
        report.rows.push_back(
            moment_row("E[(-VU)^r]", r, product_moment(alpha, beta, r), quadrature_moment({alpha, beta, r})));
        const MomentWindow window = product_moment_window(alpha, beta);
        report.summary["product_window"] = {window.lower, window.upper};
        report.summary["critical_exponent"] = critical_exponent(alpha, beta);
        report.summary["critical_moment"] = critical_moment(alpha, beta);
        report.summary["log_drift"] = log_drift(alpha, beta);
    }
    return report;
}

// --- classify --------------------------------------------------------------

Report run_classify(const ordered_json& params)
{
    Report report;
    report.columns = {"alpha", "beta", "label", "source", "boundary"};
    const StabilityIndex alpha = index_param(params, "alpha");
    const bool stable = params.at("beta").is_null();
    const StabilityIndex beta = stable ? alpha : index_param(params, "beta");
    const Classification c = stable ? classify_stable(alpha) : classify_stable_like(alpha, beta);
    report.rows.push_back({alpha.value(), beta.value(), std::string(to_string(c.label)), c.source, c.boundary});
    report.summary["label"] = to_string(c.label);
    report.summary["log_drift"] = log_drift(alpha, beta);
    return report;
}

// --- chain -----------------------------------------------------------------

ChainMethod parse_method(const std::string& name)
{
    if (name == "sequential") {
        return ChainMethod::Sequential;
    }
    if (name == "product") {
        return ChainMethod::ProductForm;
    }
    throw UsageError("chain: method must be 'sequential' or 'product'");
}

Report run_chain(const ordered_json& params, std::uint64_t seed, unsigned threads)
{
    const ChainConfig cfg{index_param(params, "alpha"), index_param(params, "beta"),
                          params.at("y0").get<double>(), count_param(params, "steps"),
                          count_param(params, "paths"), seed};
    const ChainMethod method = parse_method(params.at("method").get<std::string>());
    const std::vector<ChainTrajectory> paths = simulate_paths(cfg, method, threads);

    Report report;
    report.columns = {"step", "mean_log_y", "sd_log_y", "q10_log_y", "median_log_y", "q90_log_y"};
    std::vector<double> column(paths.size());
    for (std::size_t k = 0; k <= cfg.n_steps; ++k) {
        RunningStats s;
        for (std::size_t i = 0; i < paths.size(); ++i) {
            column[i] = paths[i].log_values[k];
            s.push(column[i]);
        }
        report.rows.push_back({static_cast<std::int64_t>(k), s.mean(), std::sqrt(s.variance()),
                               empirical_quantile(column, 0.1), empirical_quantile(column, 0.5),
                               empirical_quantile(column, 0.9)});
    }

    const Classification analytic = classify_stable_like(cfg.alpha, cfg.beta);
    report.summary["analytic_label"] = to_string(analytic.label);
    report.summary["log_drift"] = log_drift(cfg.alpha, cfg.beta);
    const RunningStats steps = pooled_log_steps(paths);
    report.summary["mean_log_step"] = steps.mean();
    report.summary["standard_error"] = steps.standard_error();
    try {
        const LimitEvidence evidence = classify_log_steps(steps, log_drift(cfg.alpha, cfg.beta));
        report.summary["empirical_label"] = to_string(evidence.behavior);
        report.summary["agree"] = consistent(analytic, evidence.behavior);
    } catch (const InconclusiveError&) {
        report.summary["empirical_label"] = "Inconclusive";
        report.summary["agree"] = false;
    }
    return report;
}

// --- oracle ----------------------------------------------------------------

Report run_oracle(const ordered_json& params, std::uint64_t seed, unsigned threads)
{
    PathConfig cfg{index_param(params, "alpha")};
    cfg.x0 = params.at("x0").get<double>();
    cfg.dt = params.at("dt").get<double>();
    cfg.max_time = params.at("max_time").is_null() ? 1e6 * cfg.dt : params.at("max_time").get<double>();
    cfg.n_paths = count_param(params, "paths");
    cfg.master_seed = seed;
    if (!(cfg.x0 < 0.0)) {
        throw UsageError("oracle: x0 must be negative (barrier at 0)");
    }
    const OvershootReport result = empirical_overshoot_report(cfg, threads);

    Report report;
    report.columns = {"p", "y", "ecdf", "cdf", "abs_diff"};
    for (const EcdfRow& row : result.table) {
        report.rows.push_back({row.p, row.y, row.ecdf, row.cdf, std::fabs(row.ecdf - row.cdf)});
    }
    report.summary["max_time"] = cfg.max_time;
    report.summary["n_paths"] = result.n_paths;
    report.summary["n_censored"] = result.n_censored;
    report.summary["censored_fraction"] = result.censored_fraction;
    report.summary["n_at_barrier"] = result.n_at_barrier;
    report.summary["ks"] = result.ks;
    return report;
}

// --- counterexample --------------------------------------------------------

Variant parse_variant(const std::string& name)
{
    if (name == "one" || name == "1") {
        return Variant::One;
    }
    if (name == "two" || name == "2") {
        return Variant::Two;
    }
    throw UsageError("counterexample: variant must be 'one' or 'two'");
}

Report run_counterexample(const ordered_json& params, std::uint64_t seed)
{
    const Variant variant = parse_variant(params.at("variant").get<std::string>());
    const std::string mode = params.at("mode").get<std::string>();
    const std::size_t n = count_param(params, "n");
    Rational x0;
    try {
        x0 = Rational::parse(params.at("x0").get<std::string>());
    } catch (const DomainError& e) {
        throw UsageError(std::string("counterexample: ") + e.what());
    }

    Report report;
    if (mode == "orbit") {
        report.columns = {"k", "state", "value"};
        const std::vector<Rational> states = orbit(variant, x0, n);
        for (std::size_t k = 0; k < states.size(); ++k) {
            report.rows.push_back({static_cast<std::int64_t>(k), states[k].to_string(), states[k].to_double()});
        }
    } else if (mode == "overshoots") {
        report.columns = {"n", "closed_form", "iterated", "match"};
        const std::vector<Rational> iterated = overshoots_by_iteration(variant, x0, n);
        for (std::size_t k = 0; k <= n; ++k) {
            const Rational closed = overshoot_orbit(variant, x0, k);
            report.rows.push_back({static_cast<std::int64_t>(k), closed.to_string(), iterated[k].to_string(),
                                   closed == iterated[k]});
        }
    } else if (mode == "subordinate") {
        report.columns = {"time", "state", "value"};
        Stream rng = Stream::for_task(seed, 0);
        const SubordinatedPath path = subordinate(variant, x0, params.at("rate").get<double>(),
                                                  params.at("horizon").get<double>(), rng);
        for (std::size_t k = 0; k < path.times.size(); ++k) {
            report.rows.push_back({path.times[k], path.states[k].to_string(), path.states[k].to_double()});
        }
    } else {
        throw UsageError("counterexample: mode must be 'orbit', 'overshoots' or 'subordinate'");
    }
    return report;
}

// --- phase diagram ---------------------------------------------------------

Report run_phase_diagram(const ordered_json& params, std::uint64_t seed, unsigned threads)
{
    const std::vector<double> grid = parse_grid(params.at("grid").get<std::string>());
    const std::size_t paths = count_param(params, "paths");
    const std::size_t steps = count_param(params, "steps");
    const double y0 = params.at("y0").get<double>();
    const std::size_t n = grid.size();

    std::vector<std::vector<Cell>> rows(n * n);
    parallel_for(n * n, threads, [&](std::size_t cell) {
        const StabilityIndex alpha(grid[cell / n]);
        const StabilityIndex beta(grid[cell % n]);
        const ChainConfig cfg{alpha, beta, y0, steps, paths, task_key(seed, cell)};
        const Classification analytic = classify_stable_like(alpha, beta);
        std::string empirical;
        LimitEvidence evidence;
        bool agree = false;
        try {
            evidence = estimate_limit_behavior(cfg, 1);
            empirical = to_string(evidence.behavior);
            agree = consistent(analytic, evidence.behavior);
        } catch (const InconclusiveError& e) {
            evidence = e.evidence();
            empirical = "Inconclusive";
        }
        rows[cell] = {alpha.value(), beta.value(), std::string(to_string(analytic.label)), empirical,
                      evidence.mean_log_step, evidence.standard_error, agree};
    });

    Report report;
    report.columns = {"alpha", "beta", "analytic_label", "empirical_label", "lambda_hat", "se", "agree"};
    report.rows = std::move(rows);
    return report;
}

// --- acceptance ------------------------------------------------------------

std::vector<int> parse_ids(const std::string& text)
{
    std::vector<int> ids;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (!item.empty()) {
            ids.push_back(static_cast<int>(parse_integer(item, "criteria")));
        }
    }
    return ids;
}

Report run_acceptance_command(const ordered_json& params, std::uint64_t seed, unsigned threads,
                              std::ostream* console)
{
    AcceptanceOptions options;
    options.master_seed = seed;
    options.threads = threads;
    options.only = parse_ids(params.at("criteria").get<std::string>());
    if (console) {
        options.on_result = [console](const CriterionResult& r) {
            *console << format_result_line(r) << std::endl;
        };
    }
    const std::vector<CriterionResult> results = run_acceptance(options);

    Report report;
    report.columns = {"id", "criterion", "passed", "detail"};
    std::int64_t failed = 0;
    ordered_json failing = ordered_json::array();
    for (const CriterionResult& r : results) {
        report.rows.push_back({static_cast<std::int64_t>(r.id), r.name, r.passed, r.detail});
        if (!r.passed) {
            ++failed;
            failing.push_back("AC" + std::to_string(r.id));
        }
    }
    report.summary["all_passed"] = failed == 0;
    report.summary["n_failed"] = failed;
    report.summary["failing"] = failing;
    return report;
}

}  // namespace

Command parse_command(std::string_view name)
{
    for (const auto& [command, text] : command_names) {
        if (text == name) {
            return command;
        }
    }
    throw UsageError("unknown command '" + std::string(name) + "'");
}

std::string_view to_string(Command command) noexcept
{
    for (const auto& [c, text] : command_names) {
        if (c == command) {
            return text;
        }
    }
    return "unknown";
}

const std::vector<Command>& all_commands()
{
    static const std::vector<Command> commands = [] {
        std::vector<Command> out;
        for (const auto& entry : command_names) {
            out.push_back(entry.command);
        }
        return out;
    }();
    return commands;
}

const std::vector<ParameterSpec>& parameter_specs(Command command)
{
    using K = ParamKind;
    static const std::vector<ParameterSpec> moments = {
        {"alpha", K::Real, 1.0, "stability index below the barrier, in (0,2)"},
        {"beta", K::OptionalReal, nullptr, "stability index above the barrier; adds the product moment"},
        {"r", K::Real, 0.25, "moment exponent"},
    };
    static const std::vector<ParameterSpec> classify = {
        {"alpha", K::Real, 1.0, "stability index below the barrier, in (0,2)"},
        {"beta", K::OptionalReal, nullptr, "stability index above the barrier (default: alpha)"},
    };
    static const std::vector<ParameterSpec> chain = {
        {"alpha", K::Real, 1.0, "stability index below the barrier"},
        {"beta", K::Real, 1.0, "stability index above the barrier"},
        {"y0", K::Real, 1.0, "initial state, > 0"},
        {"steps", K::Integer, 200, "chain steps per path"},
        {"paths", K::Integer, 1000, "number of paths"},
        {"method", K::Text, "sequential", "sequential | product"},
    };
    static const std::vector<ParameterSpec> oracle = {
        {"alpha", K::Real, 1.0, "stability index"},
        {"x0", K::Real, -1.0, "start, below the barrier 0"},
        {"dt", K::Real, 1e-4, "Euler time step"},
        {"max_time", K::OptionalReal, nullptr, "censoring horizon (default 1e6 * dt)"},
        {"paths", K::Integer, 1000, "number of first-passage walks"},
    };
    static const std::vector<ParameterSpec> counterexample = {
        {"variant", K::Text, "one", "one | two"},
        {"mode", K::Text, "orbit", "orbit | overshoots | subordinate"},
        {"x0", K::Text, "0", "start state as a rational p/q"},
        {"n", K::Integer, 16, "orbit length / number of overshoots"},
        {"rate", K::Real, 1.0, "Poisson clock rate (subordinate)"},
        {"horizon", K::Real, 20.0, "time horizon (subordinate)"},
    };
    static const std::vector<ParameterSpec> phase = {
        {"grid", K::Text, "0.1:1.9:0.1", "lo:hi:step grid for both indices"},
        {"paths", K::Integer, 200, "paths per cell"},
        {"steps", K::Integer, 200, "chain steps per path"},
        {"y0", K::Real, 1.0, "initial state"},
    };
    static const std::vector<ParameterSpec> acceptance = {
        {"criteria", K::Text, "", "comma-separated criterion ids (default: all)"},
    };
    switch (command) {
    case Command::Moments:
        return moments;
    case Command::Classify:
        return classify;
    case Command::Chain:
        return chain;
    case Command::Oracle:
        return oracle;
    case Command::Counterexample:
        return counterexample;
    case Command::PhaseDiagram:
        return phase;
    case Command::Acceptance:
        return acceptance;
    }
    return acceptance;
}

ordered_json resolve_parameters(Command command, const ordered_json& given)
{
    if (!given.is_null() && !given.is_object()) {
        throw UsageError("parameters must be a JSON object");
    }
    const auto& specs = parameter_specs(command);
    if (given.is_object()) {
        for (const auto& [key, value] : given.items()) {
            const bool known = std::any_of(specs.begin(), specs.end(),
                                           [&](const ParameterSpec& s) { return s.key == key; });
            if (!known) {
                throw UsageError("unknown parameter '" + key + "' for command " + std::string(to_string(command)));
            }
        }
    }
    ordered_json resolved = ordered_json::object();
    for (const ParameterSpec& spec : specs) {
        const bool present = given.is_object() && given.contains(spec.key);
        resolved[spec.key] = coerce(spec, present ? given.at(spec.key) : spec.default_value);
    }

    for (const char* key : {"alpha", "beta"}) {
        if (resolved.contains(key) && !resolved[key].is_null()) {
            const double v = resolved[key].get<double>();
            if (!(v > 0.0 && v < 2.0)) {
                throw UsageError(std::string(key) + " must lie in the open interval (0,2)");
            }
        }
    }
    for (const char* key : {"steps", "paths"}) {
        if (resolved.contains(key) && resolved[key].get<std::int64_t>() < 1) {
            throw UsageError(std::string(key) + " must be at least 1");
        }
    }
    for (const char* key : {"y0", "dt", "rate", "horizon"}) {
        if (resolved.contains(key) && !(resolved[key].get<double>() > 0.0)) {
            throw UsageError(std::string(key) + " must be positive");
        }
    }
    if (resolved.contains("n") && resolved["n"].get<std::int64_t>() < 0) {
        throw UsageError("n must be non-negative");
    }
    for (const char* key : {"paths", "steps"}) {
        if (resolved.contains(key) && resolved[key].get<std::int64_t>() < 1) {
            throw UsageError(std::string(key) + " must be at least 1");
        }
    }
    const std::pair<const char*, std::vector<std::string>> choices[] = {
        {"method", {"sequential", "product"}},
        {"variant", {"one", "two"}},
        {"mode", {"orbit", "overshoots", "subordinate"}},
    };
    for (const auto& [key, allowed] : choices) {
        if (resolved.contains(key)
            && std::find(allowed.begin(), allowed.end(), resolved[key].get<std::string>()) == allowed.end()) {
            throw UsageError(std::string(key) + " must be one of the listed values, got '"
                             + resolved[key].get<std::string>() + "'");
        }
    }
    if (resolved.contains("criteria")) {
        for (int id : parse_ids(resolved["criteria"].get<std::string>())) {
            if (id < 1 || id > 11) {
                throw UsageError("acceptance criteria are numbered 1 to 11, got " + std::to_string(id));
            }
        }
    }
    return resolved;
}

ExperimentConfig config_from_json(const ordered_json& doc)
{
    if (!doc.is_object()) {
        throw UsageError("config file must hold one JSON object");
    }
    ExperimentConfig config;
    for (const auto& [key, value] : doc.items()) {
        if (key == "command") {
            config.command = parse_command(value.get<std::string>());
        } else if (key == "parameters") {
            config.parameters = value;
        } else if (key == "master_seed") {
            if (!value.is_number_unsigned() && !value.is_number_integer()) {
                throw UsageError("master_seed must be an integer");
            }
            config.master_seed = value.get<std::uint64_t>();
        } else if (key == "output") {
            config.output_path = value.get<std::string>();
        } else if (key == "format") {
            config.format = value == "csv" ? Format::Csv : value == "json" ? Format::Json
                : throw UsageError("format must be csv or json");
        } else {
            throw UsageError("unknown config key '" + key + "'");
        }
    }
    if (!doc.contains("command")) {
        throw UsageError("config file lacks \"command\"");
    }
    return config;
}

Format default_format(Command command) noexcept
{
    switch (command) {
    case Command::Chain:
    case Command::Oracle:
    case Command::PhaseDiagram:
        return Format::Csv;
    default:
        return Format::Json;
    }
}

ordered_json resolved_config(const ExperimentConfig& config)
{
    ordered_json out = ordered_json::object();
    out["command"] = to_string(config.command);
    out["parameters"] = resolve_parameters(config.command, config.parameters);
    out["master_seed"] = config.master_seed;
    out["format"] = to_string(config.format.value_or(default_format(config.command)));
    return out;
}

std::vector<double> parse_grid(const std::string& spec)
{
    std::vector<std::string> parts;
    std::stringstream in(spec);
    std::string item;
    while (std::getline(in, item, ':')) {
        parts.push_back(item);
    }
    if (parts.size() != 3) {
        throw UsageError("grid must be lo:hi:step");
    }
    const double lo = parse_real(parts[0], "grid");
    const double hi = parse_real(parts[1], "grid");
    const double step = parse_real(parts[2], "grid");
    if (!(step > 0.0) || hi < lo) {
        throw UsageError("grid needs lo <= hi and step > 0");
    }
    const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
    std::vector<double> values;
    values.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        values.push_back(std::round((lo + static_cast<double>(i) * step) * 1e12) / 1e12);
    }
    for (double v : values) {
        if (!(v > 0.0 && v < 2.0)) {
            throw UsageError("grid values must lie in (0,2)");
        }
    }
    return values;
}

Report execute(const ExperimentConfig& config, std::ostream* console)
{
    const ordered_json header = resolved_config(config);
    const ordered_json& params = header.at("parameters");
    Report report;
    switch (config.command) {
    case Command::Moments:
        report = run_moments(params);
        break;
    case Command::Classify:
        report = run_classify(params);
        break;
    case Command::Chain:
        report = run_chain(params, config.master_seed, config.threads);
        break;
    case Command::Oracle:
        report = run_oracle(params, config.master_seed, config.threads);
        break;
    case Command::Counterexample:
        report = run_counterexample(params, config.master_seed);
        break;
    case Command::PhaseDiagram:
        report = run_phase_diagram(params, config.master_seed, config.threads);
        break;
    case Command::Acceptance:
        report = run_acceptance_command(params, config.master_seed, config.threads, console);
        break;
    }
    report.config = header;
    return report;
}

int run(const ExperimentConfig& config, std::ostream& console, std::ostream& errors)
{
    Report report;
    try {
        report = execute(config, &console);
    } catch (const UsageError& e) {
        errors << "usage error: " << e.what() << '\n';
        return exit_code::usage;
    } catch (const std::exception& e) {
        errors << "error: " << e.what() << '\n';
        return exit_code::numeric;
    }

    const Format format = config.format.value_or(default_format(config.command));
    const std::optional<std::string> stamp =
        config.header_timestamp ? std::optional<std::string>(utc_timestamp()) : std::nullopt;
    if (config.output_path.empty() || config.output_path == "-") {
        emit_report(report, format, std::cout, stamp);
        std::cout.flush();
        if (!std::cout) {
            errors << "error: failed writing to stdout\n";
            return exit_code::numeric;
        }
    } else {
        std::ofstream out(config.output_path, std::ios::binary);
        if (out) {
            emit_report(report, format, out, stamp);
        }
        out.close();
        if (!out) {
            errors << "error: cannot write '" << config.output_path << "'\n";
            return exit_code::numeric;
        }
    }

    if (config.command == Command::Acceptance && !report.summary.value("all_passed", false)) {
        for (const auto& id : report.summary["failing"]) {
            errors << "acceptance failure: " << id.get<std::string>() << '\n';
        }
        return exit_code::acceptance_failed;
    }
    return exit_code::ok;
}

}  // namespace overshoot
