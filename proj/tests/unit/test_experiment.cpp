#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "overshoot/experiment.hpp"

using namespace overshoot;

namespace {

ExperimentConfig make(Command c, ordered_json params)
{
    ExperimentConfig cfg;
    cfg.command = c;
    cfg.parameters = std::move(params);
    cfg.header_timestamp = false;
    cfg.threads = 1;
    return cfg;
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> split(const std::string& line)
{
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) {
        out.push_back(field);
    }
    return out;
}

}  // namespace

TEST_CASE("command names")
{
    for (Command c : all_commands()) {
        CHECK(parse_command(to_string(c)) == c);
    }
    CHECK(to_string(Command::PhaseDiagram) == "phase-diagram");
    CHECK_THROWS_AS(parse_command("plot"), UsageError);
}

TEST_CASE("grid parsing")
{
    const auto g = parse_grid("0.1:1.9:0.1");
    REQUIRE(g.size() == 19);
    CHECK(g.front() == 0.1);
    CHECK(g[6] == 0.7);
    CHECK(g.back() == 1.9);
    CHECK_THROWS_AS(parse_grid("0.1:1.9"), UsageError);
    CHECK_THROWS_AS(parse_grid("0.5:0.1:0.1"), UsageError);
    CHECK_THROWS_AS(parse_grid("0:1:0.5"), UsageError);
}

TEST_CASE("parameter resolution")
{
    const ordered_json p = resolve_parameters(Command::Moments, {{"alpha", "1.5"}, {"r", "-0.25"}});
    CHECK(p["alpha"] == 1.5);
    CHECK(p["r"] == -0.25);
    CHECK(p["beta"].is_null());
    CHECK_THROWS_AS(resolve_parameters(Command::Moments, {{"gamma", 1}}), UsageError);
    CHECK_THROWS_AS(resolve_parameters(Command::Moments, {{"alpha", "2"}}), UsageError);
    CHECK_THROWS_AS(resolve_parameters(Command::Moments, {{"alpha", "0"}}), UsageError);
    CHECK_THROWS_AS(resolve_parameters(Command::Moments, {{"alpha", "1,5"}}), UsageError);
    CHECK_THROWS_AS(resolve_parameters(Command::Chain, {{"steps", "2.5"}}), UsageError);
    CHECK_THROWS_AS(resolve_parameters(Command::Chain, {{"y0", "-1"}}), UsageError);
    CHECK_THROWS_AS(resolve_parameters(Command::Counterexample, {{"variant", "three"}}), UsageError);
}

TEST_CASE("config files")
{
    const ExperimentConfig cfg = config_from_json(ordered_json::parse(
        R"({"command":"chain","parameters":{"alpha":0.7},"master_seed":7,"output":"x.csv","format":"json"})"));
    CHECK(cfg.command == Command::Chain);
    CHECK(cfg.master_seed == 7);
    CHECK(cfg.output_path == "x.csv");
    CHECK(cfg.format == Format::Json);
    CHECK(cfg.parameters["alpha"] == 0.7);
    CHECK_THROWS_AS(config_from_json(ordered_json::parse(R"({"command":"chain","colour":1})")), UsageError);
    CHECK_THROWS_AS(config_from_json(ordered_json::parse(R"({"command":"chain","format":"xml"})")), UsageError);
    CHECK_THROWS_AS(config_from_json(ordered_json::parse(R"([1,2])")), UsageError);
}

TEST_CASE("resolved config is recorded without the thread count")
{
    ExperimentConfig cfg = make(Command::Classify, {{"alpha", 0.9}, {"beta", 0.9}});
    cfg.master_seed = 5;
    const Report r = execute(cfg);
    CHECK(r.config["command"] == "classify");
    CHECK(r.config["master_seed"] == 5);
    CHECK(r.config["parameters"]["alpha"] == 0.9);
    CHECK_FALSE(r.config.contains("threads"));
    CHECK(r.summary["label"] == "Transient");
}

TEST_CASE("moments command reports closed form and quadrature")
{
    const Report r = execute(make(Command::Moments, {{"alpha", 1.0}, {"r", 0.25}}));
    REQUIRE(r.rows.size() >= 1);
    CHECK(std::get<std::string>(r.rows[0][2]) == "Finite");
    CHECK(std::get<double>(r.rows[0][3]) == doctest::Approx(1.4142136).epsilon(1e-7));
    CHECK(std::get<bool>(r.rows[0].back()));
}

TEST_CASE("phase diagram columns and CSV/JSON round trip")
{
    ExperimentConfig cfg = make(Command::PhaseDiagram, {{"grid", "0.4:1.6:0.6"}, {"paths", 100}, {"steps", 60}});
    cfg.format = Format::Csv;
    const Report r = execute(cfg);
    CHECK(r.columns == std::vector<std::string>{"alpha", "beta", "analytic_label", "empirical_label", "lambda_hat", "se", "agree"});
    CHECK(r.rows.size() == 9);

    const std::string csv = render_report(r, Format::Csv);
    const ordered_json json = ordered_json::parse(render_report(r, Format::Json));
    std::stringstream lines(csv);
    std::string line;
    std::vector<std::vector<std::string>> table;
    while (std::getline(lines, line)) {
        if (!line.empty() && line[0] != '#') {
            table.push_back(split(line));
        }
    }
    REQUIRE(table.size() == 10);
    for (std::size_t i = 0; i < 9; ++i) {
        const auto& row = json["rows"][i];
        for (const char* col : {"alpha", "beta", "lambda_hat", "se"}) {
            const auto it = std::find(table[0].begin(), table[0].end(), std::string(col));
            const double from_csv = std::strtod(table[i + 1][it - table[0].begin()].c_str(), nullptr);
            CHECK(from_csv == row[col].get<double>());
        }
    }
}

TEST_CASE("reports do not depend on the thread count")
{
    ExperimentConfig cfg = make(Command::Chain, {{"alpha", 0.8}, {"beta", 1.3}, {"paths", 40}, {"steps", 25}});
    cfg.format = Format::Csv;
    const std::string one = render_report(execute(cfg), Format::Csv);
    cfg.threads = 4;
    CHECK(render_report(execute(cfg), Format::Csv) == one);
    cfg.master_seed = 43;
    CHECK(render_report(execute(cfg), Format::Csv) != one);
}

TEST_CASE("run writes files and maps errors to exit codes")
{
    const auto dir = std::filesystem::temp_directory_path() / "overshoot_lab_test";
    std::filesystem::create_directories(dir);
    std::ostringstream console;
    std::ostringstream errors;

    ExperimentConfig cfg = make(Command::Counterexample, {{"x0", "0"}, {"n", 16}});
    cfg.format = Format::Csv;
    cfg.output_path = (dir / "a.csv").string();
    REQUIRE(run(cfg, console, errors) == exit_code::ok);
    cfg.output_path = (dir / "b.csv").string();
    REQUIRE(run(cfg, console, errors) == exit_code::ok);
    CHECK(slurp(dir / "a.csv") == slurp(dir / "b.csv"));
    CHECK(slurp(dir / "a.csv").find("15,-1/8,-0.125\n16,9,9\n") != std::string::npos);

    cfg.header_timestamp = true;
    cfg.output_path = (dir / "c.csv").string();
    REQUIRE(run(cfg, console, errors) == exit_code::ok);
    const std::string stamped = slurp(dir / "c.csv");
    CHECK(stamped.rfind("# generated: ", 0) == 0);
    CHECK(stamped.substr(stamped.find('\n') + 1) == slurp(dir / "a.csv"));

    ExperimentConfig bad = make(Command::Moments, {{"alpha", 2.5}});
    CHECK(run(bad, console, errors) == exit_code::usage);

    ExperimentConfig censored = make(Command::Oracle, {{"x0", -1e9}, {"dt", 0.1}, {"max_time", 1.0}, {"paths", 3}});
    CHECK(run(censored, console, errors) == exit_code::numeric);

    ExperimentConfig unwritable = cfg;
    unwritable.output_path = (dir / "missing" / "x.csv").string();
    CHECK(run(unwritable, console, errors) == exit_code::numeric);

    ExperimentConfig unknown = make(Command::Acceptance, {{"criteria", "99"}});
    CHECK(run(unknown, console, errors) == exit_code::usage);

    ExperimentConfig quick = make(Command::Acceptance, {{"criteria", "1,9"}});
    quick.output_path = (dir / "acc.json").string();
    CHECK(run(quick, console, errors) == exit_code::ok);
    CHECK(console.str().find("[PASS] AC1") != std::string::npos);
    std::filesystem::remove_all(dir);
}
