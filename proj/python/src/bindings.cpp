#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "overshoot/classifier.hpp"
#include "overshoot/counterexamples.hpp"
#include "overshoot/error.hpp"
#include "overshoot/experiment.hpp"
#include "overshoot/moments.hpp"
#include "overshoot/overshoot_chain.hpp"
#include "overshoot/overshoot_law.hpp"
#include "overshoot/random.hpp"

namespace py = pybind11;
namespace ov = overshoot;

namespace {

ov::Variant parse_variant(const std::string& name)
{
    if (name == "one") {
        return ov::Variant::One;
    }
    if (name == "two") {
        return ov::Variant::Two;
    }
    throw ov::UsageError("variant must be 'one' or 'two'");
}

std::vector<std::string> as_strings(const std::vector<ov::Rational>& values)
{
    std::vector<std::string> out;
    out.reserve(values.size());
    for (const ov::Rational& v : values) {
        out.push_back(v.to_string());
    }
    return out;
}

py::dict classification_dict(const ov::Classification& c)
{
    py::dict d;
    d["label"] = std::string(ov::to_string(c.label));
    d["source"] = c.source;
    d["boundary"] = c.boundary;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Overshoot laws, moments and chain classification for stable-like processes";

    py::register_exception<ov::DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ov::UsageError>(m, "UsageError", PyExc_ValueError);
    py::register_exception<ov::ConvergenceError>(m, "ConvergenceError", PyExc_ArithmeticError);
    py::register_exception<ov::DegenerateError>(m, "DegenerateError", PyExc_RuntimeError);

    m.def("up_density", [](double a, double x, double y) { return ov::up_density(ov::StabilityIndex(a), x, y); },
          py::arg("alpha"), py::arg("x"), py::arg("y"));
    m.def("down_density", [](double b, double x, double y) { return ov::down_density(ov::StabilityIndex(b), x, y); },
          py::arg("beta"), py::arg("x"), py::arg("y"));
    m.def("up_cdf", [](double a, double x, double y) { return ov::up_cdf(ov::StabilityIndex(a), x, y); },
          py::arg("alpha"), py::arg("x"), py::arg("y"));
    m.def("down_cdf", [](double b, double x, double y) { return ov::down_cdf(ov::StabilityIndex(b), x, y); },
          py::arg("beta"), py::arg("x"), py::arg("y"));
    m.def("up_quantile", [](double a, double x, double p) { return ov::up_quantile(ov::StabilityIndex(a), x, p); },
          py::arg("alpha"), py::arg("x"), py::arg("p"));
    m.def(
        "sample_up",
        [](double a, double x, std::size_t n, std::uint64_t seed) {
            const ov::StabilityIndex alpha(a);
            ov::Stream rng = ov::Stream::for_task(seed, 0);
            std::vector<double> out(n);
            for (double& v : out) {
                v = ov::sample_up(alpha, x, rng);
            }
            return out;
        },
        py::arg("alpha"), py::arg("x"), py::arg("n"), py::arg("seed") = ov::default_master_seed);

    m.def("up_moment", [](double a, double r) { return ov::up_moment(ov::StabilityIndex(a), r).value_or_inf(); },
          py::arg("alpha"), py::arg("r"), "E[U^r]; inf outside the moment window");
    m.def(
        "product_moment",
        [](double a, double b, double r) {
            return ov::product_moment(ov::StabilityIndex(a), ov::StabilityIndex(b), r).value_or_inf();
        },
        py::arg("alpha"), py::arg("beta"), py::arg("r"));
    m.def(
        "quadrature_moment",
        [](double a, double r, std::optional<double> b) {
            ov::MomentQuery q{ov::StabilityIndex(a), std::nullopt, r};
            if (b) {
                q.beta = ov::StabilityIndex(*b);
            }
            return ov::quadrature_moment(q).value_or_inf();
        },
        py::arg("alpha"), py::arg("r"), py::arg("beta") = py::none());
    m.def("critical_exponent", [](double a, double b) {
        return ov::critical_exponent(ov::StabilityIndex(a), ov::StabilityIndex(b));
    }, py::arg("alpha"), py::arg("beta"));
    m.def("critical_moment", [](double a, double b) {
        return ov::critical_moment(ov::StabilityIndex(a), ov::StabilityIndex(b));
    }, py::arg("alpha"), py::arg("beta"));
    m.def("log_drift", [](double a, double b) { return ov::log_drift(ov::StabilityIndex(a), ov::StabilityIndex(b)); },
          py::arg("alpha"), py::arg("beta"));

    m.def(
        "classify",
        [](double a, std::optional<double> b) {
            return classification_dict(b ? ov::classify_stable_like(ov::StabilityIndex(a), ov::StabilityIndex(*b))
                                         : ov::classify_stable(ov::StabilityIndex(a)));
        },
        py::arg("alpha"), py::arg("beta") = py::none());

    m.def(
        "simulate_chain",
        [](double a, double b, double y0, std::size_t steps, std::uint64_t seed, const std::string& method) {
            ov::ChainConfig cfg{ov::StabilityIndex(a), ov::StabilityIndex(b)};
            cfg.y0 = y0;
            cfg.n_steps = steps;
            cfg.master_seed = seed;
            ov::Stream rng = ov::Stream::for_task(seed, 0);
            ov::ChainTrajectory t;
            if (method == "sequential") {
                t = ov::simulate_chain(cfg, rng);
            } else if (method == "product") {
                t = ov::simulate_product_form(cfg, rng);
            } else {
                throw ov::UsageError("method must be 'sequential' or 'product'");
            }
            py::dict d;
            d["values"] = t.values;
            d["log_values"] = t.log_values;
            return d;
        },
        py::arg("alpha"), py::arg("beta"), py::arg("y0") = 1.0, py::arg("steps") = 100,
        py::arg("seed") = ov::default_master_seed, py::arg("method") = "sequential");

    m.def(
        "orbit",
        [](const std::string& variant, const std::string& x0, std::size_t n) {
            return as_strings(ov::orbit(parse_variant(variant), ov::Rational::parse(x0), n));
        },
        py::arg("variant"), py::arg("x0"), py::arg("n"), "exact orbit as 'p/q' strings");
    m.def(
        "overshoot_orbit",
        [](const std::string& variant, const std::string& x0, std::size_t n) {
            return ov::overshoot_orbit(parse_variant(variant), ov::Rational::parse(x0), n).to_string();
        },
        py::arg("variant"), py::arg("x0"), py::arg("n"));

    m.def(
        "run_experiment",
        [](const std::string& command, const std::string& parameters_json, std::uint64_t seed,
           const std::string& format, unsigned threads) {
            ov::ExperimentConfig cfg;
            cfg.command = ov::parse_command(command);
            try {
                cfg.parameters = ov::ordered_json::parse(parameters_json);
            } catch (const ov::ordered_json::parse_error& e) {
                throw ov::UsageError(e.what());
            }
            cfg.master_seed = seed;
            cfg.format = ov::parse_format(format);
            cfg.header_timestamp = false;
            cfg.threads = threads;
            py::gil_scoped_release release;
            return ov::render_report(ov::execute(cfg), *cfg.format);
        },
        py::arg("command"), py::arg("parameters_json") = "{}", py::arg("seed") = ov::default_master_seed,
        py::arg("format") = "json", py::arg("threads") = 0u,
        "runs a CLI command and returns the rendered report body (no timestamp)");
}
