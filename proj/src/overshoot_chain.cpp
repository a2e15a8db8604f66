#include "overshoot/overshoot_chain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "overshoot/error.hpp"
#include "overshoot/moments.hpp"
#include "overshoot/overshoot_law.hpp"
#include "overshoot/parallel.hpp"
#include "overshoot/stats.hpp"

namespace overshoot {

namespace {

double exp_saturated(double log_value)
{
    return std::clamp(std::exp(log_value), std::numeric_limits<double>::min(),
                      std::numeric_limits<double>::max());
}

ChainTrajectory from_logs(std::vector<double> logs)
{
    ChainTrajectory out;
    out.values.reserve(logs.size());
    for (double l : logs) {
        out.values.push_back(exp_saturated(l));
    }
    out.log_values = std::move(logs);
    return out;
}

}  // namespace

void ChainConfig::validate() const
{
    if (!std::isfinite(y0) || !(y0 > 0.0)) {
        throw DomainError("ChainConfig: y0 must be positive (the chain lives above the barrier)");
    }
    if (n_steps < 1 || n_paths < 1) {
        throw DomainError("ChainConfig: n_steps and n_paths must be at least 1");
    }
}

ChainTrajectory simulate_chain(const ChainConfig& cfg, Stream& rng)
{
    cfg.validate();
    std::vector<double> logs;
    logs.reserve(cfg.n_steps + 1);
    double log_y = std::log(cfg.y0);
    logs.push_back(log_y);
    for (std::size_t k = 1; k <= cfg.n_steps; ++k) {
        // V ~ v_beta(Y,.) lands at -(Y * U'), U' a unit beta-overshoot.
        const double log_minus_v = log_y + sample_log_unit_overshoot(cfg.beta, rng);
        log_y = log_minus_v + sample_log_unit_overshoot(cfg.alpha, rng);
        logs.push_back(log_y);
    }
    return from_logs(std::move(logs));
}

ChainTrajectory simulate_product_form(const ChainConfig& cfg, Stream& rng)
{
    cfg.validate();
    // Y_1 = (-V~) U with V~ ~ v_beta(y0,.) = y0 * V_1 by scaling.
    const double log_minus_v_tilde = std::log(cfg.y0) + sample_log_unit_overshoot(cfg.beta, rng);
    const double log_y1 = log_minus_v_tilde + sample_log_unit_overshoot(cfg.alpha, rng);

    std::vector<double> log_factors(cfg.n_steps - 1);
    for (double& f : log_factors) {
        const double log_u = sample_log_unit_overshoot(cfg.alpha, rng);
        const double log_minus_v = sample_log_unit_overshoot(cfg.beta, rng);
        f = log_u + log_minus_v;
    }

    std::vector<double> logs;
    logs.reserve(cfg.n_steps + 1);
    logs.push_back(std::log(cfg.y0));
    logs.push_back(log_y1);
    double acc = log_y1;
    for (double f : log_factors) {
        acc += f;
        logs.push_back(acc);
    }
    return from_logs(std::move(logs));
}

std::vector<ChainTrajectory> simulate_paths(const ChainConfig& cfg, ChainMethod method, unsigned threads)
{
    cfg.validate();
    std::vector<ChainTrajectory> paths(cfg.n_paths);
    parallel_for(cfg.n_paths, threads, [&](std::size_t i) {
        Stream rng = Stream::for_task(cfg.master_seed, i);
        paths[i] = method == ChainMethod::Sequential ? simulate_chain(cfg, rng)
                                                     : simulate_product_form(cfg, rng);
    });
    return paths;
}

std::string_view to_string(LimitBehavior behavior) noexcept
{
    switch (behavior) {
    case LimitBehavior::DivergesToInfinity:
        return "DivergesToInfinity";
    case LimitBehavior::ConvergesToBarrier:
        return "ConvergesToBarrier";
    case LimitBehavior::Oscillates:
        return "Oscillates";
    }
    return "Unknown";
}

InconclusiveError::InconclusiveError(const LimitEvidence& evidence)
    : std::runtime_error("inconclusive: mean log step " + std::to_string(evidence.mean_log_step)
                         + " lies between 2 and 3 standard errors ("
                         + std::to_string(evidence.standard_error)
                         + "); increase paths or steps"),
      evidence_(evidence)
{
}

LimitEvidence estimate_limit_behavior(const ChainConfig& cfg, unsigned threads)
{
    cfg.validate();
    if (cfg.n_paths < 100) {
        throw DomainError("estimate_limit_behavior: needs at least 100 paths");
    }

    std::vector<RunningStats> per_path(cfg.n_paths);
    parallel_for(cfg.n_paths, threads, [&](std::size_t i) {
        Stream rng = Stream::for_task(cfg.master_seed, i);
        const ChainTrajectory path = simulate_chain(cfg, rng);
        RunningStats s;
        for (std::size_t k = 1; k < path.log_values.size(); ++k) {
            s.push(path.log_values[k] - path.log_values[k - 1]);
        }
        per_path[i] = s;
    });

    RunningStats total;
    for (const RunningStats& s : per_path) {
        total.merge(s);
    }
    return classify_log_steps(total, log_drift(cfg.alpha, cfg.beta));
}

LimitEvidence classify_log_steps(const RunningStats& steps, double analytic_drift)
{
    if (steps.count() < 2) {
        throw DegenerateError("classify_log_steps: need at least two increments");
    }
    LimitEvidence evidence;
    evidence.mean_log_step = steps.mean();
    evidence.standard_error = steps.standard_error();
    evidence.analytic_drift = analytic_drift;
    evidence.n_increments = steps.count();

    const double z = evidence.mean_log_step / evidence.standard_error;
    if (z >= 3.0) {
        evidence.behavior = LimitBehavior::DivergesToInfinity;
    } else if (z <= -3.0) {
        evidence.behavior = LimitBehavior::ConvergesToBarrier;
    } else if (std::fabs(z) <= 2.0) {
        evidence.behavior = LimitBehavior::Oscillates;
    } else {
        throw InconclusiveError(evidence);
    }
    return evidence;
}

RunningStats pooled_log_steps(const std::vector<ChainTrajectory>& paths)
{
    RunningStats total;
    for (const ChainTrajectory& path : paths) {
        RunningStats s;
        for (std::size_t k = 1; k < path.log_values.size(); ++k) {
            s.push(path.log_values[k] - path.log_values[k - 1]);
        }
        total.merge(s);
    }
    return total;
}

Witness transience_witness(StabilityIndex alpha, StabilityIndex beta)
{
    const double q = std::min(alpha.value(), beta.value()) / 4;
    const double m = product_moment(alpha, beta, q).value();
    const double radius = std::pow(2.0 * m, 1.0 / q);
    const double tail = 1.0 - up_cdf(alpha, -1.0, radius);
    const double bound = std::max(0.5, tail);
    if (!(bound < 1.0)) {
        throw ConvergenceError("transience_witness: tail bound is not below one");
    }
    return {q, radius, bound, m, tail};
}

Witness recurrence_witness(StabilityIndex alpha, StabilityIndex beta)
{
    const double q = -(1.0 - std::max(alpha.value(), beta.value()) / 2) / 2;
    const double m = product_moment(alpha, beta, q).value();
    const double radius = std::pow(2.0 * m, 1.0 / q);
    return {q, radius, 0.5, m, 0.0};
}

}  // namespace overshoot
