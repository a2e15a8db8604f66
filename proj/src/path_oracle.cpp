#include "overshoot/path_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "overshoot/error.hpp"
#include "overshoot/overshoot_law.hpp"
#include "overshoot/parallel.hpp"
#include "overshoot/stats.hpp"

namespace overshoot {

void PathConfig::validate() const
{
    if (!std::isfinite(x0) || !std::isfinite(dt) || !std::isfinite(max_time)) {
        throw DomainError("PathConfig: x0, dt and max_time must be finite");
    }
    if (!(dt > 0.0) || !(max_time > 0.0) || dt > max_time) {
        throw DomainError("PathConfig: need 0 < dt <= max_time");
    }
    if (n_paths < 1) {
        throw DomainError("PathConfig: n_paths must be at least 1");
    }
}

std::uint64_t PathConfig::max_steps() const
{
    // Round-off in max_time/dt must not drop the last step.
    return static_cast<std::uint64_t>(std::floor(max_time / dt * (1.0 + 1e-12)));
}

StableIncrement::StableIncrement(StabilityIndex alpha, double dt)
    : alpha_(alpha.value()),
      inv_alpha_(1.0 / alpha.value()),
      one_minus_alpha_(1.0 - alpha.value()),
      scale_(std::pow(dt, 1.0 / alpha.value())),
      cauchy_(alpha.value() == 1.0)
{
    if (!std::isfinite(dt) || !(dt > 0.0)) {
        throw DomainError("StableIncrement: dt must be positive");
    }
}

double StableIncrement::operator()(Stream& rng) const
{
    const double angle = std::numbers::pi * (rng.uniform() - 0.5);
    if (cauchy_) {
        return scale_ * std::tan(angle);
    }
    const double w = rng.exponential();
    const double log_part =
        (one_minus_alpha_ * std::log(std::cos(one_minus_alpha_ * angle) / w) - std::log(std::cos(angle)))
        * inv_alpha_;
    return scale_ * std::sin(alpha_ * angle) * std::exp(log_part);
}

double sample_stable_increment(StabilityIndex alpha, double dt, Stream& rng)
{
    return StableIncrement(alpha, dt)(rng);
}

FirstPassageSample simulate_first_passage_up(const PathConfig& cfg, Stream& rng)
{
    cfg.validate();
    if (!(cfg.x0 < 0.0)) {
        throw DomainError("simulate_first_passage_up: x0 must lie below the barrier 0");
    }
    const StableIncrement increment(cfg.alpha, cfg.dt);
    const std::uint64_t steps = cfg.max_steps();
    double x = cfg.x0;
    for (std::uint64_t k = 1; k <= steps; ++k) {
        x += increment(rng);
        if (x >= 0.0) {
            return {x, k, false};
        }
    }
    return {0.0, steps, true};
}

OvershootReport empirical_overshoot_report(const PathConfig& cfg, unsigned threads)
{
    cfg.validate();
    std::vector<FirstPassageSample> samples(cfg.n_paths);
    parallel_for(cfg.n_paths, threads, [&](std::size_t i) {
        Stream rng = Stream::for_task(cfg.master_seed, i);
        samples[i] = simulate_first_passage_up(cfg, rng);
    });

    OvershootReport report;
    report.n_paths = cfg.n_paths;
    for (const FirstPassageSample& s : samples) {
        if (s.censored) {
            ++report.n_censored;
            continue;
        }
        if (s.overshoot == 0.0) {
            ++report.n_at_barrier;
        }
        report.overshoots.push_back(s.overshoot);
    }
    report.censored_fraction = static_cast<double>(report.n_censored) / static_cast<double>(cfg.n_paths);
    if (report.overshoots.empty()) {
        throw DegenerateError("empirical_overshoot_report: every path was censored");
    }

    auto cdf = [&](double y) { return up_cdf(cfg.alpha, cfg.x0, y); };
    report.ks = ks_statistic(report.overshoots, cdf);

    std::vector<double> sorted = report.overshoots;
    std::sort(sorted.begin(), sorted.end());
    for (int k = 1; k <= 19; ++k) {
        const double p = 0.05 * k;
        const double y = up_quantile(cfg.alpha, cfg.x0, p);
        report.table.push_back({p, y, empirical_cdf(sorted, y), cdf(y)});
    }
    return report;
}

std::vector<double> simulate_stable_like_path(StabilityIndex alpha, StabilityIndex beta, double b,
                                              double x0, const PathConfig& cfg, Stream& rng)
{
    cfg.validate();
    if (!std::isfinite(b) || !std::isfinite(x0)) {
        throw DomainError("simulate_stable_like_path: barrier and start must be finite");
    }
    const StableIncrement below(alpha, cfg.dt);
    const StableIncrement above(beta, cfg.dt);
    const std::uint64_t steps = cfg.max_steps();
    std::vector<double> path;
    path.reserve(steps + 1);
    double x = x0;
    path.push_back(x);
    for (std::uint64_t k = 0; k < steps; ++k) {
        x += x < b ? below(rng) : above(rng);
        path.push_back(x);
    }
    return path;
}

}  // namespace overshoot
