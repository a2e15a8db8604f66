#include "overshoot/classifier.hpp"

#include <cmath>

namespace overshoot {

namespace {

constexpr double boundary_tolerance = 1e-12;

constexpr std::string_view transient_source =
    "overshoot chain criterion, alpha+beta<2: negative moment of -UV below one, Y_n -> inf (transient)";
constexpr std::string_view boundary_source =
    "overshoot chain criterion, alpha+beta=2: log Y_n is a symmetric random walk (recurrent); "
    "Harris recurrence via the lambda-irreducible T-model dichotomy";
constexpr std::string_view point_source =
    "overshoot chain criterion, alpha+beta>2: positive moment of -UV below one, Y_n -> 0 "
    "(left-limit recurrent); upgraded to point recurrence for quasi-left-continuous processes";

}  // namespace

std::string_view to_string(Label label) noexcept
{
    switch (label) {
    case Label::Transient:
        return "Transient";
    case Label::HarrisRecurrent:
        return "HarrisRecurrent";
    case Label::PointRecurrent:
        return "PointRecurrent";
    }
    return "Unknown";
}

bool on_boundary(StabilityIndex alpha, StabilityIndex beta) noexcept
{
    const double sum = alpha.value() + beta.value();
    return sum == 2.0 || std::fabs(sum - 2.0) <= boundary_tolerance;
}

Classification classify_stable_like(StabilityIndex alpha, StabilityIndex beta)
{
    if (on_boundary(alpha, beta)) {
        return {Label::HarrisRecurrent, std::string(boundary_source), true};
    }
    if (alpha.value() + beta.value() < 2.0) {
        return {Label::Transient, std::string(transient_source), false};
    }
    return {Label::PointRecurrent, std::string(point_source), false};
}

Classification classify_stable(StabilityIndex alpha)
{
    return classify_stable_like(alpha, alpha);
}

bool consistent(const Classification& analytic, LimitBehavior empirical) noexcept
{
    switch (empirical) {
    case LimitBehavior::DivergesToInfinity:
        return analytic.label == Label::Transient;
    case LimitBehavior::ConvergesToBarrier:
        return analytic.label == Label::PointRecurrent;
    case LimitBehavior::Oscillates:
        return analytic.boundary;
    }
    return false;
}

McClassification mc_classify(const ChainConfig& cfg, unsigned threads)
{
    Classification analytic = classify_stable_like(cfg.alpha, cfg.beta);
    LimitEvidence evidence = estimate_limit_behavior(cfg, threads);
    const bool agree = consistent(analytic, evidence.behavior);
    return {std::move(analytic), evidence, agree};
}

}  // namespace overshoot
