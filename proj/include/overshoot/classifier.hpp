#pragma once

#include <string>
#include <string_view>

#include "overshoot/overshoot_chain.hpp"
#include "overshoot/stability_index.hpp"

namespace overshoot {

enum class Label { Transient, HarrisRecurrent, PointRecurrent };

std::string_view to_string(Label label) noexcept;

/// Recurrence/transience verdict for the barrier of a two-sided stable-like
/// process, with the result it rests on recorded in `source`.
struct Classification {
    Label label;
    std::string source;
    bool boundary;  ///< alpha + beta == 2 (within 1e-12)

    friend bool operator==(const Classification&, const Classification&) = default;
};

/// |alpha + beta - 2| <= 1e-12.
bool on_boundary(StabilityIndex alpha, StabilityIndex beta) noexcept;

/// alpha + beta < 2: transient. alpha + beta == 2: Harris recurrent (boundary).
/// alpha + beta > 2: the barrier is left-limit recurrent; for a
/// quasi-left-continuous process that upgrades to point recurrence.
Classification classify_stable_like(StabilityIndex alpha, StabilityIndex beta);

/// Symmetric alpha-stable process: classify_stable_like(alpha, alpha).
Classification classify_stable(StabilityIndex alpha);

/// Monte Carlo cross-check of classify_stable_like.
struct McClassification {
    Classification analytic;
    LimitEvidence evidence;
    bool agree;
};

/// DivergesToInfinity matches Transient, ConvergesToBarrier matches
/// PointRecurrent, Oscillates matches the boundary. Propagates
/// InconclusiveError.
McClassification mc_classify(const ChainConfig& cfg, unsigned threads = 0);

/// Whether an empirical limit behaviour is the one the analytic label predicts.
bool consistent(const Classification& analytic, LimitBehavior empirical) noexcept;

}  // namespace overshoot
