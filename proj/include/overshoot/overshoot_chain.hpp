#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "overshoot/random.hpp"
#include "overshoot/stability_index.hpp"

// The overshoot chain Y_n of a process that is alpha-stable below the
// barrier 0 and beta-stable above it: Y_n is the position right after the
// n-th return into (0, inf). One step is a down-overshoot V ~ v_beta(Y,.)
// followed by an up-overshoot Y' ~ u_alpha(V,.), so
//
//   Y_n = Y_1 * prod_{i<n} (-U_i V_i),  U_i ~ u_alpha(-1,.), V_i ~ v_beta(1,.)
//
// and log Y_n is a random walk with mean step log_drift(alpha, beta).

namespace overshoot {

struct ChainConfig {
    StabilityIndex alpha;  ///< law below the barrier
    StabilityIndex beta;   ///< law above the barrier
    double y0 = 1.0;
    std::size_t n_steps = 1;
    std::size_t n_paths = 1;
    std::uint64_t master_seed = 0;

    void validate() const;
};

/// Y_0..Y_n with their logs. The chain is simulated in log space, so
/// log_values are exact; values saturate at the bounds of the positive
/// double range once exp(log Y) is not representable.
struct ChainTrajectory {
    std::vector<double> values;
    std::vector<double> log_values;
};

enum class ChainMethod { Sequential, ProductForm };

/// One path, stepping down-overshoot then up-overshoot from the current state.
ChainTrajectory simulate_chain(const ChainConfig& cfg, Stream& rng);

/// One path via the product representation: Y_1 from the first down/up pair,
/// then i.i.d. factors -U_i V_i (U drawn before V).
ChainTrajectory simulate_product_form(const ChainConfig& cfg, Stream& rng);

/// cfg.n_paths paths; path i uses Stream::for_task(cfg.master_seed, i).
std::vector<ChainTrajectory> simulate_paths(const ChainConfig& cfg, ChainMethod method,
                                            unsigned threads = 0);

enum class LimitBehavior { DivergesToInfinity, ConvergesToBarrier, Oscillates };

std::string_view to_string(LimitBehavior behavior) noexcept;

/// Sign-test evidence for the limit of Y_n.
struct LimitEvidence {
    LimitBehavior behavior = LimitBehavior::Oscillates;
    double mean_log_step = 0.0;
    double standard_error = 0.0;
    double analytic_drift = 0.0;
    std::size_t n_increments = 0;
};

/// The mean log step lies between 2 and 3 standard errors from zero; more
/// paths or steps are needed before a label can be given.
class InconclusiveError : public std::runtime_error {
public:
    explicit InconclusiveError(const LimitEvidence& evidence);
    const LimitEvidence& evidence() const noexcept { return evidence_; }

private:
    LimitEvidence evidence_;
};

class RunningStats;

/// Applies the 2/3 standard-error sign test to pooled log increments.
/// Throws InconclusiveError in the gap between the two thresholds.
LimitEvidence classify_log_steps(const RunningStats& steps, double analytic_drift);

/// Pooled log increments log Y_k - log Y_{k-1}, k = 1..n, of every path.
RunningStats pooled_log_steps(const std::vector<ChainTrajectory>& paths);

/// Classifies lim Y_n from n_paths x n_steps log increments of the sequential
/// chain: mean > 3 SE diverges, mean < -3 SE converges, |mean| <= 2 SE
/// oscillates; otherwise throws InconclusiveError. Requires n_paths >= 100.
LimitEvidence estimate_limit_behavior(const ChainConfig& cfg, unsigned threads = 0);

/// A computable certificate for one of the two local estimates on the
/// overshoot chain: a test exponent q, a radius (R or R') and the
/// constant c < 1 bounding the relevant one-step probability.
struct Witness {
    double q;
    double radius;
    double bound;
    double product_moment;  ///< E((-UV)^q)
    double tail;            ///< 1 - up_cdf(alpha,-1,R) for the transient side, 0 otherwise
};

/// q = min(alpha,beta)/4, R = (2 E((-UV)^q))^(1/q):
/// sup_{y in (0,1]} P_y(Y_1 > R) <= 1/2 and sup_{y in [-1,0)} P_y(overshoot > R)
/// = 1 - up_cdf(alpha,-1,R). bound is the larger of the two.
Witness transience_witness(StabilityIndex alpha, StabilityIndex beta);

/// q = -(1 - max(alpha,beta)/2)/2, R' = (2 E((-UV)^q))^(1/q):
/// sup_{y >= 1} P_y(Y_1 < R') <= 1/2.
Witness recurrence_witness(StabilityIndex alpha, StabilityIndex beta);

}  // namespace overshoot
