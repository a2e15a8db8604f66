#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "overshoot/random.hpp"
#include "overshoot/stability_index.hpp"

// Brute-force corroboration of the overshoot laws: Euler walks with exact
// symmetric stable increments. The walk overshoots a barrier slightly
// differently from the continuous-time process; the bias vanishes as dt -> 0.

namespace overshoot {

struct PathConfig {
    StabilityIndex alpha;
    double x0 = -1.0;
    double dt = 1e-4;
    double max_time = 100.0;  ///< default horizon 1e6 * dt
    std::size_t n_paths = 1;
    std::uint64_t master_seed = 0;

    void validate() const;
    /// Number of Euler steps before the horizon.
    std::uint64_t max_steps() const;
};

struct FirstPassageSample {
    double overshoot = 0.0;       ///< first non-negative position; 0 when censored
    std::uint64_t crossing_step = 0;
    bool censored = false;
};

/// Symmetric stable increments with characteristic function exp(-dt |xi|^alpha),
/// by the Chambers-Mallows-Stuck transform (alpha = 1 uses the Cauchy branch
/// tan of a uniform angle).
class StableIncrement {
public:
    StableIncrement(StabilityIndex alpha, double dt);
    double operator()(Stream& rng) const;

private:
    double alpha_;
    double inv_alpha_;
    double one_minus_alpha_;
    double scale_;
    bool cauchy_;
};

double sample_stable_increment(StabilityIndex alpha, double dt, Stream& rng);

/// Walks X_{k+1} = X_k + increment from cfg.x0 < 0 until X >= 0 or the
/// horizon; the barrier sits at 0.
FirstPassageSample simulate_first_passage_up(const PathConfig& cfg, Stream& rng);

struct EcdfRow {
    double p;     ///< reference probability level
    double y;     ///< up_quantile(alpha, x0, p)
    double ecdf;  ///< fraction of uncensored overshoots <= y
    double cdf;   ///< closed form at y (equals p up to root-finding error)
};

struct OvershootReport {
    std::size_t n_paths = 0;
    std::size_t n_censored = 0;
    std::size_t n_at_barrier = 0;  ///< uncensored overshoots exactly equal to 0
    double censored_fraction = 0.0;
    double ks = 0.0;               ///< uncensored ECDF vs closed-form CDF
    std::vector<double> overshoots;  ///< uncensored, in path order
    std::vector<EcdfRow> table;
};

/// Runs cfg.n_paths first-passage walks (path i on Stream::for_task(seed, i))
/// and compares the overshoots with the closed-form law.
/// Throws DegenerateError when every path is censored.
OvershootReport empirical_overshoot_report(const PathConfig& cfg, unsigned threads = 0);

/// Euler path of the stable-like surrogate: the increment at state x uses
/// index alpha for x < b and beta for x >= b. Qualitative only; the process
/// itself has no known exact construction. Returns X_0..X_n, n = cfg.max_steps().
std::vector<double> simulate_stable_like_path(StabilityIndex alpha, StabilityIndex beta, double b,
                                              double x0, const PathConfig& cfg, Stream& rng);

}  // namespace overshoot
