#pragma once

#include "overshoot/random.hpp"
#include "overshoot/specfun.hpp"
#include "overshoot/stability_index.hpp"

// First-passage overshoot laws of the symmetric alpha-stable process over a
// barrier fixed at 0. Callers with a barrier b translate: start x -> x - b.
//
//   up:   start x < 0, overshoot Y in [0, inf),
//         u(x,y) = sin(a pi/2)/pi * 1/(y-x) * (-x/y)^(a/2)
//   down: start x > 0, overshoot Y in (-inf, 0], v(x,y) = u(-x,-y)
//
// Under z = y/(y-x) the up-overshoot is Beta(1 - a/2, a/2) distributed, which
// gives the closed-form CDF and the sampler.

namespace overshoot {

enum class Direction { Up, Down };

/// Parameters of one first-passage overshoot distribution.
struct OvershootLaw {
    StabilityIndex index;
    double start;
    double barrier;
    Direction direction;

    /// Throws DomainError unless start lies on the correct side of barrier.
    void validate() const;

    /// Density at y, after translating to barrier 0.
    double density(double y) const;
    double cdf(double y) const;
};

/// Overshoot density u_alpha(x,y) over barrier 0 from x < 0. Zero for y <= 0
/// (the density diverges like y^(-alpha/2) as y -> 0+).
double up_density(StabilityIndex alpha, double x, double y);

/// log u_alpha(x,y) as a function of log(-x) and log(y), usable where x or y
/// over- or underflow a double.
double log_up_density(StabilityIndex alpha, double log_minus_x, double log_y);

/// Down-overshoot density v_beta(x,y) from x > 0. Zero for y >= 0.
double down_density(StabilityIndex beta, double x, double y);

/// P(Y <= y) for the up-overshoot from x < 0: I_{y/(y-x)}(1-alpha/2, alpha/2).
double up_cdf(StabilityIndex alpha, double x, double y, const Accuracy& acc = {});

/// P(Y <= y) for the down-overshoot from x > 0.
double down_cdf(StabilityIndex beta, double x, double y, const Accuracy& acc = {});

/// Smallest y with up_cdf(alpha, x, y) = p, p in (0,1).
double up_quantile(StabilityIndex alpha, double x, double p, const Accuracy& acc = {});

/// log(Z/(1-Z)) for Z ~ Beta(1 - alpha/2, alpha/2): the log of a unit
/// up-overshoot U ~ u_alpha(-1,.). Computed from two log-Gamma variates so it
/// stays finite for shapes down to 0.025.
double sample_log_unit_overshoot(StabilityIndex alpha, Stream& rng);

/// Draws from u_alpha(x,.): (-x) * U with U a unit overshoot. Strictly
/// positive; results beyond the double range saturate at its bounds.
double sample_up(StabilityIndex alpha, double x, Stream& rng);

/// Draws from v_beta(x,.): -x * U with U ~ u_beta(-1,.). Strictly negative.
double sample_down(StabilityIndex beta, double x, Stream& rng);

/// log of a Gamma(shape, 1) variate (Marsaglia-Tsang; shapes below one use
/// G_a = G_{a+1} U^(1/a), applied in log space).
double sample_log_gamma(double shape, Stream& rng);

}  // namespace overshoot
