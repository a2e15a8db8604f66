#pragma once

#include <optional>

#include "overshoot/specfun.hpp"
#include "overshoot/stability_index.hpp"

namespace overshoot {

/// A moment of a positive random variable: either a finite positive number
/// or +infinity. Divergence is a value here, not an error.
class MomentValue {
public:
    static MomentValue finite(double value);
    static MomentValue infinite() noexcept { return MomentValue(); }

    bool is_finite() const noexcept { return finite_; }
    /// Throws std::logic_error for an infinite moment.
    double value() const;
    /// The value, or +inf.
    double value_or_inf() const noexcept;

    friend bool operator==(const MomentValue&, const MomentValue&) = default;

private:
    MomentValue() = default;
    bool finite_ = false;
    double value_ = 0.0;
};

struct MomentQuery {
    StabilityIndex alpha;
    std::optional<StabilityIndex> beta;
    double r;
};

/// Open exponent window on which E(U^r) is finite, U ~ u_alpha(-1,.).
struct MomentWindow {
    double lower;
    double upper;

    /// Strict: the window edges themselves diverge.
    bool contains(double r) const noexcept { return lower < r && r < upper; }
};

MomentWindow up_moment_window(StabilityIndex alpha) noexcept;
MomentWindow product_moment_window(StabilityIndex alpha, StabilityIndex beta) noexcept;

/// E(U^r) = sin(alpha pi/2) / sin((alpha - 2r) pi/2) on the window, else infinite.
MomentValue up_moment(StabilityIndex alpha, double r);

/// E((-VU)^r) with U ~ u_alpha(-1,.) and V ~ v_beta(1,.) independent.
MomentValue product_moment(StabilityIndex alpha, StabilityIndex beta, double r);

/// (alpha + beta)/4 - 1/2: the exponent at which the product moment dips below one.
double critical_exponent(StabilityIndex alpha, StabilityIndex beta) noexcept;

/// E((-VU)^r*) = 1 - (1 + cos((alpha+beta) pi/2)) / (1 + cos((alpha-beta) pi/2)).
///
/// Evaluated as 1 - sin^2((2-alpha-beta) pi/4) / cos^2((alpha-beta) pi/4) so
/// the value is exactly one when alpha + beta == 2.
double critical_moment(StabilityIndex alpha, StabilityIndex beta) noexcept;

/// E log(-UV) = pi (cot(alpha pi/2) + cot(beta pi/2)), the mean step of the
/// log overshoot chain. Positive iff alpha + beta < 2, zero exactly at 2.
double log_drift(StabilityIndex alpha, StabilityIndex beta) noexcept;

/// Variance of log(-UV): psi'(1-a/2) + psi'(a/2) + psi'(1-b/2) + psi'(b/2).
double log_step_variance(StabilityIndex alpha, StabilityIndex beta);

/// Moment by adaptive Gauss-Kronrod quadrature of y^r u(-1,y), independent of
/// the closed forms above. With beta set, the product moment is the double
/// integral over v_beta(1,.) x u_alpha(-1,.), which factorises.
///
/// Divergence is decided by the window check, never numerically.
/// Throws ConvergenceError when the error estimate misses `acc`.
MomentValue quadrature_moment(const MomentQuery& query, const Accuracy& acc = {});

}  // namespace overshoot
