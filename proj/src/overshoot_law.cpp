#include "overshoot/overshoot_law.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "overshoot/error.hpp"

namespace overshoot {

namespace {

void require_negative(double x, const char* what)
{
    if (!std::isfinite(x) || !(x < 0.0)) {
        throw DomainError(std::string(what) + ": start must be finite and below the barrier");
    }
}

void require_positive(double x, const char* what)
{
    if (!std::isfinite(x) || !(x > 0.0)) {
        throw DomainError(std::string(what) + ": start must be finite and above the barrier");
    }
}

// Shapes of the Beta law of z = y/(y-x).
double lower_shape(StabilityIndex alpha) { return 1.0 - 0.5 * alpha.value(); }
double upper_shape(StabilityIndex alpha) { return 0.5 * alpha.value(); }

double saturate_positive(double v)
{
    constexpr double lo = std::numeric_limits<double>::min();
    constexpr double hi = std::numeric_limits<double>::max();
    if (v < lo) {
        return lo;
    }
    return v > hi ? hi : v;
}

}  // namespace

void OvershootLaw::validate() const
{
    if (!std::isfinite(start) || !std::isfinite(barrier)) {
        throw DomainError("OvershootLaw: start and barrier must be finite");
    }
    if (direction == Direction::Up && !(start < barrier)) {
        throw DomainError("OvershootLaw: an upward passage needs start < barrier");
    }
    if (direction == Direction::Down && !(start > barrier)) {
        throw DomainError("OvershootLaw: a downward passage needs start > barrier");
    }
}

double OvershootLaw::density(double y) const
{
    validate();
    return direction == Direction::Up ? up_density(index, start - barrier, y - barrier)
                                      : down_density(index, start - barrier, y - barrier);
}

double OvershootLaw::cdf(double y) const
{
    validate();
    return direction == Direction::Up ? up_cdf(index, start - barrier, y - barrier)
                                      : down_cdf(index, start - barrier, y - barrier);
}

double up_density(StabilityIndex alpha, double x, double y)
{
    require_negative(x, "up_density");
    if (!(y > 0.0)) {
        return 0.0;
    }
    const double a = alpha.value();
    return std::sin(a * std::numbers::pi / 2) / std::numbers::pi / (y - x)
        * std::pow(-x / y, a / 2);
}

double log_up_density(StabilityIndex alpha, double log_minus_x, double log_y)
{
    if (std::isnan(log_minus_x) || std::isnan(log_y)) {
        throw DomainError("log_up_density: NaN argument");
    }
    const double a = alpha.value();
    const double hi = std::max(log_minus_x, log_y);
    const double log_span = hi + std::log1p(std::exp(std::min(log_minus_x, log_y) - hi));
    return std::log(std::sin(a * std::numbers::pi / 2) / std::numbers::pi) - log_span
        + a / 2 * (log_minus_x - log_y);
}

double down_density(StabilityIndex beta, double x, double y)
{
    require_positive(x, "down_density");
    return up_density(beta, -x, -y);
}

double up_cdf(StabilityIndex alpha, double x, double y, const Accuracy& acc)
{
    require_negative(x, "up_cdf");
    if (!(y > 0.0)) {
        return 0.0;
    }
    if (std::isinf(y)) {
        return 1.0;
    }
    const double span = y - x;
    return reg_inc_beta(lower_shape(alpha), upper_shape(alpha), y / span, -x / span, acc);
}

double down_cdf(StabilityIndex beta, double x, double y, const Accuracy& acc)
{
    require_positive(x, "down_cdf");
    if (!(y < 0.0)) {
        return 1.0;
    }
    // P(Y <= y) = P(-Y >= -y) for the mirrored up-overshoot.
    return 1.0 - up_cdf(beta, -x, -y, acc);
}

double up_quantile(StabilityIndex alpha, double x, double p, const Accuracy& acc)
{
    require_negative(x, "up_quantile");
    if (!(p > 0.0 && p < 1.0)) {
        throw DomainError("up_quantile: p must lie in (0,1)");
    }
    acc.validate();

    const double a = lower_shape(alpha);
    const double b = upper_shape(alpha);
    // Work in s = log(y/|x|), the log-odds of the Beta variable z.
    auto cdf_at = [&](double s) {
        return reg_inc_beta(a, b, 1.0 / (1.0 + std::exp(-s)), 1.0 / (1.0 + std::exp(s)), acc);
    };

    constexpr double s_limit = 700.0;
    double lo = -1.0;
    double hi = 1.0;
    while (cdf_at(lo) > p) {
        lo *= 2.0;
        if (lo < -s_limit) {
            throw ConvergenceError("up_quantile: p below the representable lower tail");
        }
    }
    while (cdf_at(hi) < p) {
        hi *= 2.0;
        if (hi > s_limit) {
            throw ConvergenceError("up_quantile: p beyond the representable upper tail");
        }
    }

    double best = 0.5 * (lo + hi);
    double best_err = std::numeric_limits<double>::infinity();
    for (int iter = 0; iter < acc.max_iter; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double f = cdf_at(mid);
        const double err = std::fabs(f - p);
        if (err < best_err) {
            best = mid;
            best_err = err;
        }
        if (err <= 0.01 * acc.abs_tol || mid <= lo || mid >= hi) {
            break;
        }
        (f < p ? lo : hi) = mid;
    }
    if (best_err > 1e-10) {
        throw ConvergenceError("up_quantile: bisection did not reach the requested accuracy");
    }
    return -x * std::exp(best);
}

double sample_log_gamma(double shape, Stream& rng)
{
    if (shape < 1.0) {
        return sample_log_gamma(shape + 1.0, rng) + std::log(rng.uniform()) / shape;
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double z;
        double v;
        do {
            z = rng.normal();
            v = 1.0 + c * z;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = rng.uniform();
        if (std::log(u) < 0.5 * z * z + d - d * v + d * std::log(v)) {
            return std::log(d) + std::log(v);
        }
    }
}

double sample_log_unit_overshoot(StabilityIndex alpha, Stream& rng)
{
    const double g1 = sample_log_gamma(lower_shape(alpha), rng);
    const double g2 = sample_log_gamma(upper_shape(alpha), rng);
    return g1 - g2;
}

double sample_up(StabilityIndex alpha, double x, Stream& rng)
{
    require_negative(x, "sample_up");
    return saturate_positive(std::exp(std::log(-x) + sample_log_unit_overshoot(alpha, rng)));
}

double sample_down(StabilityIndex beta, double x, Stream& rng)
{
    require_positive(x, "sample_down");
    return -saturate_positive(std::exp(std::log(x) + sample_log_unit_overshoot(beta, rng)));
}

}  // namespace overshoot
