#include "overshoot/moments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/trigamma.hpp>

#include "overshoot/error.hpp"
#include "overshoot/overshoot_law.hpp"

namespace overshoot {

namespace {

constexpr double half_pi = std::numbers::pi / 2;

double sin_ratio(double a, double r)
{
    return std::sin(a * half_pi) / std::sin((a - 2.0 * r) * half_pi);
}

struct Integral {
    double value;
    double error;
};

// Integral of f over (lo, hi) with Gauss-Kronrod 31, adaptive bisection.
template <typename F>
Integral integrate(F f, double lo, double hi, const Accuracy& acc)
{
    const unsigned depth = static_cast<unsigned>(std::clamp(acc.max_iter, 1, 20));
    double error = 0.0;
    double l1 = 0.0;
    const double value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        f, lo, hi, depth, acc.rel_tol, &error, &l1);
    return {value, error};
}

// E(U^r) for U ~ u_alpha(-1,.), by quadrature.
//
// With z = y/(1+y) the integrand g(z) = y^r u(-1,y) dy/dz behaves like z^p
// near 0 and (1-z)^q near 1, p = r - alpha/2, q = alpha/2 - r - 1, both > -1
// inside the window. Each half of (0,1) is mapped by a power change of
// variable that absorbs the endpoint singularity: z = t^(1/(p+1)) on (0,1/2]
// and 1-z = t^(1/(q+1)) on [1/2,1).
double unit_moment_by_quadrature(StabilityIndex alpha, double r, const Accuracy& acc)
{
    const double a = alpha.value();
    const double p = r - a / 2;
    const double q = a / 2 - r - 1.0;

    // log of y^r u(-1,y) dy/dz, from log z and log(1-z); y itself may overflow.
    auto log_integrand = [&](double log_z, double log_w) {
        const double log_y = log_z - log_w;
        return r * log_y + log_up_density(alpha, 0.0, log_y) - 2.0 * log_w;
    };

    const double kp = 1.0 / (p + 1.0);
    const double kq = 1.0 / (q + 1.0);
    auto left = [&](double t) {
        if (!(t > 0.0)) {
            return 0.0;
        }
        const double log_z = kp * std::log(t);
        return std::exp(log_integrand(log_z, std::log1p(-std::exp(log_z))) + std::log(kp) + (kp - 1.0) * std::log(t));
    };
    auto right = [&](double t) {
        if (!(t > 0.0)) {
            return 0.0;
        }
        const double log_w = kq * std::log(t);
        return std::exp(log_integrand(std::log1p(-std::exp(log_w)), log_w) + std::log(kq) + (kq - 1.0) * std::log(t));
    };

    const Integral lower = integrate(left, 0.0, std::pow(0.5, p + 1.0), acc);
    const Integral upper = integrate(right, 0.0, std::pow(0.5, q + 1.0), acc);
    const double value = lower.value + upper.value;
    const double error = lower.error + upper.error;
    if (!std::isfinite(value) || error > std::max(acc.abs_tol, acc.rel_tol * std::fabs(value))) {
        throw ConvergenceError("quadrature_moment: adaptive quadrature missed the requested accuracy");
    }
    return value;
}

}  // namespace

MomentValue MomentValue::finite(double value)
{
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw DomainError("MomentValue: finite moments must be positive");
    }
    MomentValue m;
    m.finite_ = true;
    m.value_ = value;
    return m;
}

double MomentValue::value() const
{
    if (!finite_) {
        throw std::logic_error("MomentValue: moment is infinite");
    }
    return value_;
}

double MomentValue::value_or_inf() const noexcept
{
    return finite_ ? value_ : std::numeric_limits<double>::infinity();
}

MomentWindow up_moment_window(StabilityIndex alpha) noexcept
{
    return {alpha.value() / 2 - 1.0, alpha.value() / 2};
}

MomentWindow product_moment_window(StabilityIndex alpha, StabilityIndex beta) noexcept
{
    const double hi = std::max(alpha.value(), beta.value());
    const double lo = std::min(alpha.value(), beta.value());
    return {hi / 2 - 1.0, lo / 2};
}

MomentValue up_moment(StabilityIndex alpha, double r)
{
    if (!up_moment_window(alpha).contains(r)) {
        return MomentValue::infinite();
    }
    return MomentValue::finite(sin_ratio(alpha.value(), r));
}

MomentValue product_moment(StabilityIndex alpha, StabilityIndex beta, double r)
{
    if (!product_moment_window(alpha, beta).contains(r)) {
        return MomentValue::infinite();
    }
    const double a = alpha.value();
    const double b = beta.value();
    const double num = std::sin(a * half_pi) * std::sin(b * half_pi);
    const double den = std::sin((a - 2.0 * r) * half_pi) * std::sin((b - 2.0 * r) * half_pi);
    return MomentValue::finite(num / den);
}

double critical_exponent(StabilityIndex alpha, StabilityIndex beta) noexcept
{
    return (alpha.value() + beta.value()) / 4 - 0.5;
}

double critical_moment(StabilityIndex alpha, StabilityIndex beta) noexcept
{
    const double gap = 2.0 - alpha.value() - beta.value();
    const double s = std::sin(gap * std::numbers::pi / 4);
    const double c = std::cos((alpha.value() - beta.value()) * std::numbers::pi / 4);
    return 1.0 - (s * s) / (c * c);
}

double log_drift(StabilityIndex alpha, StabilityIndex beta) noexcept
{
    // cot A + cot B = sin(A + B) / (sin A sin B), and sin(A + B) = sin((2-a-b) pi/2).
    const double a = alpha.value();
    const double b = beta.value();
    return std::numbers::pi * std::sin((2.0 - a - b) * half_pi)
        / (std::sin(a * half_pi) * std::sin(b * half_pi));
}

double log_step_variance(StabilityIndex alpha, StabilityIndex beta)
{
    using boost::math::trigamma;
    const double a = alpha.value() / 2;
    const double b = beta.value() / 2;
    return trigamma(1.0 - a) + trigamma(a) + trigamma(1.0 - b) + trigamma(b);
}

MomentValue quadrature_moment(const MomentQuery& query, const Accuracy& acc)
{
    acc.validate();
    if (!query.beta) {
        if (!up_moment_window(query.alpha).contains(query.r)) {
            return MomentValue::infinite();
        }
        return MomentValue::finite(unit_moment_by_quadrature(query.alpha, query.r, acc));
    }
    if (!product_moment_window(query.alpha, *query.beta).contains(query.r)) {
        return MomentValue::infinite();
    }
    // -V ~ u_beta(-1,.), so the product density factorises.
    const double up = unit_moment_by_quadrature(query.alpha, query.r, acc);
    const double down = unit_moment_by_quadrature(*query.beta, query.r, acc);
    return MomentValue::finite(up * down);
}

}  // namespace overshoot
