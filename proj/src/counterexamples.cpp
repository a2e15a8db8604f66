#include "overshoot/counterexamples.hpp"

#include <algorithm>
#include <cmath>

#include "overshoot/error.hpp"

namespace overshoot {

namespace {

template <typename T>
T step_impl(Variant variant, const T& x, const T& zero, const T& one)
{
    if (x == zero) {
        return one;
    }
    const T magnitude = x < zero ? zero - x : x;
    const T sign = variant == Variant::One ? one : zero - one;
    if (magnitude > one) {
        // One: 1/x, Two: -1/x
        return sign * (one / x);
    }
    // One: -(1+|x|)/x, Two: (1+|x|)/x
    return (zero - sign) * ((one + magnitude) / x);
}

}  // namespace

Rational step(Variant variant, const Rational& x)
{
    return step_impl(variant, x, Rational(0), Rational(1));
}

double step(Variant variant, double x)
{
    return step_impl(variant, x, 0.0, 1.0);
}

std::vector<Rational> orbit(Variant variant, const Rational& x0, std::size_t n)
{
    std::vector<Rational> out;
    out.reserve(n + 1);
    out.push_back(x0);
    for (std::size_t k = 0; k < n; ++k) {
        out.push_back(step(variant, out.back()));
    }
    return out;
}

Rational overshoot_orbit(Variant variant, const Rational& x0, std::size_t n)
{
    const auto count = static_cast<std::int64_t>(n);
    if (variant == Variant::One) {
        if (!(x0 > Rational(0) && x0 <= Rational(1))) {
            throw DomainError("overshoot_orbit: variant One needs x0 in (0,1]");
        }
        if (n == 0) {
            return x0;
        }
        return Rational(1) / x0 + Rational(2 * count);
    }
    if (!(x0 > Rational(1))) {
        throw DomainError("overshoot_orbit: variant Two needs x0 > 1");
    }
    if (n == 0) {
        return x0;
    }
    return Rational(1) / (x0 + Rational(2 * count - 1));
}

std::vector<Rational> overshoots_by_iteration(Variant variant, const Rational& x0, std::size_t n)
{
    if (!(x0 > Rational(0))) {
        throw DomainError("overshoots_by_iteration: x0 must lie above the barrier 0");
    }
    std::vector<Rational> out{x0};
    Rational x = x0;
    bool below = false;
    while (out.size() <= n) {
        x = step(variant, x);
        if (x <= Rational(0)) {
            below = true;
        } else if (below) {
            out.push_back(x);
            below = false;
        }
    }
    return out;
}

Rational SubordinatedPath::at(double t) const
{
    if (times.empty() || t < 0.0) {
        throw DomainError("SubordinatedPath::at: time must be non-negative");
    }
    const auto it = std::upper_bound(times.begin(), times.end(), t);
    return states[static_cast<std::size_t>(it - times.begin()) - 1];
}

SubordinatedPath subordinate(Variant variant, const Rational& x0, double rate, double horizon, Stream& rng)
{
    if (!std::isfinite(rate) || !(rate > 0.0) || !std::isfinite(horizon) || !(horizon > 0.0)) {
        throw DomainError("subordinate: rate and horizon must be positive");
    }
    SubordinatedPath path;
    path.times.push_back(0.0);
    path.states.push_back(x0);
    double t = rng.exponential() / rate;
    while (t <= horizon) {
        path.times.push_back(t);
        path.states.push_back(step(variant, path.states.back()));
        t += rng.exponential() / rate;
    }
    return path;
}

}  // namespace overshoot
