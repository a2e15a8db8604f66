#include "overshoot/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "overshoot/error.hpp"

namespace overshoot {

void Accuracy::validate() const
{
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || max_iter < 1) {
        throw DomainError("Accuracy: abs_tol, rel_tol and max_iter must be positive");
    }
}

double log_gamma(double x)
{
    if (!std::isfinite(x) || x <= 0.0) {
        throw DomainError("log_gamma: argument must be positive and finite, got " + std::to_string(x));
    }
    return std::lgamma(x);
}

double beta(double a, double b)
{
    if (!std::isfinite(a) || !std::isfinite(b) || a <= 0.0 || b <= 0.0) {
        throw DomainError("beta: arguments must be positive and finite");
    }
    return std::exp(log_gamma(a) + log_gamma(b) - log_gamma(a + b));
}

namespace {

// Continued fraction for I_x(a,b) * a * B(a,b) / (x^a (1-x)^b), modified Lentz.
double beta_continued_fraction(double a, double b, double x, const Accuracy& acc)
{
    constexpr double tiny = 1e-300;
    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;

    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < tiny) {
        d = tiny;
    }
    d = 1.0 / d;
    double h = d;

    const double eps = std::min(acc.rel_tol, acc.abs_tol) * 1e-3;
    for (int m = 1; m <= acc.max_iter; ++m) {
        const double m2 = 2.0 * m;

        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < tiny) {
            d = tiny;
        }
        c = 1.0 + aa / c;
        if (std::fabs(c) < tiny) {
            c = tiny;
        }
        d = 1.0 / d;
        h *= d * c;

        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < tiny) {
            d = tiny;
        }
        c = 1.0 + aa / c;
        if (std::fabs(c) < tiny) {
            c = tiny;
        }
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) <= std::max(eps, std::numeric_limits<double>::epsilon())) {
            return h;
        }
    }
    throw ConvergenceError("reg_inc_beta: continued fraction did not converge within max_iter");
}

// x^a (1-x)^b / (a B(a,b)) times the continued fraction.
double lower_tail(double a, double b, double x, double one_minus_x, const Accuracy& acc)
{
    const double log_front = a * std::log(x) + b * std::log(one_minus_x) - std::log(a)
        - (log_gamma(a) + log_gamma(b) - log_gamma(a + b));
    return std::exp(log_front) * beta_continued_fraction(a, b, x, acc);
}

}  // namespace

double reg_inc_beta(double a, double b, double x, double one_minus_x, const Accuracy& acc)
{
    acc.validate();
    if (!std::isfinite(a) || !std::isfinite(b) || a <= 0.0 || b <= 0.0) {
        throw DomainError("reg_inc_beta: shape parameters must be positive and finite");
    }
    if (!(x >= 0.0 && x <= 1.0) || !(one_minus_x >= 0.0 && one_minus_x <= 1.0)) {
        throw DomainError("reg_inc_beta: x must lie in [0,1]");
    }
    if (x == 0.0) {
        return 0.0;
    }
    if (one_minus_x == 0.0) {
        return 1.0;
    }
    if (x > (a + 1.0) / (a + b + 2.0)) {
        return std::clamp(1.0 - lower_tail(b, a, one_minus_x, x, acc), 0.0, 1.0);
    }
    return std::clamp(lower_tail(a, b, x, one_minus_x, acc), 0.0, 1.0);
}

double reg_inc_beta(double a, double b, double x, const Accuracy& acc)
{
    if (!(x >= 0.0 && x <= 1.0)) {
        throw DomainError("reg_inc_beta: x must lie in [0,1]");
    }
    return reg_inc_beta(a, b, x, 1.0 - x, acc);
}

}  // namespace overshoot
