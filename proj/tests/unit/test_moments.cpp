#include <doctest.h>

#include <cmath>
#include <numbers>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "overshoot/moments.hpp"
#include "overshoot/overshoot_law.hpp"
#include "overshoot/random.hpp"
#include "overshoot/stats.hpp"

using namespace overshoot;

namespace {

constexpr double pi = std::numbers::pi;

StabilityIndex idx(double v) { return StabilityIndex(v); }

// E(U^r) through tanh-sinh, a second quadrature path: (0,1] directly and
// (1,inf) through y = 1/s.
double tanh_sinh_moment(double a, double r)
{
    boost::math::quadrature::tanh_sinh<double> integrator;
    const double near = integrator.integrate(
        [&](double y) { return y > 0.0 ? std::exp(r * std::log(y) + log_up_density(idx(a), 0.0, std::log(y))) : 0.0; },
        0.0, 1.0);
    const double far = integrator.integrate(
        [&](double s) {
            if (!(s > 0.0)) {
                return 0.0;
            }
            return std::exp((-r - 2.0) * std::log(s) + log_up_density(idx(a), 0.0, -std::log(s)));
        },
        0.0, 1.0);
    return near + far;
}

}  // namespace

TEST_CASE("single overshoot moments")
{
    CHECK(up_moment(idx(1.0), 0.0).value() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::fabs(up_moment(idx(1.0), 0.25).value() - std::sqrt(2.0)) < 1e-14);
    CHECK_FALSE(up_moment(idx(0.5), 0.3).is_finite());
    CHECK(std::isinf(up_moment(idx(0.5), 0.3).value_or_inf()));
    CHECK_FALSE(up_moment(idx(1.0), 0.5).is_finite());
    CHECK_FALSE(up_moment(idx(1.0), -0.5).is_finite());
    CHECK(up_moment(idx(1.0), -0.4999).is_finite());
}

TEST_CASE("product moments")
{
    CHECK(product_moment(idx(1.0), idx(1.0), 0.0).value() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::fabs(product_moment(idx(1.0), idx(1.0), 0.25).value() - 2.0) < 1e-14);
    CHECK_FALSE(product_moment(idx(1.5), idx(1.0), 0.6).is_finite());
    const MomentWindow w = product_moment_window(idx(1.5), idx(0.4));
    CHECK(w.lower == doctest::Approx(-0.25));
    CHECK(w.upper == doctest::Approx(0.2));
}

TEST_CASE("critical exponent")
{
    CHECK(critical_exponent(idx(1.0), idx(1.0)) == 0.0);
    CHECK(critical_exponent(idx(0.5), idx(0.9)) == doctest::Approx(-0.15).epsilon(1e-14));
    CHECK(critical_exponent(idx(1.5), idx(1.0)) == doctest::Approx(0.125).epsilon(1e-14));
}

TEST_CASE("critical moment")
{
    CHECK(critical_moment(idx(1.0), idx(1.0)) == 1.0);
    CHECK(std::fabs(critical_moment(idx(0.5), idx(0.5)) - 0.5) < 1e-14);
    CHECK(std::fabs(critical_moment(idx(1.5), idx(1.0)) - 0.8284271247461902) < 1e-13);
    CHECK(std::fabs(critical_moment(idx(1.5), idx(1.0)) - (1.0 - (1 - std::sqrt(0.5)) / (1 + std::sqrt(0.5)))) < 1e-14);
    for (double a = 0.1; a < 1.95; a += 0.1) {
        for (double b = 0.1; b < 1.95; b += 0.1) {
            const double r = critical_exponent(idx(a), idx(b));
            CHECK(critical_moment(idx(a), idx(b))
                  == doctest::Approx(product_moment(idx(a), idx(b), r).value()).epsilon(1e-12));
            CHECK(critical_moment(idx(a), idx(b)) <= 1.0);
        }
    }
}

TEST_CASE("log drift against a finite difference of the product moment")
{
    CHECK(log_drift(idx(1.0), idx(1.0)) == 0.0);
    CHECK(std::fabs(log_drift(idx(0.5), idx(0.5)) - 2 * pi) < 1e-13);
    CHECK(std::fabs(log_drift(idx(1.5), idx(1.5)) + 2 * pi) < 1e-13);
    const double h = 1e-5;
    for (auto [a, b] : {std::pair{0.5, 0.5}, {1.5, 1.5}, {1.2, 0.3}, {0.7, 1.6}}) {
        const double fd = (std::log(product_moment(idx(a), idx(b), h).value())
                           - std::log(product_moment(idx(a), idx(b), -h).value()))
            / (2 * h);
        CHECK(log_drift(idx(a), idx(b)) == doctest::Approx(fd).epsilon(1e-8));
    }
}

TEST_CASE("log step variance matches simulation")
{
    Stream rng = Stream::for_task(21, 0);
    RunningStats s;
    for (int i = 0; i < 400000; ++i) {
        s.push(sample_log_unit_overshoot(idx(1.3), rng) + sample_log_unit_overshoot(idx(0.6), rng));
    }
    CHECK(s.variance() == doctest::Approx(log_step_variance(idx(1.3), idx(0.6))).epsilon(0.02));
}

TEST_CASE("quadrature oracle")
{
    CHECK(std::fabs(quadrature_moment({idx(1.0), std::nullopt, 0.0}).value() - 1.0) < 1e-8);
    CHECK(std::fabs(quadrature_moment({idx(1.0), std::nullopt, 0.25}).value() - 1.4142136) < 1e-7);
    CHECK(std::fabs(quadrature_moment({idx(0.5), idx(0.5), -0.25}).value() - 0.5) < 1e-7);
    CHECK_FALSE(quadrature_moment({idx(0.5), std::nullopt, 0.3}).is_finite());
    CHECK_FALSE(quadrature_moment({idx(1.5), idx(1.0), 0.6}).is_finite());
}

TEST_CASE("quadrature oracle agrees with an independent tanh-sinh integral")
{
    for (auto [a, r] : {std::pair{0.3, 0.1}, {1.0, -0.3}, {1.7, 0.6}, {1.2, 0.0}}) {
        CHECK(quadrature_moment({idx(a), std::nullopt, r}).value()
              == doctest::Approx(tanh_sinh_moment(a, r)).epsilon(1e-8));
    }
}

TEST_CASE("quadrature stays accurate next to the window edges")
{
    for (double a : {0.1, 1.0, 1.9}) {
        const MomentWindow w = up_moment_window(idx(a));
        for (double r : {w.lower + 0.01, w.upper - 0.01}) {
            CHECK(quadrature_moment({idx(a), std::nullopt, r}).value()
                  == doctest::Approx(up_moment(idx(a), r).value()).epsilon(1e-7));
        }
    }
}
