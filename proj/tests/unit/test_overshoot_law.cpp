#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/beta.hpp>

#include "overshoot/error.hpp"
#include "overshoot/overshoot_law.hpp"
#include "overshoot/random.hpp"
#include "overshoot/stats.hpp"

using namespace overshoot;

namespace {

const StabilityIndex one(1.0);

double quad_density(StabilityIndex a, double x, double lo, double hi)
{
    boost::math::quadrature::tanh_sinh<double> integrator;
    return integrator.integrate([&](double t) { return up_density(a, x, t); }, lo, hi);
}

}  // namespace

TEST_CASE("StabilityIndex rejects the closed endpoints")
{
    CHECK_THROWS_AS(StabilityIndex(0.0), DomainError);
    CHECK_THROWS_AS(StabilityIndex(2.0), DomainError);
    CHECK_THROWS_AS(StabilityIndex(std::nan("")), DomainError);
    CHECK(StabilityIndex(1.999).value() == 1.999);
}

TEST_CASE("up density values")
{
    CHECK(up_density(one, -1.0, 1.0) == doctest::Approx(1.0 / (2.0 * std::numbers::pi)).epsilon(1e-14));
    CHECK(up_density(one, -2.0, 2.0) == doctest::Approx(1.0 / (4.0 * std::numbers::pi)).epsilon(1e-14));
    CHECK(up_density(one, -1.0, -0.5) == 0.0);
    CHECK_THROWS_AS(up_density(one, 0.5, 1.0), DomainError);
}

TEST_CASE("down density values")
{
    CHECK(down_density(one, 1.0, -1.0) == doctest::Approx(1.0 / (2.0 * std::numbers::pi)).epsilon(1e-14));
    const double expected = std::sin(std::numbers::pi / 4) / std::numbers::pi / 5.0 * std::pow(4.0, -0.25);
    CHECK(down_density(StabilityIndex(0.5), 1.0, -4.0) == doctest::Approx(expected).epsilon(1e-14));
    CHECK(std::fabs(down_density(StabilityIndex(0.5), 1.0, -4.0) - 0.0318310) < 1e-7);
    CHECK(down_density(one, 1.0, 0.5) == 0.0);
}

TEST_CASE("log density matches the density and survives overflow")
{
    for (double a : {0.3, 1.0, 1.7}) {
        for (double y : {1e-8, 0.3, 5.0, 1e9}) {
            CHECK(std::exp(log_up_density(StabilityIndex(a), std::log(2.0), std::log(y)))
                  == doctest::Approx(up_density(StabilityIndex(a), -2.0, y)).epsilon(1e-12));
        }
    }
    CHECK(std::isfinite(log_up_density(StabilityIndex(0.1), 0.0, 2000.0)));
}

TEST_CASE("up cdf values and quadrature oracle")
{
    CHECK(std::fabs(up_cdf(one, -1.0, 1.0) - 0.5) < 1e-14);
    CHECK(up_cdf(StabilityIndex(0.7), -3.0, 0.0) == 0.0);
    const double expected = boost::math::ibeta(0.75, 0.25, 0.75);
    CHECK(std::fabs(up_cdf(StabilityIndex(0.5), -1.0, 3.0) - expected) < 1e-12);
    CHECK(std::fabs(up_cdf(StabilityIndex(0.5), -1.0, 3.0) - quad_density(StabilityIndex(0.5), -1.0, 0.0, 3.0)) < 1e-9);
    for (double a : {0.2, 0.9, 1.6}) {
        for (double y : {0.05, 1.0, 20.0}) {
            CHECK(std::fabs(up_cdf(StabilityIndex(a), -1.5, y) - quad_density(StabilityIndex(a), -1.5, 0.0, y)) < 1e-8);
        }
    }
}

TEST_CASE("down cdf mirrors the up cdf")
{
    for (double y : {-0.1, -1.0, -7.0}) {
        CHECK(std::fabs(down_cdf(StabilityIndex(1.3), 2.0, y) - (1.0 - up_cdf(StabilityIndex(1.3), -2.0, -y))) < 1e-15);
    }
    CHECK(down_cdf(StabilityIndex(1.3), 2.0, 0.0) == 1.0);
}

TEST_CASE("OvershootLaw shifts the barrier")
{
    OvershootLaw law{StabilityIndex(0.8), 2.0, 5.0, Direction::Up};
    CHECK(law.density(6.0) == doctest::Approx(up_density(StabilityIndex(0.8), -3.0, 1.0)));
    CHECK(law.cdf(6.0) == doctest::Approx(up_cdf(StabilityIndex(0.8), -3.0, 1.0)));
    OvershootLaw wrong{StabilityIndex(0.8), 6.0, 5.0, Direction::Up};
    CHECK_THROWS_AS(wrong.cdf(7.0), DomainError);
}

TEST_CASE("quantile inverts the cdf")
{
    CHECK(std::fabs(up_quantile(one, -1.0, 0.5) - 1.0) < 1e-9);
    CHECK(std::fabs(up_quantile(one, -3.0, 0.5) - 3.0) < 1e-8);
    // bisection on the Boost incomplete beta as an independent inverse
    double lo = 0.0;
    double hi = 1e12;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (boost::math::ibeta(0.75, 0.25, mid / (1.0 + mid)) < 0.9 ? lo : hi) = mid;
    }
    CHECK(up_quantile(StabilityIndex(0.5), -1.0, 0.9) == doctest::Approx(lo).epsilon(1e-8));
    for (double p : {1e-6, 0.1, 0.99, 1.0 - 1e-9}) {
        CHECK(std::fabs(up_cdf(StabilityIndex(1.4), -1.0, up_quantile(StabilityIndex(1.4), -1.0, p)) - p) < 1e-9);
    }
    CHECK_THROWS_AS(up_quantile(one, -1.0, 1.0), DomainError);
}

TEST_CASE("sampler is deterministic per stream")
{
    Stream a = Stream::for_task(9, 4);
    Stream b = Stream::for_task(9, 4);
    for (int i = 0; i < 100; ++i) {
        CHECK(sample_up(one, -1.0, a) == sample_up(one, -1.0, b));
    }
}

TEST_CASE("Cauchy-case overshoot has median one")
{
    Stream rng = Stream::for_task(11, 0);
    std::size_t below = 0;
    const std::size_t n = 1000000;
    for (std::size_t i = 0; i < n; ++i) {
        below += sample_up(one, -1.0, rng) <= 1.0 ? 1 : 0;
    }
    CHECK(std::fabs(static_cast<double>(below) / n - 0.5) < 0.002);
}

TEST_CASE("fractional moment of the up sampler")
{
    Stream rng = Stream::for_task(12, 0);
    RunningStats s;
    for (int i = 0; i < 1000000; ++i) {
        s.push(std::pow(sample_up(StabilityIndex(1.2), -1.0, rng), 0.3));
    }
    const double target = std::sin(0.6 * std::numbers::pi) / std::sin(0.3 * std::numbers::pi);
    CHECK(std::fabs(target - 1.17557) < 1e-5);
    CHECK(std::fabs(s.mean() - target) <= 3.0 * s.standard_error());
}

TEST_CASE("down sampler reflects the up sampler")
{
    Stream a = Stream::for_task(13, 0);
    Stream b = Stream::for_task(13, 0);
    for (int i = 0; i < 100; ++i) {
        CHECK(sample_down(one, 1.0, a) == -sample_up(one, -1.0, b));
    }
}

TEST_CASE("down sampler median and moment")
{
    Stream rng = Stream::for_task(14, 0);
    std::vector<double> draws(1000000);
    for (double& d : draws) {
        d = sample_down(one, 2.0, rng);
    }
    CHECK(std::fabs(empirical_quantile(draws, 0.5) + 2.0) < 0.01);

    RunningStats s;
    for (int i = 0; i < 1000000; ++i) {
        s.push(std::pow(-sample_down(StabilityIndex(0.8), 1.0, rng), 0.2));
    }
    const double target = std::sin(0.4 * std::numbers::pi) / std::sin(0.2 * std::numbers::pi);
    CHECK(std::fabs(target - 1.61803) < 1e-5);
    CHECK(std::fabs(s.mean() - target) <= 3.0 * s.standard_error());
}

TEST_CASE("samples stay strictly inside the support for extreme indices")
{
    Stream rng = Stream::for_task(15, 0);
    for (double a : {0.01, 0.1, 1.9, 1.99}) {
        for (int i = 0; i < 20000; ++i) {
            const double y = sample_up(StabilityIndex(a), -1.0, rng);
            CHECK_MESSAGE(y > 0.0, "alpha=" << a);
            CHECK(std::isfinite(sample_log_unit_overshoot(StabilityIndex(a), rng)));
        }
    }
}

TEST_CASE("log-gamma sampler has the log-gamma mean")
{
    Stream rng = Stream::for_task(16, 0);
    for (double shape : {0.05, 0.5, 3.0}) {
        RunningStats s;
        for (int i = 0; i < 200000; ++i) {
            s.push(sample_log_gamma(shape, rng));
        }
        // E log G = digamma(shape); the digamma oracle is a central difference of lgamma
        const double h = 1e-5;
        const double digamma = (std::lgamma(shape + h) - std::lgamma(shape - h)) / (2 * h);
        CHECK_MESSAGE(std::fabs(s.mean() - digamma) <= 4.0 * s.standard_error(), "shape=" << shape);
    }
}
