#include <doctest.h>

#include <cmath>
#include <vector>

#include "overshoot/error.hpp"
#include "overshoot/random.hpp"
#include "overshoot/stats.hpp"

using namespace overshoot;

TEST_CASE("running stats against two-pass formulas")
{
    const std::vector<double> xs = {3.0, -1.5, 2.25, 8.0, 0.0, 4.5};
    RunningStats s;
    double sum = 0.0;
    for (double x : xs) {
        s.push(x);
        sum += x;
    }
    const double mean = sum / xs.size();
    double ss = 0.0;
    for (double x : xs) {
        ss += (x - mean) * (x - mean);
    }
    CHECK(s.count() == xs.size());
    CHECK(s.mean() == doctest::Approx(mean).epsilon(1e-15));
    CHECK(s.variance() == doctest::Approx(ss / (xs.size() - 1)).epsilon(1e-14));
    CHECK(s.standard_error() == doctest::Approx(std::sqrt(ss / (xs.size() - 1) / xs.size())).epsilon(1e-14));
}

TEST_CASE("merging equals pushing everything")
{
    Stream rng = Stream::for_task(1, 1);
    RunningStats all;
    RunningStats left;
    RunningStats right;
    for (int i = 0; i < 1000; ++i) {
        const double x = rng.normal() * 3.0 + 1e6;
        all.push(x);
        (i < 377 ? left : right).push(x);
    }
    left.merge(right);
    CHECK(left.count() == all.count());
    CHECK(left.mean() == doctest::Approx(all.mean()).epsilon(1e-14));
    CHECK(left.variance() == doctest::Approx(all.variance()).epsilon(1e-9));

    RunningStats empty;
    empty.merge(all);
    CHECK(empty.mean() == all.mean());
    CHECK(RunningStats{}.variance() == 0.0);
}

TEST_CASE("KS statistic by hand")
{
    const std::vector<double> xs = {0.9, 0.1, 0.5};
    // uniform cdf; steps at 0.1, 0.5, 0.9 give max gap 0.2333...
    const double d = ks_statistic(xs, [](double x) { return std::clamp(x, 0.0, 1.0); });
    CHECK(d == doctest::Approx(0.23333333333333334).epsilon(1e-14));
    CHECK(ks_two_sample(xs, xs) == 0.0);
    const std::vector<double> ys = {10.0, 11.0};
    CHECK(ks_two_sample(xs, ys) == 1.0);
}

TEST_CASE("KS of uniform draws is of order n^(-1/2)")
{
    Stream rng = Stream::for_task(1, 2);
    std::vector<double> u(40000);
    for (double& x : u) {
        x = rng.uniform();
    }
    const double d = ks_statistic(u, [](double x) { return x; });
    CHECK(d < 1.63 / std::sqrt(40000.0));  // 1% critical value
}

TEST_CASE("type-7 quantiles")
{
    const std::vector<double> xs = {4.0, 1.0, 3.0, 2.0};
    CHECK(empirical_quantile(xs, 0.0) == 1.0);
    CHECK(empirical_quantile(xs, 1.0) == 4.0);
    CHECK(empirical_quantile(xs, 0.5) == 2.5);
    CHECK(empirical_quantile(xs, 0.25) == doctest::Approx(1.75));
    CHECK_THROWS_AS(empirical_quantile(xs, 1.5), DomainError);
    CHECK_THROWS_AS(empirical_quantile(std::vector<double>{}, 0.5), DegenerateError);
    const std::vector<double> sorted = {1.0, 2.0, 2.0, 3.0};
    CHECK(empirical_cdf(sorted, 2.0) == 0.75);
    CHECK(empirical_cdf(sorted, 0.0) == 0.0);
}

TEST_CASE("streams: determinism, independence of keys, open unit interval")
{
    Stream a = Stream::for_task(5, 0);
    Stream b = Stream::for_task(5, 0);
    Stream c = Stream::for_task(5, 1);
    int same = 0;
    for (int i = 0; i < 1000; ++i) {
        const auto x = a();
        CHECK(x == b());
        same += x == c() ? 1 : 0;
    }
    CHECK(same == 0);
    CHECK(task_key(1, 2) != task_key(2, 1));
    Stream d = Stream::for_task(6, 0);
    for (int i = 0; i < 100000; ++i) {
        const double u = d.uniform();
        CHECK((u > 0.0 && u < 1.0));
    }
}
