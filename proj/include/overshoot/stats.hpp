#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace overshoot {

/// Streaming mean/variance (Welford), mergeable in a fixed order.
class RunningStats {
public:
    void push(double x) noexcept;
    /// Chan et al. pairwise combination.
    void merge(const RunningStats& other) noexcept;

    std::size_t count() const noexcept { return n_; }
    double mean() const noexcept { return mean_; }
    /// Unbiased sample variance; 0 for fewer than two samples.
    double variance() const noexcept;
    /// Standard error of the mean.
    double standard_error() const noexcept;

private:
    std::size_t n_ = 0;
    double mean_ = 0.0;
    double m2_ = 0.0;
};

/// Two-sided Kolmogorov-Smirnov distance between the empirical law of
/// `samples` and a continuous CDF. `samples` need not be sorted.
double ks_statistic(std::span<const double> samples, const std::function<double(double)>& cdf);

/// Two-sample Kolmogorov-Smirnov distance.
double ks_two_sample(std::span<const double> a, std::span<const double> b);

/// Empirical quantile (type 7, linear interpolation) of `samples` at p in [0,1].
double empirical_quantile(std::span<const double> samples, double p);

/// Fraction of `samples` that are <= x.
double empirical_cdf(std::span<const double> sorted_samples, double x);

}  // namespace overshoot
