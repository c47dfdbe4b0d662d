#pragma once

#include <functional>
#include <span>
#include <vector>

namespace tasep {

struct Summary {
  long count = 0;
  double mean = 0.0;
  double variance = 0.0;  // unbiased
  double standard_error = 0.0;
};

Summary summarize(std::span<const double> samples);

/// Standard error of a proportion estimated from `count` draws.
double proportion_standard_error(double proportion, long count);

/// sup_x |F_n(x) - F(x)| for the empirical CDF F_n of the samples.
double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf);

/// sup_x |F_n(x) - G_m(x)| between two empirical CDFs.
double ks_two_sample(std::vector<double> a, std::vector<double> b);

/// Sorted distinct values with their multiplicities.
std::vector<std::pair<double, long>> value_counts(std::vector<double> samples);

}  // namespace tasep
