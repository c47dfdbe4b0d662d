#include "tasep/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tasep {

Summary summarize(std::span<const double> samples) {
  Summary s;
  s.count = long(samples.size());
  if (samples.empty()) return s;
  long double sum = 0;
  for (double x : samples) sum += x;
  const long double mean = sum / s.count;
  long double sq = 0;
  for (double x : samples) sq += (x - mean) * (x - mean);
  s.mean = double(mean);
  s.variance = s.count > 1 ? double(sq / (s.count - 1)) : 0.0;
  s.standard_error = std::sqrt(s.variance / s.count);
  return s;
}

double proportion_standard_error(double proportion, long count) {
  if (count < 1) throw std::invalid_argument("proportion_standard_error: count < 1");
  return std::sqrt(proportion * (1.0 - proportion) / double(count));
}

double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf) {
  if (samples.empty()) throw std::invalid_argument("ks_statistic: no samples");
  std::sort(samples.begin(), samples.end());
  const double n = double(samples.size());
  double d = 0.0;
  std::size_t i = 0;
  while (i < samples.size()) {
    std::size_t j = i;
    while (j < samples.size() && samples[j] == samples[i]) ++j;
    const double f = std::clamp(cdf(samples[i]), 0.0, 1.0);
    d = std::max({d, f - double(i) / n, double(j) / n - f});
    i = j;
  }
  return d;
}

double ks_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("ks_two_sample: empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = double(a.size());
  const double nb = double(b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] == x) ++i;
    while (j < b.size() && b[j] == x) ++j;
    d = std::max(d, std::abs(double(i) / na - double(j) / nb));
  }
  return d;
}

std::vector<std::pair<double, long>> value_counts(std::vector<double> samples) {
  std::sort(samples.begin(), samples.end());
  std::vector<std::pair<double, long>> out;
  for (double x : samples) {
    if (!out.empty() && out.back().first == x) {
      ++out.back().second;
    } else {
      out.emplace_back(x, 1);
    }
  }
  return out;
}

}  // namespace tasep
