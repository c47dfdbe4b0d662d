#include "tasep/sampling.hpp"

#include <cmath>
#include <vector>

namespace tasep {

double critical_density(long n, double lambda, Convention convention) {
  if (n < 1) throw DensityError("critical_density: n must be >= 1");
  const double shift = lambda / (2.0 * std::sqrt(double(n)));
  const double p = convention == Convention::plus ? 0.5 + shift : 0.5 - shift;
  if (!(p > 0.0 && p < 1.0)) throw DensityError("critical density " + std::to_string(p) + " outside (0,1)");
  return p;
}

const char* to_string(Scaling s) {
  switch (s) {
    case Scaling::fixed: return "fixed";
    case Scaling::critical_plus: return "critical_plus";
    case Scaling::critical_minus: return "critical_minus";
  }
  return "?";
}

Scaling parse_scaling(const std::string& s) {
  if (s == "fixed") return Scaling::fixed;
  if (s == "critical_plus" || s == "plus") return Scaling::critical_plus;
  if (s == "critical_minus" || s == "minus") return Scaling::critical_minus;
  throw std::invalid_argument("unknown scaling: " + s);
}

double InitialCondition::density() const {
  switch (scaling) {
    case Scaling::fixed:
      if (!(p > 0.0 && p < 1.0)) throw DensityError("density " + std::to_string(p) + " outside (0,1)");
      return p;
    case Scaling::critical_plus: return critical_density(n, lambda, Convention::plus);
    case Scaling::critical_minus: return critical_density(n, lambda, Convention::minus);
  }
  return p;
}

BiString sample_two(long n, double p, std::uint64_t seed, std::uint64_t index) {
  if (n < 1) throw std::invalid_argument("sample_two: n must be >= 1");
  if (!(p > 0.0 && p < 1.0)) throw DensityError("sample_two: p outside (0,1)");
  CounterRng rng({seed, index, Stream::backbone});
  const std::uint64_t threshold = bernoulli_threshold(p);
  std::vector<Symbol> s(static_cast<std::size_t>(n));
  for (auto& c : s) c = rng() < threshold ? 2 : 0;
  return BiString::unchecked(std::move(s));
}

ScpSample sample_three_with_scp(long n, double p, std::uint64_t seed, std::uint64_t index) {
  std::vector<Symbol> s = sample_two(n, p, seed, index).release();
  std::uint64_t zeros = 0;
  for (Symbol c : s) zeros += c == 0;
  if (zeros == 0) {
    s[0] = 1;
    return {TriString::unchecked(std::move(s)), 1};
  }
  CounterRng rng({seed, index, Stream::second_class});
  std::uint64_t pick = rng.below(zeros);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == 0 && pick-- == 0) {
      s[i] = 1;
      return {TriString::unchecked(std::move(s)), long(i) + 1};
    }
  }
  throw std::logic_error("sample_three_with_scp: zero count mismatch");
}

}  // namespace tasep
