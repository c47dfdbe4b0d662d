#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tasep {

enum class LawKind {
  gaussian,
  chi3_half,
  brownian_max_minus_half,
  brownian_argmax_expectation,
};

const char* to_string(LawKind k);

/// A limit law. The first two kinds have closed-form CDFs; the Brownian kinds
/// are evaluated by simulation on a grid of `steps` points with `paths`
/// independent paths.
struct ReferenceLaw {
  LawKind kind = LawKind::gaussian;
  double mean = 0.0;      // gaussian
  double variance = 1.0;  // gaussian
  double lambda = 0.0;    // drift of the Brownian kinds
  long paths = 0;
  long steps = 0;
  std::uint64_t seed = 0;

  static ReferenceLaw gaussian(double mean, double variance);
  static ReferenceLaw chi3_half();
  static ReferenceLaw brownian_max_minus_half(double lambda, long paths, long steps, std::uint64_t seed);
  static ReferenceLaw brownian_argmax_expectation(double lambda, long paths, long steps, std::uint64_t seed);

  bool closed_form() const { return kind == LawKind::gaussian || kind == LawKind::chi3_half; }
  std::string describe() const;
};

/// Closed-form CDF; chi3_half(x) is the chi_3 CDF at 2x. Throws
/// std::invalid_argument for the simulated kinds.
double reference_cdf(const ReferenceLaw& law, double x);

/// E(chi_3)/2 = sqrt(2/pi).
double chi3_half_mean();

enum class BrownianFunctional {
  max_minus_half,  // M_1 - B_1/2, M_1 = max_{s<=1} B_s
  argmax,          // leftmost argmax location in [0, 1]
};

struct BrownianSample {
  std::vector<double> values;  // one per path
  double mean = 0.0;
  double standard_error = 0.0;
};

/// Drifted Brownian motion B_s = W_s + lambda s on the grid k/steps; path i
/// uses normals from stream (seed, i, brownian). Requires paths, steps >= 10^4.
BrownianSample simulate_brownian_functional(double lambda, BrownianFunctional kind, long paths, long steps,
                                            std::uint64_t seed, int threads = 0);

/// Same simulation without the size floor, for tests and benchmarks.
BrownianSample simulate_brownian_functional_unchecked(double lambda, BrownianFunctional kind, long paths,
                                                      long steps, std::uint64_t seed, int threads = 0);

/// Simulated samples of a Brownian-kind ReferenceLaw.
BrownianSample sample_reference_law(const ReferenceLaw& law, int threads = 0);

}  // namespace tasep
