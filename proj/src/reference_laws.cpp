#include "tasep/reference_laws.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "tasep/parallel.hpp"
#include "tasep/rng.hpp"
#include "tasep/stats.hpp"

namespace tasep {

const char* to_string(LawKind k) {
  switch (k) {
    case LawKind::gaussian: return "gaussian";
    case LawKind::chi3_half: return "chi3_half";
    case LawKind::brownian_max_minus_half: return "brownian_max_minus_half";
    case LawKind::brownian_argmax_expectation: return "brownian_argmax_expectation";
  }
  return "?";
}

ReferenceLaw ReferenceLaw::gaussian(double mean, double variance) {
  if (!(variance > 0.0)) throw std::invalid_argument("gaussian law needs positive variance");
  ReferenceLaw law;
  law.kind = LawKind::gaussian;
  law.mean = mean;
  law.variance = variance;
  return law;
}

ReferenceLaw ReferenceLaw::chi3_half() {
  ReferenceLaw law;
  law.kind = LawKind::chi3_half;
  return law;
}

ReferenceLaw ReferenceLaw::brownian_max_minus_half(double lambda, long paths, long steps, std::uint64_t seed) {
  ReferenceLaw law;
  law.kind = LawKind::brownian_max_minus_half;
  law.lambda = lambda;
  law.paths = paths;
  law.steps = steps;
  law.seed = seed;
  return law;
}

ReferenceLaw ReferenceLaw::brownian_argmax_expectation(double lambda, long paths, long steps, std::uint64_t seed) {
  ReferenceLaw law = brownian_max_minus_half(lambda, paths, steps, seed);
  law.kind = LawKind::brownian_argmax_expectation;
  return law;
}

std::string ReferenceLaw::describe() const {
  std::ostringstream os;
  os << to_string(kind);
  switch (kind) {
    case LawKind::gaussian: os << "(mean=" << mean << ",variance=" << variance << ")"; break;
    case LawKind::chi3_half: break;
    default:
      os << "(lambda=" << lambda << ",paths=" << paths << ",steps=" << steps << ",seed=" << seed << ")";
  }
  return os.str();
}

double reference_cdf(const ReferenceLaw& law, double x) {
  switch (law.kind) {
    case LawKind::gaussian:
      return 0.5 * std::erfc(-(x - law.mean) / std::sqrt(2.0 * law.variance));
    case LawKind::chi3_half: {
      if (x <= 0.0) return 0.0;
      const double y = 2.0 * x;
      return std::erf(y / std::numbers::sqrt2) - std::sqrt(2.0 / std::numbers::pi) * y * std::exp(-0.5 * y * y);
    }
    default:
      throw std::invalid_argument("reference_cdf: simulated law has no closed form");
  }
}

double chi3_half_mean() { return std::sqrt(2.0 / std::numbers::pi); }

BrownianSample simulate_brownian_functional_unchecked(double lambda, BrownianFunctional kind, long paths,
                                                      long steps, std::uint64_t seed, int threads) {
  if (paths < 1 || steps < 1) throw std::invalid_argument("brownian simulation needs paths, steps >= 1");
  BrownianSample out;
  out.values.assign(std::size_t(paths), 0.0);
  const double dt = 1.0 / double(steps);
  const double drift = lambda * dt;
  const double scale = std::sqrt(dt);
  parallel_for(paths, threads, [&](long i) {
    CounterRng rng({seed, std::uint64_t(i), Stream::brownian});
    double b = 0.0;
    double best = 0.0;
    long best_at = 0;
    for (long k = 1; k <= steps; ++k) {
      b += drift + scale * rng.normal();
      if (b > best) {
        best = b;
        best_at = k;
      }
    }
    out.values[std::size_t(i)] = kind == BrownianFunctional::argmax ? double(best_at) * dt : best - 0.5 * b;
  });
  const Summary s = summarize(out.values);
  out.mean = s.mean;
  out.standard_error = s.standard_error;
  return out;
}

BrownianSample simulate_brownian_functional(double lambda, BrownianFunctional kind, long paths, long steps,
                                            std::uint64_t seed, int threads) {
  if (paths < 10000 || steps < 10000) throw std::invalid_argument("brownian reference needs paths, steps >= 10000");
  return simulate_brownian_functional_unchecked(lambda, kind, paths, steps, seed, threads);
}

BrownianSample sample_reference_law(const ReferenceLaw& law, int threads) {
  switch (law.kind) {
    case LawKind::brownian_max_minus_half:
      return simulate_brownian_functional(law.lambda, BrownianFunctional::max_minus_half, law.paths, law.steps,
                                          law.seed, threads);
    case LawKind::brownian_argmax_expectation:
      return simulate_brownian_functional(law.lambda, BrownianFunctional::argmax, law.paths, law.steps, law.seed,
                                          threads);
    default:
      throw std::invalid_argument("sample_reference_law: law has a closed form");
  }
}

}  // namespace tasep
