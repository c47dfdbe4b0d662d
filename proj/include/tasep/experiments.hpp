#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tasep/random_walk.hpp"
#include "tasep/reference_laws.hpp"
#include "tasep/sampling.hpp"
#include "tasep/stats.hpp"

namespace tasep {

/// simulate: run the exact dynamics on every sample.
/// predicate: excess only; E = 0 iff U < K, E = 1 if additionally U <= n - R,
///   full dynamics otherwise, plus a simulated subsample as a cross-check.
/// both: evaluate both ways on every sample and count disagreements.
enum class Mode { simulate, predicate, both };

const char* to_string(Mode m);
Mode parse_mode(const std::string& s);

struct ExperimentConfig {
  InitialCondition init;
  long samples = 1000;
  std::uint64_t seed = 0;
  Mode mode = Mode::simulate;
  int threads = 0;
  /// Fraction of predicate-mode samples also simulated; every
  /// round(1/fraction)-th sample index is checked.
  double subsample_fraction = 0.01;
  /// Grid of the simulated Brownian reference law, when one is needed.
  long reference_paths = 10000;
  long reference_steps = 10000;
  std::uint64_t reference_seed = 1;

  void validate() const;
};

struct Estimate {
  std::string name;
  double value = 0.0;
  double standard_error = 0.0;
};

struct ExperimentResult {
  std::string experiment;
  ExperimentConfig config;
  double density = 0.0;
  std::vector<Estimate> estimates;
  std::vector<double> samples;
  std::optional<double> ks;
  std::string reference;
  long simulated = 0;
  long mismatches = 0;
  double wall_seconds = 0.0;

  const Estimate& at(const std::string& name) const;
};

/// Exact laws over all 2^n backbones and all placements of the 1.
struct ExactLaw {
  long n = 0;
  double p = 0.0;
  std::map<long, double> excess;
  std::map<long, double> t_three;
  std::map<long, double> t_backbone;   // T^(2) of the Bernoulli backbone
  std::map<long, double> t_projected;  // T^(2) of the merge_low projection
  /// excess_coefficients[e][a]: P(E = e) = sum_a c[a] p^a (1-p)^(n-a).
  std::map<long, std::vector<Rational>> excess_coefficients;
};

ExactLaw exact_excess_distribution(long n, double p);

/// Normalized T^(2) per sample: (T - max(p,1-p) n)/sqrt n for a fixed
/// density, (T - n/2)/sqrt n for the critical scalings. The reference law is
/// gaussian(0, p(1-p)) for p != 1/2, chi3_half for p = 1/2, and the simulated
/// M_1 - B_1/2 with drift +lambda (critical_plus) or -lambda (critical_minus).
/// simulate evaluates T^(2) by the linear-time recursion; both also runs the
/// stepper per sample and counts disagreements. predicate is rejected.
ExperimentResult run_stabilization_experiment(const ExperimentConfig& cfg);

/// Estimates P(E=0), P(E=1), P(E>1) and E(E) for the sampled three-type strings.
ExperimentResult run_excess_experiment(const ExperimentConfig& cfg);

struct MkGapResult {
  long n = 0;
  double density = 0.0;
  long samples = 0;
  long undefined_m = 0;  // empty window
  long fallback_k = 0;   // K not attained, excluded from the gap
  Summary gap;           // M - K
  double gap_over_sqrt_n = 0.0;
  Summary m_over_n;      // M/n over samples with M defined
  double wall_seconds = 0.0;
};

MkGapResult estimate_mk_gap(const ExperimentConfig& cfg);

}  // namespace tasep
