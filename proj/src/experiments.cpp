#include "tasep/experiments.hpp"

#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "tasep/dynamics.hpp"
#include "tasep/parallel.hpp"
#include "tasep/structure.hpp"

namespace tasep {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

long subsample_stride(double fraction) {
  if (fraction <= 0.0) return 0;
  return std::max(1L, std::lround(1.0 / fraction));
}

std::int64_t lcm_upto(long n) {
  std::int64_t l = 1;
  for (long k = 2; k <= n; ++k) l = std::lcm(l, std::int64_t(k));
  return l;
}

}  // namespace

const char* to_string(Mode m) {
  switch (m) {
    case Mode::simulate: return "simulate";
    case Mode::predicate: return "predicate";
    case Mode::both: return "both";
  }
  return "?";
}

Mode parse_mode(const std::string& s) {
  if (s == "simulate") return Mode::simulate;
  if (s == "predicate") return Mode::predicate;
  if (s == "both") return Mode::both;
  throw std::invalid_argument("unknown mode: " + s);
}

void ExperimentConfig::validate() const {
  if (init.n < 1) throw std::invalid_argument("n must be >= 1");
  if (samples < 1) throw std::invalid_argument("sample count must be >= 1");
  if (subsample_fraction < 0.0 || subsample_fraction > 1.0) throw std::invalid_argument("subsample fraction outside [0,1]");
  init.density();
}

const Estimate& ExperimentResult::at(const std::string& name) const {
  for (const Estimate& e : estimates) {
    if (e.name == name) return e;
  }
  throw std::out_of_range("no estimate named " + name);
}

ExactLaw exact_excess_distribution(long n, double p) {
  if (n < 1 || n > 14) throw std::invalid_argument("exact enumeration needs 1 <= n <= 14");
  if (!(p > 0.0 && p < 1.0)) throw DensityError("exact enumeration: p outside (0,1)");
  const std::int64_t common = lcm_upto(n);
  // counts[e][a]: sum over backbones with a twos of (#placements with excess e) * common / #zeros.
  std::map<long, std::vector<std::int64_t>> counts;
  std::vector<double> weight(std::size_t(n) + 1);
  for (long a = 0; a <= n; ++a) weight[std::size_t(a)] = std::pow(p, double(a)) * std::pow(1.0 - p, double(n - a));

  ExactLaw law;
  law.n = n;
  law.p = p;
  std::vector<Symbol> s(static_cast<std::size_t>(n));
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    long twos = 0;
    for (long i = 0; i < n; ++i) {
      s[std::size_t(i)] = (mask >> i) & 1U ? 2 : 0;
      twos += s[std::size_t(i)] == 2;
    }
    const double w = weight[std::size_t(twos)];
    law.t_backbone[long(stabilization_time_two(BiString::unchecked(s)))] += w;

    std::vector<std::size_t> placements;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == 0) placements.push_back(i);
    }
    const bool empty = placements.empty();
    if (empty) placements.push_back(0);
    const double share = w / double(placements.size());
    const std::int64_t count_share = common / std::int64_t(placements.size());
    for (std::size_t u : placements) {
      std::vector<Symbol> omega = s;
      omega[u] = 1;
      const TriString t = TriString::unchecked(std::move(omega));
      const long full = long(stabilize_three(t).steps);
      const long projected = long(projected_stabilization_time(t));
      law.excess[full - projected] += share;
      law.t_three[full] += share;
      law.t_projected[projected] += share;
      auto& row = counts[full - projected];
      row.resize(std::size_t(n) + 1, 0);
      row[std::size_t(twos)] += count_share;
    }
  }
  for (const auto& [e, row] : counts) {
    std::vector<Rational> coeffs;
    for (std::int64_t c : row) coeffs.push_back(Rational::make(c, common));
    law.excess_coefficients[e] = std::move(coeffs);
  }
  return law;
}

ExperimentResult run_stabilization_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  if (cfg.mode == Mode::predicate) throw std::invalid_argument("predicate mode applies to excess experiments only");
  const auto start = Clock::now();
  const long n = cfg.init.n;
  const double p = cfg.init.density();
  const double root = std::sqrt(double(n));
  const double centre = cfg.init.scaling == Scaling::fixed ? std::max(p, 1.0 - p) * double(n) : 0.5 * double(n);

  ExperimentResult r;
  r.experiment = "stabilization";
  r.config = cfg;
  r.density = p;
  r.samples.assign(std::size_t(cfg.samples), 0.0);
  std::vector<char> disagree(std::size_t(cfg.samples), 0);
  parallel_for(cfg.samples, cfg.threads, [&](long i) {
    const BiString b = sample_two(n, p, cfg.seed, std::uint64_t(i));
    const std::size_t t = stabilization_time_two(b);
    if (cfg.mode == Mode::both) disagree[std::size_t(i)] = stabilize_two(b).steps != t;
    r.samples[std::size_t(i)] = (double(t) - centre) / root;
  });
  if (cfg.mode == Mode::both) {
    r.simulated = cfg.samples;
    r.mismatches = std::accumulate(disagree.begin(), disagree.end(), 0L);
  }

  const Summary s = summarize(r.samples);
  const double var_se = s.count > 1 ? s.variance * std::sqrt(2.0 / double(s.count - 1)) : 0.0;
  r.estimates = {{"mean", s.mean, s.standard_error},
                 {"variance", s.variance, var_se},
                 {"mean_T", s.mean * root + centre, s.standard_error * root}};

  ReferenceLaw law;
  switch (cfg.init.scaling) {
    case Scaling::fixed:
      law = p == 0.5 ? ReferenceLaw::chi3_half() : ReferenceLaw::gaussian(0.0, p * (1.0 - p));
      break;
    case Scaling::critical_plus:
      law = ReferenceLaw::brownian_max_minus_half(cfg.init.lambda, cfg.reference_paths, cfg.reference_steps,
                                                  cfg.reference_seed);
      break;
    case Scaling::critical_minus:
      law = ReferenceLaw::brownian_max_minus_half(-cfg.init.lambda, cfg.reference_paths, cfg.reference_steps,
                                                  cfg.reference_seed);
      break;
  }
  r.reference = law.describe();
  if (law.closed_form()) {
    r.ks = ks_statistic(r.samples, [&](double x) { return reference_cdf(law, x); });
  } else {
    r.ks = ks_two_sample(r.samples, sample_reference_law(law, cfg.threads).values);
  }
  r.wall_seconds = seconds_since(start);
  return r;
}

ExperimentResult run_excess_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  const auto start = Clock::now();
  const long n = cfg.init.n;
  const double p = cfg.init.density();
  const long stride = subsample_stride(cfg.subsample_fraction);

  ExperimentResult r;
  r.experiment = "excess";
  r.config = cfg;
  r.density = p;
  r.samples.assign(std::size_t(cfg.samples), 0.0);
  std::vector<char> simulated(std::size_t(cfg.samples), 0);
  std::vector<char> disagree(std::size_t(cfg.samples), 0);
  parallel_for(cfg.samples, cfg.threads, [&](long i) {
    const ScpSample sample = sample_three_with_scp(n, p, cfg.seed, std::uint64_t(i));
    const std::size_t slot = std::size_t(i);
    if (cfg.mode == Mode::simulate) {
      r.samples[slot] = double(excess(sample.omega));
      simulated[slot] = 1;
      return;
    }
    const LandmarkSet l = landmarks(sample.omega);
    const bool zero = sample.U < l.K;
    const bool check = cfg.mode == Mode::both || (stride > 0 && i % stride == 0);
    long e = 0;
    if (!zero && sample.U <= n - l.R && !check) {
      e = 1;
    } else if (!zero || check) {
      e = long(excess(sample.omega));
      simulated[slot] = 1;
      if (zero != (e == 0) || (!zero && sample.U <= n - l.R && e != 1)) disagree[slot] = 1;
    }
    r.samples[slot] = double(e);
  });
  r.simulated = std::accumulate(simulated.begin(), simulated.end(), 0L);
  r.mismatches = std::accumulate(disagree.begin(), disagree.end(), 0L);

  long zero = 0;
  long one = 0;
  for (double e : r.samples) {
    zero += e == 0.0;
    one += e == 1.0;
  }
  const double count = double(cfg.samples);
  const double p0 = zero / count;
  const double p1 = one / count;
  const double p2 = (count - zero - one) / count;
  const Summary s = summarize(r.samples);
  r.estimates = {{"P(E=0)", p0, proportion_standard_error(p0, cfg.samples)},
                 {"P(E=1)", p1, proportion_standard_error(p1, cfg.samples)},
                 {"P(E>1)", p2, proportion_standard_error(p2, cfg.samples)},
                 {"mean", s.mean, s.standard_error}};
  r.wall_seconds = seconds_since(start);
  return r;
}

MkGapResult estimate_mk_gap(const ExperimentConfig& cfg) {
  cfg.validate();
  const auto start = Clock::now();
  const long n = cfg.init.n;
  const double p = cfg.init.density();
  // Per sample: gap (or NaN when excluded), M/n (or NaN), status 0 ok / 1 no M / 2 fallback K.
  std::vector<double> gap(std::size_t(cfg.samples));
  std::vector<double> position(std::size_t(cfg.samples));
  std::vector<char> status(std::size_t(cfg.samples));
  parallel_for(cfg.samples, cfg.threads, [&](long i) {
    const LandmarkSet l = landmarks(sample_two(n, p, cfg.seed, std::uint64_t(i)));
    const std::size_t slot = std::size_t(i);
    const auto M = l.M();
    status[slot] = !M ? 1 : l.k_fallback ? 2 : 0;
    position[slot] = M ? double(*M) / double(n) : NAN;
    gap[slot] = M && !l.k_fallback ? double(*M - l.K) : NAN;
  });

  MkGapResult r;
  r.n = n;
  r.density = p;
  r.samples = cfg.samples;
  std::vector<double> gaps;
  std::vector<double> positions;
  for (std::size_t i = 0; i < status.size(); ++i) {
    r.undefined_m += status[i] == 1;
    r.fallback_k += status[i] == 2;
    if (status[i] == 0) gaps.push_back(gap[i]);
    if (status[i] != 1) positions.push_back(position[i]);
  }
  r.gap = summarize(gaps);
  r.gap_over_sqrt_n = r.gap.mean / std::sqrt(double(n));
  r.m_over_n = summarize(positions);
  r.wall_seconds = seconds_since(start);
  return r;
}

}  // namespace tasep
