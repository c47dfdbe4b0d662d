#include "tasep/random_walk.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "tasep/rng.hpp"
#include "tasep/structure.hpp"

namespace tasep {
namespace {

void require_horizon(long m, long min_value, const char* what) {
  if (m < min_value) throw std::invalid_argument(std::string(what) + ": argument below " + std::to_string(min_value));
}

std::string fmt12(long double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12Lg", v);
  return buf;
}

// Numerator, denominator and first moment of the start-at-2 decomposition:
//   hit   = sum_{t odd <  m} f(t) G(m - t)
//   all   = sum_{t odd <= m} f(t) G(m - t) + G(m)        = P_2(V_0 > m)
//   first = sum_{t odd <= m} t f(t) G(m - t)
struct StartTwoSums {
  long double hit = 0;
  long double all = 0;
  long double first = 0;
};

StartTwoSums start_two_sums(WalkParams w, long m) {
  const HittingTables tables(w, m);
  StartTwoSums s;
  long double within = 0;
  for (long t = 1; t <= m; t += 2) {
    const long double term = tables.pmf_from_one(t) * tables.tail_from_one(m - t);
    if (t < m) s.hit += term;
    within += term;
    s.first += (long double)t * term;
  }
  s.all = within + tables.tail_from_one(m);
  return s;
}

}  // namespace

WalkParams WalkParams::make(double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("walk parameter p must lie in (0,1)");
  return WalkParams{p};
}

WalkParams WalkParams::critical(long n, double lambda) {
  if (n < 1) throw std::invalid_argument("critical walk needs n >= 1");
  return make(0.5 * (1.0 - lambda / std::sqrt(double(n))));
}

Rational Rational::make(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  return g ? Rational{num / g, den / g} : Rational{0, 1};
}

double hitting_pmf(WalkParams w, long k) {
  if (k < 0) return 0.0;
  const long double kk = k;
  const long double log_catalan = std::lgamma(2 * kk + 1) - std::lgamma(kk + 1) - std::lgamma(kk + 2);
  return double(std::exp(log_catalan + (kk + 1) * std::log((long double)w.p) + kk * std::log((long double)w.q())));
}

double hitting_gf(WalkParams w, double s) {
  if (s < 0.0 || s > 1.0) throw std::invalid_argument("hitting_gf: s outside [0,1]");
  if (s == 0.0) return 0.0;
  return (1.0 - std::sqrt(1.0 - 4.0 * w.p * w.q() * s * s)) / (2.0 * w.q() * s);
}

double escape_probability(WalkParams w) {
  if (w.p >= 0.5) return 0.0;
  return (w.q() - w.p) / w.q();
}

Rational escape_probability(Rational p) {
  if (p.num <= 0 || p.num >= p.den) throw std::invalid_argument("escape_probability: p outside (0,1)");
  if (2 * p.num >= p.den) return Rational{0, 1};
  // (q - p)/q with q = (den - num)/den.
  return Rational::make(p.den - 2 * p.num, p.den - p.num);
}

double hitting_tail(WalkParams w, long m) {
  if (m < 0) throw std::invalid_argument("hitting_tail: m < 0");
  if (m == 0) return 1.0;
  return double(HittingTables(w, m).tail_from_one(m));
}

double conditional_hit_probability(WalkParams w, long m) {
  require_horizon(m, 2, "conditional_hit_probability");
  const StartTwoSums s = start_two_sums(w, m);
  return double(s.hit / s.all);
}

double conditional_hit_expectation(WalkParams w, long m) {
  require_horizon(m, 2, "conditional_hit_expectation");
  const StartTwoSums s = start_two_sums(w, m);
  return double(s.first / s.all);
}

std::map<long, double> enumerate_hitting_oracle(WalkParams w, int max_len) {
  if (max_len > 25) throw std::invalid_argument("enumerate_hitting_oracle: max_len > 25");
  std::map<long, double> table;
  // Explicit stack of (position, time, probability).
  struct Node {
    int x;
    int t;
    double prob;
  };
  std::vector<Node> stack{{1, 0, 1.0}};
  while (!stack.empty()) {
    const Node node = stack.back();
    stack.pop_back();
    if (node.t >= max_len || node.x > max_len - node.t) continue;
    if (node.x == 1) {
      table[node.t + 1] += node.prob * w.p;
    } else {
      stack.push_back({node.x - 1, node.t + 1, node.prob * w.p});
    }
    stack.push_back({node.x + 1, node.t + 1, node.prob * w.q()});
  }
  return table;
}

HittingTables::HittingTables(WalkParams w, long horizon) : w_(w), horizon_(horizon) {
  require_horizon(horizon, 0, "HittingTables");
  const long double p = w.p;
  const long double pq = p * (1.0L - p);
  const std::size_t size = std::size_t(horizon) + 1;
  f1_.assign(size, 0.0L);
  g1_.assign(size, 1.0L);
  g2_.assign(size, 1.0L);

  // Catalan recurrence: f(2k+3) = f(2k+1) * pq * 2(2k+1)/(k+2).
  long double term = p;
  for (long k = 0; 2 * k + 1 <= horizon; ++k) {
    f1_[std::size_t(2 * k + 1)] = term;
    term *= pq * 2.0L * (2 * k + 1) / (k + 2);
  }
  long double mass = 0;
  for (std::size_t t = 1; t < size; ++t) {
    mass += f1_[t];
    g1_[t] = 1.0L - mass;
  }

  // P_2(V_0 = 2j): f2(2) = p^2, f2(2j+2) = f2(2j) * pq * 2(2j+1)/(j+2).
  std::vector<long double> f2(size, 0.0L);
  term = p * p;
  for (long j = 1; 2 * j <= horizon; ++j) {
    f2[std::size_t(2 * j)] = term;
    term *= pq * 2.0L * (2 * j + 1) / (j + 2);
  }
  mass = 0;
  for (std::size_t t = 1; t < size; ++t) {
    mass += f2[t];
    g2_[t] = 1.0L - mass;
  }
}

long double HittingTables::tail_from_two_by_convolution(long r) const {
  if (r <= 1) return 1.0L;
  long double sum = tail_from_one(r);
  for (long t = 1; t <= r; t += 2) sum += pmf_from_one(t) * tail_from_one(r - t);
  return sum;
}

std::vector<long> ExcursionRecord::lengths() const {
  std::vector<long> w;
  for (std::size_t k = 0; k + 1 < tau.size(); ++k) w.push_back(tau[k + 1] - tau[k]);
  return w;
}

ExcursionRecord excursion_chain_from_walk(std::span<const long> walk) {
  if (walk.size() < 3) throw std::invalid_argument("excursion chain needs horizon >= 2");
  if (walk[0] != 0) throw std::invalid_argument("reversed walk must start at 0");
  const long H = long(walk.size()) - 1;
  for (long i = 1; i <= H; ++i) {
    if (std::labs(walk[std::size_t(i)] - walk[std::size_t(i - 1)]) != 1) throw std::invalid_argument("walk steps must be +-1");
    if (walk[std::size_t(i)] <= 0) throw std::invalid_argument("reversed walk must stay positive");
  }
  std::vector<long> suffix_min(walk.size());
  suffix_min[std::size_t(H)] = walk[std::size_t(H)];
  for (long i = H - 1; i >= 0; --i) suffix_min[std::size_t(i)] = std::min(walk[std::size_t(i)], suffix_min[std::size_t(i + 1)]);

  ExcursionRecord rec;
  rec.horizon = H;
  rec.tau = {1, 2};
  rec.indicators = {1};
  for (std::size_t k = 1;; ++k) {
    const long t = rec.tau[k];
    int stays = 1;
    if (t < H) stays = suffix_min[std::size_t(t + 1)] >= walk[std::size_t(t)] ? 1 : 0;
    rec.indicators.push_back(stays);
    if (stays && rec.indicators[k - 1]) {
      rec.N = long(k);
      rec.tau.push_back(t + 1);
      break;
    }
    if (stays) {
      rec.tau.push_back(t + 1);
    } else {
      long i = t + 1;
      while (walk[std::size_t(i)] != walk[std::size_t(t)] - 1) ++i;
      rec.tau.push_back(i + 1);
    }
  }
  rec.total = rec.tau.back() - rec.tau[1];
  return rec;
}

ExcursionRecord excursion_chain_from_string(const BiString& b) {
  const LandmarkSet l = landmarks(b);
  if (!l.M()) throw std::invalid_argument("excursion_chain_from_string: M undefined");
  const long M = *l.M();
  if (M - l.L < 2) throw std::invalid_argument("excursion_chain_from_string: M - L < 2");
  const HeightProfile S = height_profile(b);
  std::vector<long> walk(std::size_t(M - l.L) + 1);
  for (long i = 0; i <= M - l.L; ++i) walk[std::size_t(i)] = S[std::size_t(M)] - S[std::size_t(M - i)];
  return excursion_chain_from_walk(walk);
}

ExcursionRecord simulate_excursion_chain(const HittingTables& tables, std::uint64_t seed, std::uint64_t index) {
  const long H = tables.horizon();
  require_horizon(H, 2, "simulate_excursion_chain");
  CounterRng rng({seed, index, Stream::excursion});

  ExcursionRecord rec;
  rec.horizon = H;
  rec.tau = {1, 2};
  rec.indicators = {1};
  for (std::size_t k = 1;; ++k) {
    const long t = rec.tau[k];
    const long r = H - t;
    int stays = 1;
    if (r > 0) {
      const long double keep = tables.tail_from_one(r) / tables.tail_from_two(r);
      stays = (long double)rng.uniform01() < keep ? 1 : 0;
    }
    rec.indicators.push_back(stays);
    if (stays && rec.indicators[k - 1]) {
      rec.N = long(k);
      rec.tau.push_back(t + 1);
      break;
    }
    if (stays) {
      rec.tau.push_back(t + 1);
      continue;
    }
    // Return time V_1 ~ f(s) G(r - s) over odd s <= r, normalized by
    // P_2(V_1 <= r < V_0) = P_2(V_0 > r) - P_1(V_0 > r).
    const long double z = tables.tail_from_two(r) - tables.tail_from_one(r);
    const long double target = (long double)rng.uniform01() * z;
    long double acc = 0;
    long chosen = -1;
    for (long s = 1; s <= r; s += 2) {
      const long double weight = tables.pmf_from_one(s) * tables.tail_from_one(r - s);
      if (weight > 0) chosen = s;
      acc += weight;
      if (acc > target) break;
    }
    rec.tau.push_back(t + chosen + 1);
  }
  rec.total = rec.tau.back() - rec.tau[1];
  return rec;
}

ExcursionRecord simulate_excursion_chain(WalkParams w, long horizon, std::uint64_t seed, std::uint64_t index) {
  return simulate_excursion_chain(HittingTables(w, horizon), seed, index);
}

std::string pmf_table_csv(WalkParams w, long max_k) {
  const HittingTables tables(w, 2 * max_k + 1);
  std::ostringstream os;
  os << "k,t,pmf,tail\n";
  for (long k = 0; k <= max_k; ++k) {
    const long t = 2 * k + 1;
    os << k << ',' << t << ',' << fmt12(hitting_pmf(w, k)) << ',' << fmt12(tables.tail_from_one(t)) << '\n';
  }
  return os.str();
}

std::string excursion_csv(std::span<const ExcursionRecord> records) {
  std::ostringstream os;
  os << "record,k,tau,indicator,length\n";
  for (std::size_t r = 0; r < records.size(); ++r) {
    const ExcursionRecord& rec = records[r];
    const std::vector<long> w = rec.lengths();
    for (std::size_t k = 0; k < rec.indicators.size(); ++k) {
      os << r << ',' << k << ',' << rec.tau[k] << ',' << rec.indicators[k] << ',' << w[k] << '\n';
    }
  }
  return os.str();
}

}  // namespace tasep
