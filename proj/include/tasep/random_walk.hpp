#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "tasep/strings.hpp"

namespace tasep {

/// Simple random walk with P(step = -1) = p and P(step = +1) = q = 1 - p.
struct WalkParams {
  double p = 0.5;

  double q() const { return 1.0 - p; }

  static WalkParams make(double p);
  /// p = (1 - lambda/sqrt(n)) / 2.
  static WalkParams critical(long n, double lambda);
};

/// Exact fraction, kept in lowest terms with a positive denominator.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den);
  double value() const { return double(num) / double(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// P_1(V_0 = 2k+1) = Catalan(k) p^{k+1} q^k, evaluated in log space.
double hitting_pmf(WalkParams w, long k);

/// Generating function of V_0 from 1: (1 - sqrt(1 - 4pq s^2)) / (2 q s), 0 at s = 0.
double hitting_gf(WalkParams w, double s);

/// P_1(V_0 = infinity): 0 for p >= 1/2, (q - p)/q otherwise.
double escape_probability(WalkParams w);
Rational escape_probability(Rational p);

/// P_1(V_0 > m).
double hitting_tail(WalkParams w, long m);

/// P_2(V_1 < m | V_0 > m), from the decomposition V_0 = V_1 + (independent
/// copy of V_0 from 1). The denominator is the exact P_2(V_0 > m).
double conditional_hit_probability(WalkParams w, long m);

/// E_2(V_1 1{V_1 <= m} | V_0 > m).
double conditional_hit_expectation(WalkParams w, long m);

/// Exact P_1(V_0 = j), j <= max_len, by depth-first enumeration of all
/// first-passage paths. Independent of the closed form; max_len <= 25.
std::map<long, double> enumerate_hitting_oracle(WalkParams w, int max_len);

/// Hitting laws tabulated on times 0..horizon, in long double.
class HittingTables {
 public:
  HittingTables(WalkParams w, long horizon);

  WalkParams params() const { return w_; }
  long horizon() const { return horizon_; }

  /// P_1(V_0 = t).
  long double pmf_from_one(long t) const { return t >= 0 && t <= horizon_ ? f1_[std::size_t(t)] : 0.0L; }
  /// P_1(V_0 > r); 1 for r < 1.
  long double tail_from_one(long r) const { return r <= 0 ? 1.0L : g1_[std::size_t(r)]; }
  /// P_2(V_0 > r) from the hitting-time theorem
  /// P_2(V_0 = t) = (2/t) C(t, t/2 - 1) p^{t/2+1} q^{t/2-1}.
  long double tail_from_two(long r) const { return r <= 1 ? 1.0L : g2_[std::size_t(r)]; }
  /// P_2(V_0 > r) as sum_{t <= r} P(V_1 = t) P_1(V_0 > r - t) + P_1(V_0 > r). O(r).
  long double tail_from_two_by_convolution(long r) const;

 private:
  WalkParams w_;
  long horizon_;
  std::vector<long double> f1_;
  std::vector<long double> g1_;
  std::vector<long double> g2_;
};

/// One realization of the excursion chain (tau_k, I_k) of a walk read
/// backwards from its leftmost maximum.
struct ExcursionRecord {
  long horizon = 0;
  std::vector<long> tau;        // tau_0 = 1, tau_1 = 2, ..., tau_{N+1}
  std::vector<int> indicators;  // I_0 .. I_N
  long N = 0;
  long total = 0;               // sum_{k=1..N} W_k

  /// W_k = tau_{k+1} - tau_k for k = 0..N.
  std::vector<long> lengths() const;
};

/// Runs the chain deterministically on a reversed walk (walk[0] = 0, walk
/// positive afterwards, horizon = walk.size() - 1 >= 2).
ExcursionRecord excursion_chain_from_walk(std::span<const long> walk);

/// Reversed walk S_M - S_{M-i}, i = 0..M-L, of a backbone. When K comes from
/// its defining set, total = M - K + 1; otherwise the chain exhausts the
/// horizon and total = M - L. Requires M - L >= 2.
ExcursionRecord excursion_chain_from_string(const BiString& b);

/// Samples the chain with its exact time-inhomogeneous transition laws:
/// with r steps left, P(I = 1) = P_2(V_1 > r | V_0 > r), and an excursion
/// that returns lasts V_1 + 1 steps with V_1 ~ P_2(V_1 = . | V_1 <= r < V_0).
ExcursionRecord simulate_excursion_chain(const HittingTables& tables, std::uint64_t seed, std::uint64_t index = 0);
ExcursionRecord simulate_excursion_chain(WalkParams w, long horizon, std::uint64_t seed, std::uint64_t index = 0);

/// CSV with columns k,t,pmf,tail where t = 2k+1, pmf = P_1(V_0 = t) and
/// tail = P_1(V_0 > t).
std::string pmf_table_csv(WalkParams w, long max_k);

/// CSV with columns record,k,tau,indicator,length; one row per chain index.
std::string excursion_csv(std::span<const ExcursionRecord> records);

}  // namespace tasep
