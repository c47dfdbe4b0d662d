#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tasep/strings.hpp"

namespace tasep {

/// Heights S_0..S_n of the merge_low projection: +1 for a 0 (or 1), -1 for a 2.
struct HeightProfile {
  std::vector<long> values;

  long operator[](std::size_t k) const { return values[k]; }
  std::size_t length() const { return values.size() - 1; }
};

HeightProfile height_profile(const BiString& b);
HeightProfile height_profile(const TriString& t);

/// Landmarks of one configuration. All positions are 1-based.
///
/// The tracked window is {L+1, ..., n-R-1}. `levels[k]` is M_k, the leftmost
/// window position at height max - k, listed from the maximum down to the
/// height of position L+1, so the list is strictly decreasing and ends at
/// L+1. K is the rightmost k in {L+2, ..., n-R-1} with S_l < S_k - 1 for all
/// l in {L, ..., k-2}; when no such k exists K = L+2 and `k_fallback` is set.
struct LandmarkSet {
  long n = 0;
  long L = 0;
  long R = 0;
  std::optional<long> U;
  std::vector<long> levels;
  long K = 0;
  bool k_fallback = true;
  /// Index with levels[m] == K; absent when K is the fallback value.
  std::optional<std::size_t> m;

  std::optional<long> M() const {
    if (levels.empty()) return std::nullopt;
    return levels.front();
  }
};

/// Raised for inputs outside the theory's scope (two or more 1s, or a
/// predicate that needs the 1 on a string without one).
class ScopeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Accepts strings with zero or one symbol 1.
LandmarkSet landmarks(const TriString& t);
LandmarkSet landmarks(const BiString& b);

/// U < K, which holds exactly when the excess is zero. Requires exactly one 1.
bool predict_zero_excess(const TriString& t);

/// Value of (excess > 1) => (U > n - R). Requires exactly one 1.
bool check_excess_gt_one_implies_tail(const TriString& t);

/// Fraction of the zeros of b lying in positions 1..m, i.e. (m + S_m)/(n + S_n).
/// Under the uniform placement this is P(U <= m | backbone).
double u_position_cdf(const BiString& b, long m);

enum class Phase { bulk, edge, annihilated, unexplained };

const char* to_string(Phase p);

struct PhaseSnapshot {
  long L = 0;
  long R = 0;
  std::optional<long> U;
  std::vector<long> levels;
};

/// snapshots[j] describes Z^j(t); transitions[j][k] labels the move of M_k
/// from step j to j+1.
struct PhaseTrace {
  std::vector<PhaseSnapshot> snapshots;
  std::vector<std::vector<Phase>> transitions;

  std::size_t count(Phase p) const;
};

PhaseTrace track_phases(const TriString& t);

/// Key/value text records, one `key=value` per line.
std::string to_key_value(const LandmarkSet& l);
std::string to_key_value(const PhaseTrace& trace);

}  // namespace tasep
