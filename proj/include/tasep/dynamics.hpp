#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tasep/strings.hpp"

namespace tasep {

template <Alphabet A>
struct StabilizationOutcome {
  Configuration<A> final;
  std::size_t steps = 0;
  /// steps + 1 entries when recorded: input first, final last.
  std::optional<std::vector<Configuration<A>>> trajectory;
};

using BiOutcome = StabilizationOutcome<Alphabet::binary>;
using TriOutcome = StabilizationOutcome<Alphabet::ternary>;

/// One parallel update of the two-type dynamics: every "02" becomes "20".
BiString step_two(const BiString& b);

/// One parallel update of the three-type dynamics.
///
/// A pair (i, i+1) with w_i < w_{i+1} swaps when w_{i-1} >= w_i and
/// w_{i+1} >= w_{i+2}, with the out-of-range comparisons counted as satisfied.
/// Inside "012" the "12" swaps, so "012" -> "021". All decisions read the
/// pre-step string; admissible swaps never overlap.
TriString step_three(const TriString& t);

/// Iterates the two-type step to its fixed point. `steps` counts the
/// change-producing applications, at most n - 1.
BiOutcome stabilize_two(const BiString& b, bool record_trajectory = false);

TriOutcome stabilize_three(const TriString& t, bool record_trajectory = false);

/// T^(2) in O(n) without stepping: scanning left to right, each 2 preceded by
/// z > 0 zeros finishes at time max(previous + 1, z).
std::size_t stabilization_time_two(const BiString& b);

/// T^(2) of the merge_low projection of t, computed without materializing it.
std::size_t projected_stabilization_time(const TriString& t);

/// T_n(t) - T_n^(2)(project(t, merge_low)); never negative.
std::size_t excess(const TriString& t);

namespace reference {

// Full-scan steppers: apply the single-step map until nothing changes.
BiOutcome stabilize_two(const BiString& b, bool record_trajectory = false);
TriOutcome stabilize_three(const TriString& t, bool record_trajectory = false);

}  // namespace reference

}  // namespace tasep
