#include "tasep/dynamics.hpp"

#include <cassert>
#include <cstdint>
#include <utility>

namespace tasep {
namespace {

struct BinaryRule {
  bool operator()(const std::vector<Symbol>& s, std::size_t i) const {
    return s[i] == 0 && s[i + 1] == 2;
  }
};

struct TernaryRule {
  bool operator()(const std::vector<Symbol>& s, std::size_t i) const {
    const Symbol a = s[i];
    const Symbol b = s[i + 1];
    if (a >= b) return false;
    const bool left_ok = i == 0 || s[i - 1] >= a || (s[i - 1] == 0 && a == 1 && b == 2);
    const bool right_ok = i + 2 >= s.size() || b >= s[i + 2];
    return left_ok && right_ok;
  }
};

template <class Rule>
std::vector<Symbol> full_scan_step(const std::vector<Symbol>& s, Rule rule) {
  std::vector<Symbol> out = s;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (rule(s, i)) std::swap(out[i], out[i + 1]);
  }
  return out;
}

// Worklist stepper: only pairs within distance 2 of a swap can change their
// status between steps, so the cost is O(n + total swaps).
template <Alphabet A, class Rule>
StabilizationOutcome<A> run_worklist(const Configuration<A>& input, Rule rule, bool record) {
  std::vector<Symbol> s(input.symbols().begin(), input.symbols().end());
  const std::size_t n = s.size();
  StabilizationOutcome<A> outcome;
  if (record) outcome.trajectory.emplace().push_back(input);

  std::vector<std::uint32_t> candidates;
  std::vector<std::uint32_t> next;
  std::vector<std::uint32_t> swaps;
  std::vector<std::uint8_t> queued(n, 0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (s[i] < s[i + 1]) candidates.push_back(std::uint32_t(i));
  }

  while (true) {
    swaps.clear();
    for (std::uint32_t i : candidates) {
      queued[i] = 0;
      if (rule(s, i)) swaps.push_back(i);
    }
    if (swaps.empty()) break;
    for (std::uint32_t i : swaps) std::swap(s[i], s[i + 1]);
    ++outcome.steps;
    if (record) outcome.trajectory->push_back(Configuration<A>::unchecked(s));

    next.clear();
    for (std::uint32_t i : swaps) {
      const std::size_t lo = i >= 2 ? i - 2 : 0;
      const std::size_t hi = std::min<std::size_t>(i + 2, n - 2);
      for (std::size_t j = lo; j <= hi; ++j) {
        if (!queued[j] && s[j] < s[j + 1]) {
          queued[j] = 1;
          next.push_back(std::uint32_t(j));
        }
      }
    }
    candidates.swap(next);
  }
  outcome.final = Configuration<A>::unchecked(std::move(s));
  return outcome;
}

template <Alphabet A, class Rule>
StabilizationOutcome<A> run_full_scan(const Configuration<A>& input, Rule rule, bool record) {
  StabilizationOutcome<A> outcome;
  if (record) outcome.trajectory.emplace().push_back(input);
  std::vector<Symbol> s(input.symbols().begin(), input.symbols().end());
  while (true) {
    std::vector<Symbol> t = full_scan_step(s, rule);
    if (t == s) break;
    s = std::move(t);
    ++outcome.steps;
    if (record) outcome.trajectory->push_back(Configuration<A>::unchecked(s));
  }
  outcome.final = Configuration<A>::unchecked(std::move(s));
  return outcome;
}

template <class IsHole>
std::size_t queue_time(std::span<const Symbol> s, IsHole is_zero) {
  std::size_t zeros = 0;
  std::size_t t = 0;
  for (Symbol c : s) {
    if (is_zero(c)) {
      ++zeros;
    } else if (zeros > 0) {
      t = std::max(t + 1, zeros);
    }
  }
  return t;
}

}  // namespace

BiString step_two(const BiString& b) {
  std::vector<Symbol> s(b.symbols().begin(), b.symbols().end());
  return BiString::unchecked(full_scan_step(s, BinaryRule{}));
}

TriString step_three(const TriString& t) {
  std::vector<Symbol> s(t.symbols().begin(), t.symbols().end());
  return TriString::unchecked(full_scan_step(s, TernaryRule{}));
}

BiOutcome stabilize_two(const BiString& b, bool record_trajectory) {
  return run_worklist(b, BinaryRule{}, record_trajectory);
}

TriOutcome stabilize_three(const TriString& t, bool record_trajectory) {
  return run_worklist(t, TernaryRule{}, record_trajectory);
}

std::size_t stabilization_time_two(const BiString& b) {
  return queue_time(b.symbols(), [](Symbol c) { return c == 0; });
}

std::size_t projected_stabilization_time(const TriString& t) {
  return queue_time(t.symbols(), [](Symbol c) { return c < 2; });
}

std::size_t excess(const TriString& t) {
  const std::size_t full = stabilize_three(t).steps;
  const std::size_t projected = projected_stabilization_time(t);
  assert(full >= projected);
  return full - projected;
}

namespace reference {

BiOutcome stabilize_two(const BiString& b, bool record_trajectory) {
  return run_full_scan(b, BinaryRule{}, record_trajectory);
}

TriOutcome stabilize_three(const TriString& t, bool record_trajectory) {
  return run_full_scan(t, TernaryRule{}, record_trajectory);
}

}  // namespace reference
}  // namespace tasep
