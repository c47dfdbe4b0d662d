#include "tasep/structure.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "tasep/dynamics.hpp"

namespace tasep {
namespace {

template <class IsZero>
HeightProfile heights(std::span<const Symbol> s, IsZero is_zero) {
  HeightProfile h;
  h.values.resize(s.size() + 1);
  h.values[0] = 0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    h.values[k + 1] = h.values[k] + (is_zero(s[k]) ? 1 : -1);
  }
  return h;
}

bool low(Symbol c) { return c < 2; }

LandmarkSet compute_landmarks(std::span<const Symbol> s, std::optional<long> u) {
  const long n = long(s.size());
  LandmarkSet out;
  out.n = n;
  out.U = u;

  while (out.L < n && !low(s[std::size_t(out.L)])) ++out.L;
  while (out.R < n && low(s[std::size_t(n - 1 - out.R)])) ++out.R;

  const HeightProfile S = heights(s, low);
  const long lo = out.L + 1;
  const long hi = n - out.R - 1;

  if (lo <= hi) {
    // First visits of each level above S_{L+1}; the walk moves by +-1 so every
    // level between S_{L+1} and the window maximum is hit.
    const long base = S[std::size_t(lo)];
    std::vector<long> first_visit{lo};
    for (long j = lo + 1; j <= hi; ++j) {
      if (S[std::size_t(j)] > base + long(first_visit.size()) - 1) first_visit.push_back(j);
    }
    out.levels.assign(first_visit.rbegin(), first_visit.rend());
  }

  // K: rightmost k with max_{L <= l <= k-2} S_l < S_k - 1.
  long prefix_max = std::numeric_limits<long>::min();
  for (long k = out.L + 2; k <= hi; ++k) {
    prefix_max = std::max(prefix_max, S[std::size_t(k - 2)]);
    if (prefix_max < S[std::size_t(k)] - 1) {
      out.K = k;
      out.k_fallback = false;
    }
  }
  if (out.k_fallback) {
    out.K = out.L + 2;
  } else {
    const long top = S[std::size_t(out.levels.front())];
    out.m = std::size_t(top - S[std::size_t(out.K)]);
  }
  return out;
}

std::optional<long> position_of_one(const TriString& t) {
  std::optional<long> u;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] == 1) {
      if (u) throw ScopeError("landmarks are defined for strings with at most one 1");
      u = long(i) + 1;
    }
  }
  return u;
}

long require_one(const LandmarkSet& l) {
  if (!l.U) throw ScopeError("predicate needs exactly one 1 in the string");
  return *l.U;
}

std::string join(const std::vector<long>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

std::string opt(const std::optional<long>& v) { return v ? std::to_string(*v) : "none"; }

}  // namespace

HeightProfile height_profile(const BiString& b) {
  return heights(b.symbols(), [](Symbol c) { return c == 0; });
}

HeightProfile height_profile(const TriString& t) { return heights(t.symbols(), low); }

LandmarkSet landmarks(const TriString& t) { return compute_landmarks(t.symbols(), position_of_one(t)); }

LandmarkSet landmarks(const BiString& b) { return compute_landmarks(b.symbols(), std::nullopt); }

bool predict_zero_excess(const TriString& t) {
  const LandmarkSet l = landmarks(t);
  return require_one(l) < l.K;
}

bool check_excess_gt_one_implies_tail(const TriString& t) {
  const LandmarkSet l = landmarks(t);
  const long u = require_one(l);
  return excess(t) <= 1 || u > l.n - l.R;
}

double u_position_cdf(const BiString& b, long m) {
  const long n = long(b.size());
  if (m < 0 || m > n) throw std::invalid_argument("u_position_cdf: m outside [0, n]");
  const HeightProfile S = height_profile(b);
  const long zeros_total = (n + S[std::size_t(n)]) / 2;
  if (zeros_total == 0) throw std::invalid_argument("u_position_cdf: backbone has no 0");
  return double(m + S[std::size_t(m)]) / double(n + S[std::size_t(n)]);
}

const char* to_string(Phase p) {
  switch (p) {
    case Phase::bulk: return "bulk";
    case Phase::edge: return "edge";
    case Phase::annihilated: return "annihilated";
    case Phase::unexplained: return "unexplained";
  }
  return "?";
}

std::size_t PhaseTrace::count(Phase p) const {
  std::size_t c = 0;
  for (const auto& step : transitions) c += std::size_t(std::count(step.begin(), step.end(), p));
  return c;
}

PhaseTrace track_phases(const TriString& t) {
  PhaseTrace trace;
  auto snapshot = [](const TriString& s) {
    LandmarkSet l = landmarks(s);
    return PhaseSnapshot{l.L, l.R, l.U, std::move(l.levels)};
  };

  TriString current = t;
  trace.snapshots.push_back(snapshot(current));
  while (true) {
    TriString next = step_three(current);
    if (next == current) break;
    trace.snapshots.push_back(snapshot(next));
    const PhaseSnapshot& before = trace.snapshots[trace.snapshots.size() - 2];
    const PhaseSnapshot& after = trace.snapshots.back();

    std::vector<Phase> labels;
    const long L = before.L;
    for (std::size_t k = 0; k < before.levels.size(); ++k) {
      const long pos = before.levels[k];
      // M_{-1} does not exist; it never blocks the edge move of M_0.
      const long prev = k == 0 ? std::numeric_limits<long>::max() : before.levels[k - 1];
      Phase label = Phase::unexplained;
      if (k < after.levels.size()) {
        const long moved = after.levels[k] - pos;
        if (moved == -1 && pos >= L + 2) label = Phase::bulk;
        else if (moved == 1 && pos == L + 1 && prev > L + 2) label = Phase::edge;
      } else if (pos == L + 1 && (k == 0 || prev == L + 2)) {
        label = Phase::annihilated;
      }
      labels.push_back(label);
    }
    // A level that appears from nowhere is not one of the three phases.
    for (std::size_t k = before.levels.size(); k < after.levels.size(); ++k) {
      labels.push_back(Phase::unexplained);
    }
    trace.transitions.push_back(std::move(labels));
    current = std::move(next);
  }
  return trace;
}

std::string to_key_value(const LandmarkSet& l) {
  std::ostringstream os;
  os << "n=" << l.n << '\n'
     << "L=" << l.L << '\n'
     << "R=" << l.R << '\n'
     << "U=" << opt(l.U) << '\n'
     << "M=" << opt(l.M()) << '\n'
     << "levels=" << join(l.levels) << '\n'
     << "K=" << l.K << '\n'
     << "K_fallback=" << (l.k_fallback ? "true" : "false") << '\n'
     << "m=" << (l.m ? std::to_string(*l.m) : "none") << '\n';
  return os.str();
}

std::string to_key_value(const PhaseTrace& trace) {
  std::ostringstream os;
  os << "steps=" << trace.transitions.size() << '\n';
  for (std::size_t j = 0; j < trace.snapshots.size(); ++j) {
    const PhaseSnapshot& s = trace.snapshots[j];
    os << "step=" << j << " L=" << s.L << " R=" << s.R << " U=" << opt(s.U) << " levels=" << join(s.levels);
    if (j < trace.transitions.size()) {
      os << " phases=";
      for (std::size_t k = 0; k < trace.transitions[j].size(); ++k) {
        if (k) os << ',';
        os << to_string(trace.transitions[j][k]);
      }
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace tasep
