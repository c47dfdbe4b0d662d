#pragma once

// Independent reference implementations used only by tests. None of these
// call into the library.

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace oracle {

/// One parallel step written straight from the rule: positions are 1-based.
/// A 012 triple becomes 021; any other increasing pair (i, i+1) swaps when
/// w_{i-1} >= w_i and w_{i+1} >= w_{i+2}, a comparison against position 0 or
/// n+1 always counting as satisfied.
inline std::string step(const std::string& s) {
  const int n = int(s.size());
  std::vector<int> w(n + 2, 0);
  for (int i = 0; i < n; ++i) w[i + 1] = s[i] - '0';
  std::string out = s;
  for (int i = 1; i < n; ++i) {
    if (w[i] >= w[i + 1]) continue;
    const bool special = i >= 2 && w[i - 1] == 0 && w[i] == 1 && w[i + 1] == 2;
    const bool left = i == 1 || w[i - 1] >= w[i];
    const bool right = i + 1 == n || w[i + 1] >= w[i + 2];
    if (special || (left && right)) {
      out[i - 1] = s[i];
      out[i] = s[i - 1];
    }
  }
  return out;
}

/// Every "02" replaced by "20" at once.
inline std::string step_binary(const std::string& s) {
  std::string out = s;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i] == '0' && s[i + 1] == '2') {
      out[i] = '2';
      out[i + 1] = '0';
    }
  }
  return out;
}

struct Run {
  std::string final;
  long steps = 0;
  std::vector<std::string> trajectory;
};

inline Run stabilize(const std::string& s, const std::function<std::string(const std::string&)>& f = step) {
  Run r{s, 0, {s}};
  for (;;) {
    const std::string next = f(r.final);
    if (next == r.final) return r;
    r.final = next;
    r.trajectory.push_back(next);
    ++r.steps;
  }
}

inline std::string pi1(std::string s) {
  for (char& c : s) c = c == '1' ? '0' : c;
  return s;
}

inline std::string pi2(std::string s) {
  for (char& c : s) c = c == '1' ? '2' : c;
  return s;
}

inline long excess(const std::string& s) { return stabilize(s).steps - stabilize(pi1(s), step_binary).steps; }

/// All strings of length n over the given digits, in lexicographic order.
inline std::vector<std::string> all_strings(int n, const std::string& digits) {
  std::vector<std::string> out{""};
  for (int k = 0; k < n; ++k) {
    std::vector<std::string> next;
    for (const auto& s : out)
      for (char d : digits) next.push_back(s + d);
    out.swap(next);
  }
  return out;
}

/// Exact path sums for the walk started at 2 over m steps (P(-1) = p):
/// survive = P(V_0 > m), hit_before = P(V_1 < m, V_0 > m),
/// first_moment = E(V_1 1{V_1 <= m}; V_0 > m).
struct StartTwoPaths {
  double survive = 0;
  double hit_before = 0;
  double first_moment = 0;
};

inline StartTwoPaths start_two_paths(double p, int m) {
  StartTwoPaths r;
  std::function<void(int, int, int, double)> go = [&](int x, int t, int v1, double prob) {
    if (x == 0) return;
    if (t == m) {
      r.survive += prob;
      if (v1 >= 0 && v1 < m) r.hit_before += prob;
      if (v1 >= 0) r.first_moment += prob * v1;
      return;
    }
    for (int d : {-1, 1}) {
      const int y = x + d;
      const int hit = v1 < 0 && y == 1 ? t + 1 : v1;
      go(y, t + 1, hit, prob * (d < 0 ? p : 1.0 - p));
    }
  };
  go(2, 0, -1, 1.0);
  return r;
}

/// Composite Simpson rule on [a, b] with an even number of panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, int panels) {
  const double h = (b - a) / panels;
  double s = f(a) + f(b);
  for (int i = 1; i < panels; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

/// E(chi_3)/2 by integrating x * density of chi_3 / 2.
inline double chi3_half_mean_by_quadrature() {
  const double c = std::sqrt(2.0 / M_PI);
  return 0.5 * simpson([&](double x) { return x * c * x * x * std::exp(-0.5 * x * x); }, 0.0, 40.0, 200000);
}

inline double normal_pdf(double x) { return std::exp(-0.5 * x * x) / std::sqrt(2.0 * M_PI); }
inline double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

/// Density of the argmax of B_s + mu s on [0, 1]: the product of the density
/// of the hitting time of a running maximum at t and the probability that
/// the remaining 1 - t never exceeds it, each from the reflection principle.
inline double argmax_density(double mu, double t) {
  const double a = std::sqrt(t);
  const double b = std::sqrt(1.0 - t);
  const double left = normal_pdf(mu * a) / a + mu * normal_cdf(mu * a);
  const double right = normal_pdf(mu * b) / b - mu * normal_cdf(-mu * b);
  return 2.0 * left * right;
}

/// E(argmax) by quadrature after t = u^2 near 0 and 1 - t = u^2 near 1.
inline double argmax_mean(double mu) {
  const auto half = [&](bool lower) {
    return simpson(
        [&](double u) {
          if (u == 0.0) return 0.0;
          const double t = lower ? u * u : 1.0 - u * u;
          return t * argmax_density(mu, t) * 2.0 * u;
        },
        0.0, std::sqrt(0.5), 200000);
  };
  return half(true) + half(false);
}

}  // namespace oracle
