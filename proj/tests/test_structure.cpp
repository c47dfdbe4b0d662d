#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tasep/dynamics.hpp"
#include "tasep/sampling.hpp"
#include "tasep/structure.hpp"

using namespace tasep;

namespace {

const char* kFigure = "02020002020020200202";

// K straight from its definition, on the heights of the merge_low projection.
long brute_force_K(const std::string& s) {
  const int n = int(s.size());
  std::vector<long> S(n + 1, 0);
  for (int k = 1; k <= n; ++k) S[k] = S[k - 1] + (s[k - 1] == '2' ? -1 : 1);
  int L = 0;
  while (L < n && s[L] == '2') ++L;
  int R = 0;
  while (R < n && s[n - 1 - R] != '2') ++R;
  long best = -1;
  for (int k = L + 2; k <= n - R - 1; ++k) {
    bool ok = true;
    for (int l = L; l <= k - 2; ++l) ok = ok && S[l] < S[k] - 1;
    if (ok) best = k;
  }
  return best < 0 ? L + 2 : best;
}

}  // namespace

TEST_CASE("height profiles") {
  CHECK(height_profile(BiString::parse("002")).values == std::vector<long>{0, 1, 2, 1});
  CHECK(height_profile(BiString::parse("2")).values == std::vector<long>{0, -1});
  const std::vector<long> fig{0, 1, 0, 1, 0, 1, 2, 3, 2, 3, 2, 3, 4, 3, 4, 3, 4, 5, 4, 5, 4};
  CHECK(height_profile(BiString::parse(kFigure)).values == fig);
  CHECK(height_profile(TriString::parse("0122102")).values == height_profile(BiString::parse("0022002")).values);
}

TEST_CASE("landmark examples") {
  const LandmarkSet a = landmarks(TriString::parse("102"));
  CHECK(a.L == 0);
  CHECK(a.R == 0);
  CHECK(a.U == 1);
  CHECK(a.M() == 2);
  CHECK(a.K == 2);

  const LandmarkSet b = landmarks(TriString::parse("2010"));
  CHECK(b.L == 1);
  CHECK(b.R == 3);
  CHECK(b.U == 3);
  CHECK_FALSE(b.M());
  CHECK(b.K == 3);
  CHECK(b.k_fallback);

  const LandmarkSet f = landmarks(TriString::parse(kFigure));
  CHECK_FALSE(f.U);
  REQUIRE(f.levels.size() >= 3);
  CHECK(f.levels[0] == 17);
  CHECK(f.levels[1] == 12);
  CHECK(f.levels[2] == 7);
  CHECK(f.K == 7);
  CHECK(f.m == std::size_t(2));

  CHECK_THROWS_AS(landmarks(TriString::parse("0110")), ScopeError);
}

TEST_CASE("key/value records") {
  const std::string kv = to_key_value(landmarks(TriString::parse("2010")));
  CHECK(kv.find("L=1\n") != std::string::npos);
  CHECK(kv.find("M=none\n") != std::string::npos);
  CHECK(kv.find("K=3\n") != std::string::npos);
}

TEST_CASE("landmark invariants over all backbones, n <= 14") {
  for (int n = 1; n <= 14; ++n) {
    for (const std::string& s : oracle::all_strings(n, "02")) {
      const BiString b = BiString::parse(s);
      const LandmarkSet l = landmarks(b);
      const HeightProfile S = height_profile(b);
      REQUIRE(l.K == brute_force_K(s));
      REQUIRE(l.K >= l.L + 2);
      if (l.K > l.L + 2) {
        REQUIRE(s[l.K - 3] == '0');
        REQUIRE(s[l.K - 2] == '0');
        REQUIRE(s[l.K - 1] == '0');
        REQUIRE(s[l.K] == '2');
      }
      for (std::size_t k = 0; k < l.levels.size(); ++k) {
        const long Mk = l.levels[k];
        REQUIRE(Mk >= l.L + 1);
        REQUIRE(Mk <= n - l.R - 1);
        if (k > 0) REQUIRE(Mk < l.levels[k - 1]);
        for (long j = l.L; j < Mk; ++j) REQUIRE(S[std::size_t(j)] < S[std::size_t(Mk)]);
      }
      if (l.M()) {
        REQUIRE(l.K <= *l.M() + 1);
        if (!l.k_fallback) {
          REQUIRE(l.K <= *l.M());
          REQUIRE(l.m);
          REQUIRE(l.levels[*l.m] == l.K);
          for (std::size_t k = 1; k <= *l.m; ++k) REQUIRE(l.levels[k - 1] - l.levels[k] >= 3);
        }
      }
    }
  }
}

TEST_CASE("zero-excess predicate examples") {
  CHECK(predict_zero_excess(TriString::parse("102")));
  CHECK_FALSE(predict_zero_excess(TriString::parse("012")));
  CHECK_FALSE(predict_zero_excess(TriString::parse("2010")));
  CHECK(check_excess_gt_one_implies_tail(TriString::parse("012")));
  CHECK(check_excess_gt_one_implies_tail(TriString::parse("102")));
  CHECK_THROWS_AS(predict_zero_excess(TriString::parse("0202")), ScopeError);
}

TEST_CASE("switching position characterizes zero excess, exhaustive n <= 10") {
  for (int n = 1; n <= 10; ++n) {
    for (const std::string& s : oracle::all_strings(n, "02")) {
      for (int u = 0; u < n; ++u) {
        if (s[u] != '0') continue;
        std::string w = s;
        w[u] = '1';
        const TriString t = TriString::parse(w);
        const long e = oracle::excess(w);
        REQUIRE(predict_zero_excess(t) == (e == 0));
        REQUIRE(check_excess_gt_one_implies_tail(t));
      }
    }
    // The all-2 backbone becomes "12...2".
    const TriString t = TriString::parse("1" + std::string(n - 1, '2'));
    REQUIRE(predict_zero_excess(t) == (oracle::excess(t.str()) == 0));
  }
}

TEST_CASE("position law of the second class particle") {
  CHECK(u_position_cdf(BiString::parse("002"), 2) == doctest::Approx(1.0));
  CHECK(u_position_cdf(BiString::parse("002"), 0) == 0.0);
  CHECK(u_position_cdf(BiString::parse("20"), 1) == 0.0);
  CHECK(u_position_cdf(BiString::parse("0202"), 1) == doctest::Approx(0.5));
  CHECK_THROWS(u_position_cdf(BiString::parse("22"), 1));
  CHECK_THROWS(u_position_cdf(BiString::parse("02"), 3));
}

TEST_CASE("phase traces") {
  const PhaseTrace fig = track_phases(TriString::parse(kFigure));
  CHECK(fig.count(Phase::unexplained) == 0);
  CHECK(fig.count(Phase::bulk) > 0);
  for (std::size_t j = 0; j + 1 < fig.snapshots.size(); ++j) {
    for (std::size_t k = 0; k < fig.transitions[j].size(); ++k) {
      if (fig.transitions[j][k] == Phase::bulk) {
        REQUIRE(fig.snapshots[j + 1].levels[k] == fig.snapshots[j].levels[k] - 1);
      }
      if (fig.transitions[j][k] == Phase::edge) {
        REQUIRE(fig.snapshots[j + 1].levels[k] == fig.snapshots[j].levels[k] + 1);
      }
    }
  }
  const PhaseTrace short_trace = track_phases(TriString::parse("2220"));
  CHECK(short_trace.snapshots.size() <= 2);
  CHECK(short_trace.count(Phase::unexplained) == 0);
  const PhaseTrace none = track_phases(TriString::parse("210"));
  CHECK(none.transitions.empty());
}

TEST_CASE("phase completeness on random single-1 strings") {
  std::mt19937_64 gen(3);
  std::uniform_int_distribution<long> len(2, 200);
  std::uniform_real_distribution<double> dens(0.2, 0.8);
  long transitions = 0;
  for (int i = 0; i < 10000; ++i) {
    const ScpSample s = sample_three_with_scp(len(gen), dens(gen), 99, std::uint64_t(i));
    const PhaseTrace trace = track_phases(s.omega);
    REQUIRE(trace.count(Phase::unexplained) == 0);
    transitions += long(trace.count(Phase::bulk) + trace.count(Phase::edge) + trace.count(Phase::annihilated));
  }
  CHECK(transitions > 0);
}
