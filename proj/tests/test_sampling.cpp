#include <cmath>
#include <map>

#include "doctest.h"
#include "tasep/rng.hpp"
#include "tasep/sampling.hpp"
#include "tasep/stats.hpp"
#include "tasep/structure.hpp"

using namespace tasep;

TEST_CASE("philox known answers") {
  CHECK(philox4x64_10({0, 0, 0, 0}, {0, 0}) ==
        Block{0x16554d9eca36314cULL, 0xdb20fe9d672d0fdcULL, 0xd7e772cee186176bULL, 0x7e68b68aec7ba23bULL});
  const std::uint64_t ones = ~0ULL;
  CHECK(philox4x64_10({ones, ones, ones, ones}, {ones, ones}) ==
        Block{0x87b092c3013fe90bULL, 0x438c3c67be8d0224ULL, 0x9cc7d7c69cd777b6ULL, 0xa09caebf594f0ba0ULL});
  CHECK(philox4x64_10({0x243f6a8885a308d3ULL, 0x13198a2e03707344ULL, 0xa4093822299f31d0ULL, 0x082efa98ec4e6c89ULL},
                      {0x452821e638d01377ULL, 0xbe5466cf34e90c6cULL}) ==
        Block{0xa528f45403e61d95ULL, 0x38c72dbd566e9788ULL, 0xa5a1610e72fd18b5ULL, 0x57bd43b5e52b7fe6ULL});
  CHECK(philox4x64_10({1, 0, 0, 0}, {0x0123456789abcdefULL, 42}) ==
        Block{0x66516e75b3bf9e6eULL, 0x9139ca60866d5353ULL, 0x2476827e52f6179aULL, 0x6e3c07c043576d4dULL});
}

TEST_CASE("stream layout") {
  CounterRng rng({42, 7, Stream::excursion});
  const Block first = philox4x64_10({0, 7, 0, 0}, {42, 4});
  const Block second = philox4x64_10({1, 7, 0, 0}, {42, 4});
  for (std::uint64_t w : first) CHECK(rng() == w);
  CHECK(rng() == second[0]);
}

TEST_CASE("normal draws have standard moments") {
  CounterRng rng({1, 0, Stream::brownian});
  const long n = 1000000;
  std::vector<double> x(n);
  for (auto& v : x) v = rng.normal();
  const Summary s = summarize(x);
  CHECK(std::abs(s.mean) < 0.005);
  CHECK(std::abs(s.variance - 1.0) < 0.005);
  const double ks = ks_statistic(x, [](double t) { return 0.5 * std::erfc(-t / std::sqrt(2.0)); });
  CHECK(ks < 0.002);
}

TEST_CASE("uniform index is unbiased enough") {
  CounterRng rng({5, 0, Stream::second_class});
  std::vector<long> count(3);
  for (int i = 0; i < 300000; ++i) ++count[rng.below(3)];
  for (long c : count) CHECK(std::abs(c - 100000) < 5 * std::sqrt(300000 * (1.0 / 3) * (2.0 / 3)));
}

TEST_CASE("critical densities") {
  CHECK(critical_density(100, 0, Convention::minus) == 0.5);
  CHECK(critical_density(100, 1, Convention::minus) == doctest::Approx(0.45));
  CHECK(critical_density(100, 1, Convention::plus) == doctest::Approx(0.55));
  CHECK_THROWS_AS(critical_density(4, 5, Convention::plus), DensityError);
  InitialCondition ic{100, Scaling::fixed, 1.5, 0.0};
  CHECK_THROWS_AS(ic.density(), DensityError);
}

TEST_CASE("bernoulli backbones") {
  const BiString a = sample_two(100000, 0.5, 9);
  const double frac = double(a.count(2)) / 100000.0;
  CHECK(std::abs(frac - 0.5) < 3 * std::sqrt(0.25 / 100000));
  CHECK(sample_two(1000, 0.3, 4, 2) == sample_two(1000, 0.3, 4, 2));
  CHECK_FALSE(sample_two(1000, 0.3, 4, 2) == sample_two(1000, 0.3, 4, 3));
  CHECK(sample_two(1000, 1e-12, 1).count(2) == 0);
  CHECK_THROWS_AS(sample_two(10, 0.0, 1), DensityError);
}

TEST_CASE("second class particle placement") {
  // p -> 1 forces the all-2 backbone.
  const ScpSample forced = sample_three_with_scp(2, 1.0 - 1e-15, 3);
  CHECK(forced.omega.str() == "12");
  CHECK(forced.U == 1);

  // p -> 0 forces "00"; U is uniform on {1, 2}.
  long first = 0;
  const long draws = 100000;
  for (long i = 0; i < draws; ++i) first += sample_three_with_scp(2, 1e-15, 8, std::uint64_t(i)).U == 1;
  CHECK(std::abs(first - draws / 2) < 3 * std::sqrt(draws * 0.25));

  const ScpSample x = sample_three_with_scp(500, 0.4, 12, 1);
  const ScpSample y = sample_three_with_scp(500, 0.4, 12, 1);
  CHECK(x.omega == y.omega);
  CHECK(x.U == y.U);
  CHECK(x.omega.count(1) == 1);
  CHECK(x.omega[std::size_t(x.U - 1)] == 1);
}

TEST_CASE("conditional uniformity and the position law") {
  // With p -> 0 the backbone is all zeros, so U must be uniform on 1..n.
  const long n = 10;
  const BiString b = BiString::parse(std::string(n, '0'));
  std::map<long, long> hits;
  const long draws = 100000;
  for (long i = 0; i < draws; ++i) {
    const ScpSample s = sample_three_with_scp(n, 1e-15, 77, std::uint64_t(i));
    REQUIRE(project(s.omega, Projection::merge_low) == b);
    ++hits[s.U];
  }
  double chi2 = 0;
  const double expected = double(draws) / double(n);
  for (long u = 1; u <= n; ++u) chi2 += std::pow(hits[u] - expected, 2) / expected;
  // 9 degrees of freedom; the 0.999 quantile is 27.88.
  CHECK(chi2 < 27.88);
  for (long m = 0; m <= n; ++m) {
    long below = 0;
    for (const auto& [pos, c] : hits)
      if (pos <= m) below += c;
    const double p = u_position_cdf(b, m);
    const double se = std::sqrt(p * (1 - p) / draws);
    CHECK(std::abs(double(below) / draws - p) <= 3 * se + 1e-12);
  }
}
