#pragma once

#include <cstdint>
#include <string>

#include "tasep/rng.hpp"
#include "tasep/strings.hpp"

namespace tasep {

/// Raised when a requested density leaves (0, 1).
class DensityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Convention { plus, minus };

/// 1/2 + lambda/(2 sqrt n) for `plus`, 1/2 - lambda/(2 sqrt n) for `minus`.
double critical_density(long n, double lambda, Convention convention);

enum class Scaling {
  fixed,
  critical_plus,   // p = 1/2 + lambda/(2 sqrt n), used by the two-type limit law
  critical_minus,  // p = 1/2 - lambda/(2 sqrt n), used by the excess limit law
};

const char* to_string(Scaling s);
Scaling parse_scaling(const std::string& s);

struct InitialCondition {
  long n = 1;
  Scaling scaling = Scaling::fixed;
  double p = 0.5;       // used when scaling == fixed
  double lambda = 0.0;  // used by the critical scalings

  /// Density of 2s; throws DensityError outside (0, 1).
  double density() const;
};

/// i.i.d. symbols, 2 with probability p. Symbol i is 2 iff the i-th draw of
/// stream (seed, index, backbone) is below bernoulli_threshold(p).
BiString sample_two(long n, double p, std::uint64_t seed, std::uint64_t index = 0);

struct ScpSample {
  TriString omega;
  long U = 1;  // 1-based
};

/// Backbone from sample_two, then U uniform over its 0s (one draw from stream
/// (seed, index, second_class), mapped by CounterRng::below). An all-2
/// backbone gets its first symbol replaced and U = 1.
ScpSample sample_three_with_scp(long n, double p, std::uint64_t seed, std::uint64_t index = 0);

}  // namespace tasep
