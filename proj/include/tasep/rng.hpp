#pragma once

#include <array>
#include <cstdint>

namespace tasep {

using Block = std::array<std::uint64_t, 4>;
__extension__ typedef unsigned __int128 uint128;

/// Philox4x64 with 10 rounds (Salmon et al., Random123). Bit-compatible with
/// numpy.random.Philox.
Block philox4x64_10(Block counter, std::array<std::uint64_t, 2> key);

/// Independent stream families. Values are part of the reproducibility
/// contract; never renumber.
enum class Stream : std::uint64_t {
  backbone = 1,
  second_class = 2,
  brownian = 3,
  excursion = 4,
};

/// Identifies one random stream: (master seed, sample index, family).
struct StreamKey {
  std::uint64_t seed = 0;
  std::uint64_t index = 0;
  Stream tag = Stream::backbone;
};

/// Counter-based generator. Block b of stream (seed, index, tag) is
/// philox4x64_10({b, index, 0, 0}, {seed, tag}); words are consumed in order
/// 0..3, then block b+1. Streams never share state, so results do not depend
/// on how samples are scheduled across threads.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  explicit CounterRng(StreamKey key) : key_{key.seed, std::uint64_t(key.tag)}, index_(key.index) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type(0); }

  result_type operator()() {
    if (pos_ == 4) {
      buffer_ = philox4x64_10({block_++, index_, 0, 0}, key_);
      pos_ = 0;
    }
    return buffer_[pos_++];
  }

  /// 53-bit uniform in [0, 1).
  double uniform01() { return double((*this)() >> 11) * 0x1.0p-53; }

  /// Uniform in (0, 1); safe for log.
  double uniform_open01() { return (double((*this)() >> 11) + 0.5) * 0x1.0p-53; }

  /// Uniform integer in [0, bound) by 128-bit multiply-high.
  std::uint64_t below(std::uint64_t bound) {
    return std::uint64_t((static_cast<uint128>((*this)()) * bound) >> 64);
  }

  /// Standard normal by the 128-layer Marsaglia-Tsang ziggurat. The layer
  /// index comes from the low 7 bits of a draw, the signed value from its
  /// high 32 bits.
  double normal();

 private:
  std::array<std::uint64_t, 2> key_;
  std::uint64_t index_;
  std::uint64_t block_ = 0;
  Block buffer_{};
  unsigned pos_ = 4;
};

/// Threshold t with P(draw < t) = p for a uniform 64-bit draw (p in [0,1)).
std::uint64_t bernoulli_threshold(double p);

}  // namespace tasep
