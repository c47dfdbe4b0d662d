#include "tasep/rng.hpp"

#include <cmath>
#include <cstdlib>

namespace tasep {

Block philox4x64_10(Block c, std::array<std::uint64_t, 2> k) {
  constexpr std::uint64_t M0 = 0xD2E7470EE14C6C93ULL;
  constexpr std::uint64_t M1 = 0xCA5A826395121157ULL;
  constexpr std::uint64_t W0 = 0x9E3779B97F4A7C15ULL;
  constexpr std::uint64_t W1 = 0xBB67AE8584CAA73BULL;
  for (int round = 0; round < 10; ++round) {
    const auto p0 = static_cast<uint128>(M0) * c[0];
    const auto p1 = static_cast<uint128>(M1) * c[2];
    c = {std::uint64_t(p1 >> 64) ^ c[1] ^ k[0], std::uint64_t(p1), std::uint64_t(p0 >> 64) ^ c[3] ^ k[1],
         std::uint64_t(p0)};
    k[0] += W0;
    k[1] += W1;
  }
  return c;
}

namespace {

struct ZigguratTables {
  std::uint32_t kn[128];
  double wn[128];
  double fn[128];

  ZigguratTables() {
    const double m1 = 2147483648.0;
    const double vn = 9.91256303526217e-3;
    double dn = 3.442619855899;
    double tn = dn;
    const double q = vn / std::exp(-0.5 * dn * dn);
    kn[0] = std::uint32_t((dn / q) * m1);
    kn[1] = 0;
    wn[0] = q / m1;
    wn[127] = dn / m1;
    fn[0] = 1.0;
    fn[127] = std::exp(-0.5 * dn * dn);
    for (int i = 126; i >= 1; --i) {
      dn = std::sqrt(-2.0 * std::log(vn / dn + std::exp(-0.5 * dn * dn)));
      kn[i + 1] = std::uint32_t((dn / tn) * m1);
      tn = dn;
      fn[i] = std::exp(-0.5 * dn * dn);
      wn[i] = dn / m1;
    }
  }
};

const ZigguratTables& tables() {
  static const ZigguratTables t;
  return t;
}

}  // namespace

double CounterRng::normal() {
  constexpr double r = 3.442620;
  const ZigguratTables& z = tables();
  while (true) {
    const std::uint64_t draw = (*this)();
    const auto hz = std::int32_t(std::uint32_t(draw >> 32));
    const unsigned iz = unsigned(draw & 127U);
    const double x = hz * z.wn[iz];
    if (std::uint32_t(std::llabs(hz)) < z.kn[iz]) return x;
    if (iz == 0) {
      double tail;
      double y;
      do {
        tail = -std::log(uniform_open01()) * (1.0 / r);
        y = -std::log(uniform_open01());
      } while (y + y < tail * tail);
      return hz > 0 ? r + tail : -r - tail;
    }
    if (z.fn[iz] + uniform01() * (z.fn[iz - 1] - z.fn[iz]) < std::exp(-0.5 * x * x)) return x;
  }
}

std::uint64_t bernoulli_threshold(double p) {
  if (p <= 0.0) return 0;
  return std::uint64_t(std::ldexp(p, 64));
}

}  // namespace tasep
