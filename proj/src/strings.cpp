#include "tasep/strings.hpp"

namespace tasep {

BiString project(const TriString& omega, Projection which) {
  std::vector<Symbol> out(omega.size());
  const Symbol one_maps_to = which == Projection::merge_low ? 0 : 2;
  for (std::size_t i = 0; i < omega.size(); ++i) {
    out[i] = omega[i] == 1 ? one_maps_to : omega[i];
  }
  return BiString::unchecked(std::move(out));
}

TriString embed(const BiString& b) {
  return TriString::unchecked(std::vector<Symbol>(b.symbols().begin(), b.symbols().end()));
}

bool is_sorted_nonincreasing(std::span<const Symbol> s) {
  return std::is_sorted(s.begin(), s.end(), [](Symbol a, Symbol b) { return a > b; });
}

}  // namespace tasep
