#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tasep {

using Symbol = std::uint8_t;

/// Raised when text does not describe a valid configuration.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Alphabet { binary, ternary };

/// A finite configuration over {0,2} (binary) or {0,1,2} (ternary), one byte
/// per symbol. Positions in the public API of the structure module are
/// 1-based; the storage here is 0-based.
///
/// Serialized as the ASCII digits of its symbols with no separators.
template <Alphabet A>
class Configuration {
 public:
  Configuration() = default;

  explicit Configuration(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty()) throw ParseError("configuration must have length >= 1");
    for (Symbol s : symbols_) {
      if (!admissible(s)) throw ParseError("symbol out of alphabet: " + std::to_string(int(s)));
    }
  }

  /// Skips validation; for kernels that produce symbols by construction.
  static Configuration unchecked(std::vector<Symbol> symbols) {
    Configuration c;
    c.symbols_ = std::move(symbols);
    return c;
  }

  static Configuration parse(std::string_view text) {
    std::vector<Symbol> out;
    out.reserve(text.size());
    for (char ch : text) {
      if (ch < '0' || ch > '2' || !admissible(Symbol(ch - '0'))) {
        throw ParseError(std::string("unknown symbol '") + ch + "' in \"" + std::string(text) + "\"");
      }
      out.push_back(Symbol(ch - '0'));
    }
    return Configuration(std::move(out));
  }

  static constexpr bool admissible(Symbol s) {
    if constexpr (A == Alphabet::binary) return s == 0 || s == 2;
    else return s <= 2;
  }

  std::size_t size() const { return symbols_.size(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  std::span<const Symbol> symbols() const { return symbols_; }
  std::vector<Symbol> release() && { return std::move(symbols_); }

  std::size_t count(Symbol s) const {
    return std::size_t(std::count(symbols_.begin(), symbols_.end(), s));
  }

  std::string str() const {
    std::string s(symbols_.size(), '0');
    for (std::size_t i = 0; i < symbols_.size(); ++i) s[i] = char('0' + symbols_[i]);
    return s;
  }

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  std::vector<Symbol> symbols_;
};

using BiString = Configuration<Alphabet::binary>;
using TriString = Configuration<Alphabet::ternary>;

enum class Projection {
  merge_low = 1,   // 0,1 -> 0 ; 2 -> 2
  merge_high = 2,  // 0 -> 0 ; 1,2 -> 2
};

BiString project(const TriString& omega, Projection which);

TriString embed(const BiString& b);

bool is_sorted_nonincreasing(std::span<const Symbol> s);

template <Alphabet A>
bool is_sorted_nonincreasing(const Configuration<A>& c) {
  return is_sorted_nonincreasing(c.symbols());
}

}  // namespace tasep
