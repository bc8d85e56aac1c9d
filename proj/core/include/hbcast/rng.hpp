#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <utility>
#include <vector>

namespace hbcast {

/// SplitMix64 (Steele, Lea, Flood 2014). Every random draw in the library goes through
/// this generator with the bounded-integer and shuffle helpers below, so instances are
/// reproducible bit-for-bit on any platform. The standard <random> distributions are
/// implementation-defined and are not used.
class SplitMix64 {
 public:
  static constexpr const char* kAlgorithm = "splitmix64";

  using result_type = std::uint64_t;
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  constexpr result_type operator()() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound); bound must be positive. Rejection sampling, no modulo bias.
  constexpr std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = max() - max() % bound;
    for (;;) {
      const std::uint64_t x = (*this)();
      if (x < limit) return x % bound;
    }
  }

  /// Uniform in [lo, hi], inclusive.
  constexpr std::uint64_t between(std::uint64_t lo, std::uint64_t hi) {
    return lo + below(hi - lo + 1);
  }

  /// Fisher-Yates.
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[below(i)]);
    }
  }

  /// A generator for an independent sub-stream, keyed by `tag`.
  constexpr SplitMix64 split(std::uint64_t tag) {
    SplitMix64 child((*this)() ^ mix(tag));
    return child;
  }

  /// SplitMix64 output function applied to a single value.
  static constexpr std::uint64_t mix(std::uint64_t x) {
    SplitMix64 g(x);
    return g();
  }

 private:
  std::uint64_t state_;
};

/// Order-sensitive hash of several 64-bit values; used to derive per-trial seeds.
constexpr std::uint64_t derive_seed(std::initializer_list<std::uint64_t> parts) {
  std::uint64_t h = 0x6a09e667f3bcc909ULL;
  for (std::uint64_t p : parts) h = SplitMix64::mix(h ^ SplitMix64::mix(p));
  return h;
}

}  // namespace hbcast
