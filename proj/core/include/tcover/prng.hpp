#pragma once

#include <cstdint>
#include <string_view>

namespace tcover {

/// Name and version of the generator, embedded in every experiment output.
inline constexpr std::string_view kGeneratorName = "ctr-splitmix64/v1";

/// SplitMix64 output function (Steele, Lea, Flood 2014).
constexpr std::uint64_t splitmix64_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Counter-based generator: `bits(c)` is the (c+1)-th output of SplitMix64 seeded
/// with `key`. Every draw is a pure function of (key, counter), so samples do not
/// depend on evaluation order or thread scheduling.
class CounterRng {
 public:
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

  explicit constexpr CounterRng(std::uint64_t key) : key_(key) {}

  constexpr std::uint64_t key() const { return key_; }

  constexpr std::uint64_t bits(std::uint64_t counter) const {
    return splitmix64_mix(key_ + (counter + 1) * kGamma);
  }

  /// Uniform double in [0, 1) from the top 53 bits.
  constexpr double uniform(std::uint64_t counter) const {
    return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t key_;
};

/// Sequential view over a CounterRng. Satisfies UniformRandomBitGenerator, but the
/// library never routes it through std distributions (their output is not portable).
class RngStream {
 public:
  using result_type = std::uint64_t;

  explicit RngStream(std::uint64_t seed) : rng_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

  result_type operator()() { return rng_.bits(counter_++); }

  double uniform() { return rng_.uniform(counter_++); }

  /// Unbiased integer in [0, bound). `bound` must be positive.
  std::uint64_t below(std::uint64_t bound);

  bool bernoulli(double p) { return uniform() < p; }

  std::uint64_t position() const { return counter_; }

 private:
  CounterRng rng_;
  std::uint64_t counter_ = 0;
};

/// Child seed for a labelled sub-experiment, e.g. derive_seed(seed, trial).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t label);

}  // namespace tcover
