#include "tcover/prng.hpp"

namespace tcover {

std::uint64_t RngStream::below(std::uint64_t bound) {
  // Lemire's multiply-shift with rejection.
  __extension__ using u128 = unsigned __int128;
  std::uint64_t x = (*this)();
  u128 m = static_cast<u128>(x) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      x = (*this)();
      m = static_cast<u128>(x) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t label) {
  return splitmix64_mix(seed ^ splitmix64_mix(label + CounterRng::kGamma));
}

}  // namespace tcover
