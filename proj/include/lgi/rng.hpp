#pragma once

#include <cstdint>
#include <random>

namespace lgi {

/// Master seed for every randomized operation.
struct RngSeed {
  std::uint64_t value = 0;

  friend bool operator==(RngSeed, RngSeed) = default;
};

/// SplitMix64 finalizer; a bijection on 64-bit words.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Counter-based split: the seed of stream `counter` derived from `master`.
/// Streams for distinct counters are independent for practical purposes and
/// do not depend on the order in which they are requested.
constexpr RngSeed derive_seed(RngSeed master, std::uint64_t counter) noexcept {
  return RngSeed{splitmix64(master.value ^ splitmix64(counter + 1))};
}

using Engine = std::mt19937_64;

inline Engine make_engine(RngSeed seed) { return Engine{seed.value}; }

}  // namespace lgi
