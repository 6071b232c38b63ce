#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace recon {

using Rng = std::mt19937_64;

// splitmix64 finaliser.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed for one job, a pure function of the master seed and the job's
/// coordinates: seed = mix64(... mix64(mix64(master) ^ c0) ^ c1 ...).
/// Results keyed this way do not depend on scheduling or worker count.
constexpr std::uint64_t derive_seed(std::uint64_t master,
                                    std::initializer_list<std::uint64_t> coordinates) noexcept {
  std::uint64_t state = mix64(master);
  for (const auto c : coordinates) {
    state = mix64(state ^ c);
  }
  return state;
}

}  // namespace recon
