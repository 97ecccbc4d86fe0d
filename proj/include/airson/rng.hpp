#pragma once

#include <cstdint>
#include <random>

namespace airson {

using Rng = std::mt19937_64;

/// Independent random streams derived from one master seed.
///
/// A stream seed is splitmix64(master + golden * (stream + 1)); the counter
/// values below are fixed so that, for example, changing the solver never
/// perturbs the UE draw of a scenario generated from the same master seed.
namespace stream {
inline constexpr std::uint64_t kScenario = 0;
inline constexpr std::uint64_t kSolver = 1;
inline constexpr std::uint64_t kEvents = 2;
/// Re-solve after the k-th failure event uses kResolveBase + k.
inline constexpr std::uint64_t kResolveBase = 16;
}  // namespace stream

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream_id) noexcept {
  return splitmix64(master + 0x9e3779b97f4a7c15ULL * (stream_id + 1));
}

inline Rng make_rng(std::uint64_t master, std::uint64_t stream_id) {
  return Rng(derive_seed(master, stream_id));
}

}  // namespace airson
