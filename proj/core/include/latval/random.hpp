#pragma once

#include <cstdint>
#include <random>

namespace latval {

using Engine = std::mt19937_64;

/// Counter-based stream split: every (seed, stream, index) triple gets an
/// independent, reproducible engine.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

inline Engine make_engine(std::uint64_t seed, std::uint64_t stream = 0, std::uint64_t index = 0) {
  return Engine(derive_seed(seed, stream, index));
}

inline std::int64_t uniform_int(Engine& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

}  // namespace latval
