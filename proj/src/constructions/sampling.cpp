#include "dioph/sampling.hpp"

#include <limits>

#include "dioph/errors.hpp"

namespace dioph {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t LevelSampler::uniform_below(std::uint64_t bound) {
  if (bound == 0) throw UsageError("empty sampling range");
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  // 2^64 mod bound; draws in the final partial block are rejected.
  const std::uint64_t rem = (kMax % bound + 1) % bound;
  for (;;) {
    std::uint64_t x = gen_();
    if (rem == 0 || x <= kMax - rem) return x % bound;
  }
}

}  // namespace dioph
