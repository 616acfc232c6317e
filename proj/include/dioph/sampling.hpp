#pragma once

#include <cstdint>
#include <random>

namespace dioph {

// splitmix64 finalizer, used to derive independent per-trial seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

/// Seeded draws that do not depend on the standard library's distribution
/// implementations, so samples agree across platforms.
class LevelSampler {
 public:
  explicit LevelSampler(std::uint64_t seed) : gen_(seed) {}

  // Uniform on {0, ..., bound - 1} by rejection; bound >= 1.
  std::uint64_t uniform_below(std::uint64_t bound);

 private:
  std::mt19937_64 gen_;
};

}  // namespace dioph
