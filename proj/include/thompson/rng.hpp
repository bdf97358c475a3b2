#ifndef THOMPSON_RNG_HPP
#define THOMPSON_RNG_HPP

#include <cstdint>

#include "thompson/word.hpp"

namespace thompson {

/// SplitMix64 finalizer (Steele/Lea/Vigna); also used for seed derivation.
std::uint64_t mix64(std::uint64_t v);

/// SplitMix64. Fixed here as the project-wide generator because the whole
/// stream is reproducible from one 64-bit seed in any language.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();

  /// next() % bound; the bias is immaterial for the tiny bounds used here.
  std::uint64_t next_below(std::uint64_t bound);

  /// Independent child stream seeded from this one.
  SplitMix64 substream() { return SplitMix64(next()); }

private:
  std::uint64_t state_;
};

/// Seed for a named subcomputation, stable across runs and platforms.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag_a,
                          std::uint64_t tag_b = 0, std::uint64_t tag_c = 0);

/// Uniform letters with indices in [0, max_index] and uniform signs.
Word random_word(std::size_t length, Index max_index, SplitMix64& rng);

}  // namespace thompson

#endif
