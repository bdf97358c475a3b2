#include "thompson/rng.hpp"

namespace thompson {

std::uint64_t mix64(std::uint64_t v) {
  v ^= v >> 30;
  v *= 0xbf58476d1ce4e5b9ull;
  v ^= v >> 27;
  v *= 0x94d049bb133111ebull;
  v ^= v >> 31;
  return v;
}

std::uint64_t SplitMix64::next() {
  state_ += 0x9e3779b97f4a7c15ull;
  return mix64(state_);
}

std::uint64_t SplitMix64::next_below(std::uint64_t bound) {
  return next() % bound;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag_a,
                          std::uint64_t tag_b, std::uint64_t tag_c) {
  std::uint64_t h = mix64(base);
  h = mix64(h ^ tag_a);
  h = mix64(h ^ tag_b);
  h = mix64(h ^ tag_c);
  return h;
}

Word random_word(std::size_t length, Index max_index, SplitMix64& rng) {
  Word out;
  out.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    const Index index = rng.next_below(max_index + 1);
    const int sign = (rng.next() & 1) ? +1 : -1;
    out.emplace_back(index, sign);
  }
  return out;
}

}  // namespace thompson
