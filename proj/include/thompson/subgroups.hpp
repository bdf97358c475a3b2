#ifndef THOMPSON_SUBGROUPS_HPP
#define THOMPSON_SUBGROUPS_HPP

#include <cstdint>
#include <vector>

#include "thompson/normal_word.hpp"
#include "thompson/rng.hpp"

namespace thompson {

// The commuting pair of subgroups used by the key exchange, for a chosen
// s >= 2: A_s is generated by x_0 x_1^{-1}, ..., x_0 x_s^{-1} and consists of
// the elements whose normal form has positive and negative parts of equal
// length m with i_k - k < s and j_k - k < s for k = 1..m; B_s is everything
// written in the generators x_{s+1}, x_{s+2}, ...

struct GenerationStalledError : Error {
  using Error::Error;
};

struct SubgroupParams {
  std::uint32_t s = 3;
  std::uint64_t M = 256;  // target normal-form length
};

void validate(const SubgroupParams& params);  // s >= 2, M >= 1

bool in_A(const NormalWord& w, std::uint32_t s);
bool in_B(const NormalWord& w, std::uint32_t s);

std::vector<NormalWord> a_generators(std::uint32_t s);     // x_0 x_k^{-1}, k = 1..s
std::vector<NormalWord> b_generators(std::uint32_t s);     // x_{s+1} .. x_{2s}
std::vector<NormalWord> base_generators(std::uint32_t s);  // x_0 .. x_{s+2}

// Incremental random elements: starting from the identity, multiply on the
// right by a uniformly chosen signed generator and renormalize, stopping at
// the first word of length >= M. A step cap of 64*M guards the loop.
NormalWord gen_A(const SubgroupParams& params, SplitMix64& rng);
NormalWord gen_B(const SubgroupParams& params, SplitMix64& rng);
NormalWord gen_base_word(const SubgroupParams& params, SplitMix64& rng);

}  // namespace thompson

#endif
