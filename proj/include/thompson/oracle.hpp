#ifndef THOMPSON_ORACLE_HPP
#define THOMPSON_ORACLE_HPP

#include <cstdint>

#include "thompson/normal_word.hpp"

namespace thompson::oracle {

// Reference implementation of the rewriting rules, kept deliberately naive
// and independent of the merge-based engine so it can serve as a test oracle.
//
// Rules, for all i < k:
//   x_k x_i            -> x_i x_{k+1}
//   x_k^{-1} x_i       -> x_i x_{k+1}^{-1}
//   x_i^{-1} x_k       -> x_{k+1} x_i^{-1}
//   x_i^{-1} x_k^{-1}  -> x_{k+1}^{-1} x_i^{-1}
// and for all i:
//   x_i^{-1} x_i       -> 1

/// Applies the leftmost applicable rule until none applies.
SeminormalWord oracle_seminormal(const Word& w);

/// Same reduction with a randomized rule-choice strategy (confluence checks).
SeminormalWord oracle_seminormal_randomized(const Word& w, std::uint64_t seed);

/// oracle_seminormal followed by naive removal of pairs that violate the
/// normal-form condition, always taking the innermost offending pair.
NormalWord oracle_normal(const Word& w);

}  // namespace thompson::oracle

#endif
